import pytest

import cellcat

E1 = {"n": 2, "m": 2, "pairs": [[1, 2], [3, 4]]}


def catalan(k):
    c = [1]
    for j in range(1, k + 1):
        c.append(sum(c[i] * c[j - 1 - i] for i in range(j)))
    return c[k]


def test_laurent_arithmetic():
    v = cellcat.LaurentPoly.v()
    vi = cellcat.LaurentPoly({-1: 1})
    delta = v + vi
    assert delta.bar() == delta
    assert (v * vi).terms() == {0: 1}
    assert (delta * delta).terms() == {-2: 1, 0: 2, 2: 1}
    big = cellcat.LaurentPoly({3: 2**80})
    assert big.terms()[3] == 2**80


def test_diagram_counts():
    for n in range(7):
        for m in range(7 - n):
            expected = 0 if (n + m) % 2 else catalan((n + m) // 2)
            assert len(cellcat.enumerate_diagrams(n, m)) == expected
    assert cellcat.tl_dim(4, 2).body["dimension"] == 5


def test_compose_loop_and_star():
    square = cellcat.compose(E1, E1)
    assert square["terms"] == [{"diagram": E1, "coeff": [0, 1]}]
    assert cellcat.star(E1)["terms"][0]["diagram"] == E1
    with pytest.raises(ValueError):
        cellcat.compose({"n": 2, "m": 2, "pairs": [[1, 3], [2, 4]]}, E1)
    with pytest.raises(ValueError):
        cellcat.compose({"n": 1, "m": 1, "pairs": [[1, 2]]}, E1)


def test_relations_and_gram():
    assert cellcat.tl_relations(5, seed=11).passed
    gram = cellcat.tl_gram(3, 1)
    assert gram.body["matrix"] == [["δ", "1"], ["1", "δ"]]
    assert gram.body["determinant"] == "δ^2 - 1"


def test_verify_orders():
    report = cellcat.verify("tl", 3)
    assert report.passed
    assert report.body["inferred_order"]["covers"] == [[0, 2], [1, 3]]
    assert not cellcat.verify("tl", 3, "reversed").passed
    assert cellcat.verify("sl2", 3, "both").passed


def test_canonical_basis_partition():
    canon = cellcat.canonical_basis(4)
    assert canon.passed
    assert canon.body["partition_sizes"] == {"4": 5, "2": 9, "0": 2}
    assert len(canon.body["elements"]) == 16


def test_bar_involution_and_action():
    x = {"01": {0: 1}}
    once = cellcat.bar_involution(x, 2)
    assert cellcat.bar_involution(once, 2) == x
    assert cellcat.act("E", {"11": {0: 1}}, 2) != {}
    for inv in cellcat.invariants(4):
        assert cellcat.act("E", inv, 4) == {}
        assert cellcat.act("F", inv, 4) == {}


def test_coinvariants_and_comparison():
    for n in (0, 2, 4, 6):
        c = cellcat.coinvariants(n)
        assert c["b0_basis"] and c["dimension"] == catalan(n // 2)
    cmp = cellcat.compare_bases(4)
    assert cmp.passed and cmp.body["normalization"] == "direct"
    assert cellcat.conventions(4).passed
