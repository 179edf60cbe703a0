#include "cellcat/driver.hpp"

#include "cellcat/json_io.hpp"
#include "cellcat/sl2.hpp"
#include "cellcat/sl2_hom.hpp"
#include "cellcat/tl_datum.hpp"
#include "cellcat/tl_diagram.hpp"
#include "cellcat/tl_relations.hpp"
#include "cellcat/verifier.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace cellcat::driver {

using json = nlohmann::ordered_json;

namespace {

std::string morphism_text(const tl::Morphism& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [d, c] : f.terms()) {
    if (!s.empty()) s += " + ";
    const std::string cs = c.to_string();
    if (cs != "1") s += (cs.find(' ') == std::string::npos ? cs : "(" + cs + ")") + " ";
    s += "[" + cellular::diagram_name(d) + "]";
  }
  return s;
}

std::string matrix_text(const cellular::DeltaMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? ", " : "") + m[i][j].to_string();
    s += "]";
  }
  return s + "]";
}

json read_json_argument(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw InputError("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

struct Tally {
  std::size_t total = 0, passed = 0;
  json first_failure;
  void add(bool ok, const json& report) {
    ++total;
    if (ok)
      ++passed;
    else if (first_failure.is_null())
      first_failure = report;
  }
  json summary() const {
    return {{"checked", total}, {"passed", passed}, {"first_failure", first_failure}};
  }
};

json run_axioms(cellular::Verifier& v, const std::string& orientation, int max_n, bool& pass,
                std::string& text) {
  Tally c1, c2, c3;
  json reports = json::array();
  for (int n = 0; n <= max_n; ++n)
    for (int m = 0; m <= max_n; ++m) {
      const auto r1 = v.verify_c1(n, m);
      c1.add(r1.pass, cellular::to_json(r1));
      const auto r2 = v.verify_c2(n, m);
      c2.add(r2.pass, cellular::to_json(r2));
    }
  for (int p = 0; p <= max_n; ++p)
    for (int n = 0; n <= max_n; ++n)
      for (int m = 0; m <= max_n; ++m) {
        const auto r3 = v.verify_c3(p, n, m, false);
        c3.add(r3.pass, cellular::to_json(r3, false));
      }
  pass = c1.passed == c1.total && c2.passed == c2.total && c3.passed == c3.total;
  auto line = [](const char* name, const Tally& t) {
    std::string s = std::string("  ") + name + "  " + std::to_string(t.passed) + "/" + std::to_string(t.total);
    if (!t.first_failure.is_null()) s += "  first failure: " + t.first_failure.dump();
    return s + "\n";
  };
  text += orientation + " order " + v.datum().poset.describe() + ": " + (pass ? "pass" : "FAIL") + "\n" +
          line("C-1", c1) + line("C-2", c2) + line("C-3", c3);
  return {{"orientation", orientation},
          {"order", v.datum().poset.describe()},
          {"status", pass ? "pass" : "fail"},
          {"C-1", c1.summary()},
          {"C-2", c2.summary()},
          {"C-3", c3.summary()}};
}

}  // namespace

// ---- tl ------------------------------------------------------------------------

Report tl_dim(int n, int m) {
  const auto count = tl::enumerate_diagrams(n, m).size();
  return {{{"n", n}, {"m", m}, {"dimension", count}}, std::to_string(count), true};
}

Report tl_compose(const std::string& a, const std::string& b) {
  const tl::Morphism f = io::morphism_from_json(read_json_argument(a));
  const tl::Morphism g = io::morphism_from_json(read_json_argument(b));
  if (f.m() != g.n())
    throw InputError("not composable: first has " + std::to_string(f.m()) + " top points, second has " +
                     std::to_string(g.n()) + " bottom points");
  const tl::Morphism h = tl::compose(f, g);
  return {io::to_json(h), morphism_text(h), true};
}

Report tl_relations(int max_n, std::uint64_t seed) {
  const auto rel = tl::check_relations(max_n);
  const auto laws = tl::check_category_laws(max_n, seed, 200);
  auto part = [](const tl::RelationReport& r) {
    return json{{"status", r.pass ? "pass" : "fail"}, {"checked", r.checked}, {"witness", r.witness}};
  };
  Report out;
  out.pass = rel.pass && laws.pass;
  out.body = {{"max_n", max_n},
              {"seed", seed},
              {"status", out.pass ? "pass" : "fail"},
              {"relations", part(rel)},
              {"category_laws", part(laws)}};
  out.text = "relations     " + std::to_string(rel.checked) + " identities  " + (rel.pass ? "pass" : "FAIL") +
             "\ncategory laws " + std::to_string(laws.checked) + " identities  " + (laws.pass ? "pass" : "FAIL");
  if (!rel.pass) out.text += "\n  witness: " + rel.witness.dump();
  if (!laws.pass) out.text += "\n  witness: " + laws.witness.dump();
  return out;
}

Report tl_gram(int n, int t) {
  cellular::Verifier v(cellular::tl_cell_datum(n));
  const auto g = v.bilinear_form(n, t);
  Report out{cellular::to_json(g), "", g.independent && g.symmetric};
  out.text = matrix_text(g.matrix);
  if (g.independent) out.text += "\ndet " + cellular::gram_determinant(g).to_string();
  if (!out.pass) out.text += "\nwitness: " + g.witness.dump();
  return out;
}

// ---- verify --------------------------------------------------------------------

Report verify(const std::string& which, int max_n, const std::string& orientation) {
  cellular::CellDatum datum;
  Report out;
  json counting = json::array();
  if (which == "tl") {
    datum = cellular::tl_cell_datum(max_n);
  } else {
    try {
      datum = sl2::build_sl2_cell_datum(max_n);
    } catch (const sl2::Sl2Error& e) {
      out.pass = false;
      out.body = {{"datum", which}, {"max_n", max_n}, {"status", "fail"}, {"error", e.what()}};
      out.text = std::string("construction failed: ") + e.what();
      return out;
    }
    for (int n = 0; n <= max_n; ++n)
      for (int m = 0; m <= max_n; ++m) {
        const auto c = sl2::counting_identity(n, m);
        out.pass = out.pass && c.pass;
        counting.push_back({{"n", n}, {"m", m}, {"b0", c.b0_count}, {"sum", c.product_sum}, {"pass", c.pass}});
      }
  }

  cellular::Verifier declared(datum);
  const auto inferred = declared.infer_cell_order();
  const bool consistent = inferred.order && inferred.consistent_with(datum.poset);

  json runs = json::array();
  std::string text;
  bool ok = true;
  if (orientation == "declared" || orientation == "both") {
    runs.push_back(run_axioms(declared, "declared", max_n, ok, text));
    out.pass = out.pass && ok;
  }
  if (orientation == "inferred" || orientation == "both") {
    if (!inferred.order) {
      out.pass = false;
      text += "inferred order: cyclic leakage, nothing to verify\n";
    } else {
      cellular::Verifier v(cellular::with_order(datum, *inferred.order));
      runs.push_back(run_axioms(v, "inferred", max_n, ok, text));
      out.pass = out.pass && ok;
    }
  }
  if (orientation == "reversed") {
    cellular::Verifier v(cellular::with_order(datum, datum.poset.reversed()));
    runs.push_back(run_axioms(v, "reversed", max_n, ok, text));
    out.pass = out.pass && ok;
  }

  out.pass = out.pass && inferred.acyclic;
  out.body = {{"datum", which},
              {"max_n", max_n},
              {"status", out.pass ? "pass" : "fail"},
              {"runs", runs},
              {"inferred_order", cellular::to_json(inferred)},
              {"inferred_consistent_with_declared", consistent}};
  if (which == "sl2") {
    out.body["counting_identity"] = counting;
    out.body["conventions"] = sl2::conventions_json();
  }
  text += "inferred order: " + (inferred.order ? inferred.order->describe() : std::string("cyclic")) +
          (consistent ? " (consistent with declared)" : "") + "\n";
  out.text = text + "result: " + (out.pass ? "pass" : "FAIL");
  return out;
}

// ---- qgrp ----------------------------------------------------------------------

Report qgrp_canon(int n) {
  const auto data = sl2::canonical_basis(n);
  json elements = json::array();
  std::string text;
  for (std::size_t i = 0; i < data.strings.size(); ++i) {
    elements.push_back(sl2::element_json(data, i));
    const std::string s = data.strings[i].to_string();
    text += (s.empty() ? "()" : s) + "  lambda=" + std::to_string(data.label[i]) + (data.hi[i] ? " hi" : "") +
            (data.lo[i] ? " lo" : "") + "  " + data.elements[i].to_string() + "\n";
  }
  json sizes = json::object();
  std::size_t accounted = 0;
  const auto partition = data.partition_sizes();
  for (auto it = partition.rbegin(); it != partition.rend(); ++it) {
    sizes[std::to_string(it->first)] = it->second;
    text += "|B[" + std::to_string(it->first) + "]| = " + std::to_string(it->second) + "\n";
  }
  for (const auto& [lambda, count] : partition)
    accounted += data.cells(lambda, true).size() * static_cast<std::size_t>(lambda + 1);
  const std::size_t dim = std::size_t{1} << n;
  const auto filtration = sl2::filtration_property(data);
  Report out;
  out.pass = accounted == dim && filtration.pass;
  out.body = {{"n", n},
              {"elements", elements},
              {"partition_sizes", sizes},
              {"dimension_accounting", {{"sum", accounted}, {"expected", dim}}},
              {"filtration", {{"status", filtration.pass ? "pass" : "fail"}, {"witness", filtration.witness}}},
              {"conventions", sl2::conventions_json()}};
  out.text = text + "sum |B[l]^hi| (l+1) = " + std::to_string(accounted) + " of " + std::to_string(dim) +
             "\nfiltration " + (filtration.pass ? "pass" : "FAIL");
  return out;
}

Report qgrp_compare(int n) {
  if (n % 2 != 0) throw InputError("compare needs an even tensor length");
  const auto cmp = sl2::compare_bases(n);
  Report out{cmp.report, "", cmp.matched};
  std::string text = cmp.matched ? "matched (" + cmp.normalization + ")\n" : "no normalization matched\n";
  for (const auto& attempt : cmp.report["attempts"]) {
    if (!attempt["matched"].get<bool>()) continue;
    for (const auto& p : attempt["pairs"])
      text += "  " + p["dual"].get<std::string>() + "  <->  [" + p["diagram"].get<std::string>() +
              "]  unit " + p["unit"].get<std::string>() + "\n";
    break;
  }
  out.text = text.substr(0, text.size() - 1);
  return out;
}

Report qgrp_conventions(int max_n) {
  json table = json::array();
  std::string text;
  bool only_default = true;
  const sl2::Conventions chosen{};
  for (auto half : {sl2::HalfLattice::kPositive, sl2::HalfLattice::kNegative})
    for (auto br : {sl2::Bracketing::kOneZero, sl2::Bracketing::kZeroOne}) {
      const sl2::Conventions c{half, br};
      json per_n = json::object();
      bool all = true;
      for (int n = 1; n <= max_n; ++n) {
        bool ok = false;
        try {
          ok = sl2::filtration_property(sl2::canonical_basis(n, c)).pass;
        } catch (const sl2::Sl2Error&) {
          ok = false;
        }
        per_n[std::to_string(n)] = ok;
        all = all && ok;
      }
      const bool is_chosen = half == chosen.half && br == chosen.bracketing;
      only_default = only_default && (all == is_chosen);
      table.push_back({{"half_lattice", sl2::to_string(half)},
                       {"bracketing", sl2::to_string(br)},
                       {"filtration_by_n", per_n},
                       {"all_pass", all},
                       {"selected", is_chosen}});
      text += sl2::to_string(half) + " / " + sl2::to_string(br) + ": " + (all ? "pass" : "fail") +
              (is_chosen ? "  (selected)" : "") + "\n";
    }
  Report out;
  out.pass = only_default;
  out.body = {{"conventions", sl2::conventions_json()}, {"max_n", max_n}, {"selection", table}};
  out.text = sl2::conventions_json().dump(2) + "\n" + text + "selected combination is the unique pass: " +
             (only_default ? "yes" : "NO");
  return out;
}

}  // namespace cellcat::driver
