// cellcat: command-line driver for the diagram, cellularity and sl2 tools.
//
//   cellcat tl dim 4 2
//   cellcat tl compose '{"n":2,"m":2,"pairs":[[1,2],[3,4]]}' @e1.json
//   cellcat verify sl2 --max-n 4 --order both --format text
//   cellcat qgrp canon 4 --out canon4.json
//
// Exit status: 0 pass, 1 a check failed, 2 bad input.

#include "cellcat/driver.hpp"
#include "cellcat/json_io.hpp"
#include "cellcat/tl_diagram.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

namespace {

using namespace cellcat;
using driver::InputError;
using driver::Report;

constexpr int kMaxObjects = 8;

struct Config {
  std::string format = "json";
  std::string out;
  std::uint64_t seed = driver::kDefaultSeed;
};

void emit(const Report& r, const Config& cfg) {
  const std::string payload = (cfg.format == "json" ? r.body.dump(2) : r.text) + "\n";
  if (cfg.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw InputError("cannot write " + cfg.out);
  f << payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cellular categories: Temperley-Lieb diagrams and the sl2 canonical basis"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", cfg.out, "Write output to this file");
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");

  std::function<Report()> action;
  auto sub = [](CLI::App* parent, const std::string& name, const std::string& desc) {
    auto* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  // tl
  auto* tl_cmd = sub(&app, "tl", "Temperley-Lieb diagrams");
  tl_cmd->require_subcommand(1);
  int dim_n = 0, dim_m = 0;
  auto* dim = sub(tl_cmd, "dim", "Number of diagrams n -> m");
  dim->add_option("n", dim_n)->required()->check(CLI::Range(0, 24));
  dim->add_option("m", dim_m)->required()->check(CLI::Range(0, 24));
  dim->callback([&] { action = [&] { return driver::tl_dim(dim_n, dim_m); }; });

  std::string lhs, rhs;
  auto* comp = sub(tl_cmd, "compose", "Compose two morphisms, first argument first (JSON text or @file)");
  comp->add_option("first", lhs)->required();
  comp->add_option("second", rhs)->required();
  comp->callback([&] { action = [&] { return driver::tl_compose(lhs, rhs); }; });

  int rel_max = 5;
  auto* rel = sub(tl_cmd, "relations", "Check the e_i relations and category laws");
  rel->add_option("--max-n", rel_max)->check(CLI::Range(1, kMaxObjects));
  rel->callback([&] { action = [&] { return driver::tl_relations(rel_max, cfg.seed); }; });

  int gram_n = 0, gram_t = 0;
  auto* gram = sub(tl_cmd, "gram", "Gram matrix of the cell form on K(n, t)");
  gram->add_option("n", gram_n)->required()->check(CLI::Range(0, kMaxObjects));
  gram->add_option("t", gram_t)->required()->check(CLI::Range(0, kMaxObjects));
  gram->callback([&] {
    if (gram_t > gram_n) throw CLI::ValidationError("t", "must not exceed n");
    action = [&] { return driver::tl_gram(gram_n, gram_t); };
  });

  // verify
  std::string datum_name, orientation = "declared";
  int verify_max = 0;
  auto* ver = sub(&app, "verify", "Check C-1, C-2, C-3 over all object triples");
  ver->add_option("datum", datum_name)->required()->check(CLI::IsMember({"tl", "sl2"}));
  ver->add_option("--max-n", verify_max, "Largest object (default 5 for tl, 3 for sl2)")
      ->check(CLI::Range(1, kMaxObjects));
  ver->add_option("--order", orientation)->check(CLI::IsMember({"declared", "inferred", "both", "reversed"}));
  ver->callback([&] {
    if (verify_max == 0) verify_max = datum_name == "tl" ? 5 : 3;
    action = [&] { return driver::verify(datum_name, verify_max, orientation); };
  });

  // qgrp
  auto* q = sub(&app, "qgrp", "sl2 tensor powers and canonical bases");
  q->require_subcommand(1);
  int canon_n = 0;
  auto* canon = sub(q, "canon", "Canonical basis of the n-th tensor power");
  canon->add_option("n", canon_n)->required()->check(CLI::Range(0, kMaxObjects));
  canon->callback([&] { action = [&] { return driver::qgrp_canon(canon_n); }; });

  int compare_n = 0;
  auto* cmp = sub(q, "compare", "Cup diagram basis against dual canonical invariants");
  cmp->add_option("n", compare_n)->required()->check(CLI::Range(0, kMaxObjects));
  cmp->callback([&] { action = [&] { return driver::qgrp_compare(compare_n); }; });

  int conv_max = 6;
  auto* conv = sub(q, "conventions", "Convention metadata and the selection table");
  conv->add_option("--max-n", conv_max)->check(CLI::Range(1, kMaxObjects));
  conv->callback([&] { action = [&] { return driver::qgrp_conventions(conv_max); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Report r = action();
    emit(r, cfg);
    return r.pass ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const io::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const tl::DiagramError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const nlohmann::ordered_json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
