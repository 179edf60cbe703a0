#pragma once

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cellcat::driver {

/// Bad user input (malformed JSON, unreadable file, incompatible shapes).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A command's result in both output formats; pass = false means a check failed.
struct Report {
  nlohmann::ordered_json body;
  std::string text;
  bool pass = true;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

Report tl_dim(int n, int m);
/// Arguments are JSON text, or "@path" to read a file.
Report tl_compose(const std::string& first, const std::string& second);
Report tl_relations(int max_n, std::uint64_t seed = kDefaultSeed);
Report tl_gram(int n, int t);

/// datum is "tl" or "sl2"; orientation is declared, inferred, both or reversed.
Report verify(const std::string& datum, int max_n, const std::string& orientation);

Report qgrp_canon(int n);
Report qgrp_compare(int n);
/// Filtration check of all four half-lattice / bracketing combinations up to max_n.
Report qgrp_conventions(int max_n);

}  // namespace cellcat::driver
