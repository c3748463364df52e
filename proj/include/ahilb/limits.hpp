#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ahilb {

/// Input that breaks an arrangement or point-cloud invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap would be exceeded.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resource caps. The subset enumeration is 2^max_subspaces intersections;
/// the oracle builds matrices with up to max_monomials columns.
struct Limits {
  std::size_t max_subspaces = 16;
  std::size_t max_monomials = 3000;

  /// Defaults overridden by AHILB_MAX_SUBSPACES / AHILB_MAX_MONOMIALS.
  static Limits from_env() {
    Limits l;
    auto read = [](const char* name, std::size_t& slot) {
      const char* raw = std::getenv(name);
      if (raw == nullptr || *raw == '\0') return;
      char* end = nullptr;
      const unsigned long long v = std::strtoull(raw, &end, 10);
      if (*end != '\0' || v == 0) throw std::invalid_argument(std::string(name) + " must be a positive integer");
      slot = static_cast<std::size_t>(v);
    };
    read("AHILB_MAX_SUBSPACES", l.max_subspaces);
    read("AHILB_MAX_MONOMIALS", l.max_monomials);
    return l;
  }
};

}  // namespace ahilb
