#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <tuple>
#include <variant>

#include "tricert/lattice.hpp"
#include "tricert/rational.hpp"

namespace tricert {

inline constexpr const char* kEngineVersion = "1.0.0";

struct Triple {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t n = 0;  // lcm(2, p, q, r)

  /// Sorts the entries and fills n. Entries must be >= 1.
  static Triple make(std::int64_t p, std::int64_t q, std::int64_t r);

  TorusPoint v() const;
  bool hyperbolic() const;  // 1/p + 1/q + 1/r < 1
  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple& a, const Triple& b) {
    return std::tie(a.p, a.q, a.r) <=> std::tie(b.p, b.q, b.r);
  }
};

bool is_hyperbolic(std::int64_t p, std::int64_t q, std::int64_t r);

struct WitnessK {
  std::int64_t k;
  ExactRational distance;
  friend bool operator==(const WitnessK&, const WitnessK&) = default;
};

struct ExhaustedNoK {
  std::int64_t n;
  std::int64_t residues_scanned;
  friend bool operator==(const ExhaustedNoK&, const ExhaustedNoK&) = default;
};

struct Certificate {
  Triple triple;
  std::variant<WitnessK, ExhaustedNoK> verdict;
  std::string engine_version = kEngineVersion;
  std::uint64_t seed = 0;

  bool has_witness() const { return std::holds_alternative<WitnessK>(verdict); }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

std::string triple_name(const Triple& t);

}  // namespace tricert
