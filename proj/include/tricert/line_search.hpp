#pragma once

// Lines t (1/p, 1/q, 1/r) in R^3 / Lambda: witness search, height-bounded
// lines on the exceptional hyperplanes, the x = y + z family and the
// intersections of pairs of hyperplanes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tricert/arith.hpp"
#include "tricert/lattice.hpp"
#include "tricert/moments.hpp"
#include "tricert/rational.hpp"

namespace tricert {

struct TorusLine {
  std::int64_t u;
  std::int64_t v;
  std::int64_t height() const { return std::max(u < 0 ? -u : u, v < 0 ? -v : v); }
  friend bool operator==(const TorusLine&, const TorusLine&) = default;
};

struct WitnessT {
  ExactRational t;
  ExactRational distance;
};

/// Coprime (u, v) with max(|u|,|v|) < h_max, one of each +-pair: u > 0, or (0, 1).
std::vector<TorusLine> lines_up_to_height(std::int64_t h_max);

/// Primitive direction of (c u, c v, -a u - b v) for H = (a, b, c).
Int3 project_line(const Int3& H, const TorusLine& L);

/// Triple (p, q, r) whose line t (1/p,1/q,1/r) runs along direction w:
/// p_i = lcm(|w|) / |w_i|, sorted ascending. All entries of w must be nonzero.
Int3 triple_from_direction(const Int3& w);

struct LineExtremum {
  ExactRational max_value;
  ExactRational argmax;  // smallest maximizing s in [0, period)
  ExactRational min_value;
  ExactRational argmin;  // smallest minimizing s in [0, period)
};

/// Exact max and min over s of dist_to_lattice(offset + s w, lattice) for
/// lattice ParityLambda (period 2 in s) or StandardZ3 (period 1). The
/// distance is piecewise linear in s and concave between the points where a
/// coordinate is an integer, so only those points and pairwise
/// intersections of the active pieces need evaluating.
LineExtremum line_extremum(const TorusPoint& offset, const Int3& w, LatticeKind lattice);

/// Max over real t of the distance of t (1/p,1/q,1/r) to Lambda, attained at
/// the smallest t >= 0.
WitnessT max_on_triple_line(std::int64_t p, std::int64_t q, std::int64_t r);

constexpr std::uint64_t kDefaultSeed = 20240101;
constexpr int kDefaultBudget = 1000;
constexpr std::int64_t kGridLimit = 200000;

enum class WitnessRoute { Random, Grid, ExactMax };

struct WitnessSearch {
  std::optional<WitnessT> witness;
  WitnessRoute route = WitnessRoute::Random;
  ExactRational best;  // best distance seen (exact line max when all routes fail)
  int draws = 0;
};

/// Random t = j/1000, j uniform in [-1000 n, 1000 n] (n = lcm(2,p,q,r)),
/// up to `budget` draws; then the grid j = 0, 1, -1, 2, -2, ... up to
/// kGridLimit points; then the exact line maximum.
WitnessSearch search_t_witness(std::int64_t p, std::int64_t q, std::int64_t r,
                               const ExactRational& target, int budget,
                               std::uint64_t seed = kDefaultSeed);

std::optional<WitnessT> find_t_witness(std::int64_t p, std::int64_t q, std::int64_t r,
                                       const ExactRational& target, int budget,
                                       std::uint64_t seed = kDefaultSeed);

/// Closed-form t for (p, p+1, p(p+1)), with the distance recomputed exactly.
WitnessT special_hyperplane_t(std::int64_t p);

/// 4/3 - {2/(3(p+1)), 0, 2/(3p)} by p mod 3.
ExactRational special_hyperplane_formula(std::int64_t p);

/// The 16 rows of the exceptional hyperplane table: triple and point P.
struct HyperplaneRow {
  Int3 triple;
  TorusPoint P;
  ExactRational distance_to_w;
};
const std::vector<HyperplaneRow>& hyperplane_table();

struct TripleFailure {
  Int3 triple;
  WitnessT best;  // exact line maximum
  friend bool operator==(const TripleFailure& a, const TripleFailure& b) {
    return a.triple == b.triple && a.best.t == b.best.t && a.best.distance == b.best.distance;
  }
};

struct Codim2Report {
  std::size_t pairs = 0;
  std::size_t distinct_abs = 0;     // |entries| in place, divided by gcd; includes zero
  std::size_t distinct_sorted = 0;  // sorted |entries|; includes zero
  std::size_t zero_entry = 0;       // sorted forms with a zero entry (skipped)
  std::size_t triples_checked = 0;
  std::vector<TripleFailure> failures;
};

Codim2Report codim2_sweep(const std::vector<Direction>& directions, int budget,
                          std::uint64_t seed = kDefaultSeed, int jobs = 1);

struct ProjectedLinesReport {
  std::int64_t height_cutoff = 0;
  std::size_t lines_per_hyperplane = 0;
  std::size_t distinct_directions = 0;  // presentation forms, all rows 3..16
  std::size_t distinct_nonzero = 0;     // of which every entry is nonzero
  std::size_t triples_checked = 0;
  std::vector<TripleFailure> failures;
};

ProjectedLinesReport check_projected_lines(std::int64_t height_cutoff, int budget,
                                           std::uint64_t seed = kDefaultSeed, int jobs = 1);

struct SpecialFamilyReport {
  std::int64_t p_max = 0;
  std::size_t closed_form_ok = 0;
  std::vector<std::int64_t> needed_search;  // p where the closed form is below 29/24
  std::vector<TripleFailure> failures;
};

SpecialFamilyReport check_special_family(std::int64_t p_max, int budget,
                                         std::uint64_t seed = kDefaultSeed);

struct HyperplaneReport {
  ExactRational target;
  ProjectedLinesReport projected;
  SpecialFamilyReport special;
  Codim2Report codim2;
  std::vector<TripleFailure> exceptions;  // union, sorted, deduplicated
};

/// The three stages without judging the outcome.
HyperplaneReport run_hyperplane_checks(std::int64_t height_cutoff, int budget, std::uint64_t seed,
                                  int jobs, std::int64_t special_p_max);

/// Empty when the exceptions are exactly (1,2,6), (2,3,6), (3,4,12) at 6/5.
std::string hyperplane_problems(const HyperplaneReport& rep);

/// Runs the three stages and throws VerificationError unless the only
/// failures are (1,2,6), (2,3,6), (3,4,12), each with maximum exactly 6/5.
HyperplaneReport verify_theorem_5lemma(std::int64_t height_cutoff = 70,
                                     int budget = kDefaultBudget,
                                     std::uint64_t seed = kDefaultSeed, int jobs = 1,
                                     std::int64_t special_p_max = 10000);

ExactRational line_target();  // 29/24

}  // namespace tricert
