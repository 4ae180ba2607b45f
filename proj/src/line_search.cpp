#include "tricert/line_search.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "tricert/errors.hpp"
#include "tricert/parallel.hpp"

namespace tricert {

ExactRational line_target() { return rat(29, 24); }

std::vector<TorusLine> lines_up_to_height(std::int64_t h_max) {
  if (h_max < 1) throw InputError("lines_up_to_height requires h_max >= 1");
  std::vector<TorusLine> out;
  if (h_max == 1) return out;
  out.push_back({0, 1});
  for (std::int64_t u = 1; u < h_max; ++u)
    for (std::int64_t v = -(h_max - 1); v < h_max; ++v)
      if (std::gcd(u, v) == 1) out.push_back({u, v});
  return out;
}

Int3 project_line(const Int3& H, const TorusLine& L) {
  if (L.u == 0 && L.v == 0) throw InputError("project_line: zero line");
  const auto [a, b, c] = H;
  const Int3 d{c * L.u, c * L.v, -a * L.u - b * L.v};
  if (is_zero(d)) throw InputError("project_line: projection is zero");
  return primitive(d);
}

Int3 triple_from_direction(const Int3& w) {
  if (w[0] == 0 || w[1] == 0 || w[2] == 0) {
    throw InputError("triple_from_direction: direction has a zero entry");
  }
  const std::int64_t L = lcm_of({w[0], w[1], w[2]});
  Int3 t{L / std::abs(w[0]), L / std::abs(w[1]), L / std::abs(w[2])};
  std::sort(t.begin(), t.end());
  return primitive(t);
}

namespace {

struct Piece {
  ExactRational slope;
  ExactRational intercept;
};

ExactRational eval_min(const std::vector<Piece>& pieces, const ExactRational& s) {
  ExactRational best = pieces.front().slope * s + pieces.front().intercept;
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    ExactRational v = pieces[i].slope * s + pieces[i].intercept;
    if (v < best) best = v;
  }
  return best;
}

}  // namespace

LineExtremum line_extremum(const TorusPoint& offset, const Int3& w, LatticeKind lattice) {
  if (lattice == LatticeKind::TwoZ3) throw InputError("line_extremum: TwoZ3 not supported");
  const bool parity = lattice == LatticeKind::ParityLambda;
  const std::int64_t period = parity ? 2 : 1;

  std::vector<ExactRational> cuts{ExactRational{0}, ExactRational{static_cast<long>(period)}};
  for (int i = 0; i < 3; ++i) {
    if (w[i] == 0) continue;
    const ExactRational end = offset[i] + ExactRational{static_cast<long>(period * w[i])};
    const ExactRational& lo = w[i] > 0 ? offset[i] : end;
    const ExactRational& hi = w[i] > 0 ? end : offset[i];
    BigInt k = floor_of(lo);
    if (ExactRational{k} < lo) k += 1;
    const BigInt k_end = floor_of(hi);
    const ExactRational wi{static_cast<long>(w[i])};
    for (; k <= k_end; ++k) cuts.push_back((ExactRational{k} - offset[i]) / wi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  LineExtremum out{ExactRational{-1}, 0, ExactRational{100}, 0};
  auto consider = [&](const ExactRational& s, const ExactRational& value) {
    if (s >= period) return;
    if (value > out.max_value || (value == out.max_value && s < out.argmax)) {
      out.max_value = value;
      out.argmax = s;
    }
    if (value < out.min_value || (value == out.min_value && s < out.argmin)) {
      out.min_value = value;
      out.argmin = s;
    }
  };

  std::vector<Piece> pieces;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const ExactRational& s0 = cuts[c];
    const ExactRational& s1 = cuts[c + 1];
    const ExactRational mid = (s0 + s1) / 2;
    std::array<BigInt, 3> fl;
    for (int i = 0; i < 3; ++i) fl[i] = floor_of(offset[i] + mid * w[i]);

    pieces.clear();
    for (int bits = 0; bits < 8; ++bits) {
      std::array<BigInt, 3> lam;
      for (int i = 0; i < 3; ++i) lam[i] = fl[i] + ((bits >> i) & 1);
      if (parity) {
        BigInt sum = lam[0] + lam[1] + lam[2];
        if (mpz_odd_p(sum.get_mpz_t())) continue;
      }
      Piece pc{0, 0};
      for (int i = 0; i < 3; ++i) {
        const int sigma = ((bits >> i) & 1) ? -1 : 1;
        pc.slope += sigma * w[i];
        pc.intercept += sigma * (offset[i] - ExactRational{lam[i]});
      }
      pieces.push_back(pc);
    }

    consider(s0, eval_min(pieces, s0));
    for (std::size_t i = 0; i < pieces.size(); ++i)
      for (std::size_t j = i + 1; j < pieces.size(); ++j) {
        if (pieces[i].slope == pieces[j].slope) continue;
        const ExactRational s =
            (pieces[j].intercept - pieces[i].intercept) / (pieces[i].slope - pieces[j].slope);
        if (s > s0 && s < s1) consider(s, eval_min(pieces, s));
      }
  }
  return out;
}

WitnessT max_on_triple_line(std::int64_t p, std::int64_t q, std::int64_t r) {
  if (p == 0 || q == 0 || r == 0) throw InputError("max_on_triple_line: zero parameter");
  const std::int64_t L = lcm_of({p, q, r});
  const Int3 w{L / p, L / q, L / r};
  const LineExtremum ext = line_extremum(TorusPoint{0, 0, 0}, w, LatticeKind::ParityLambda);
  return {ext.argmax * ExactRational{static_cast<long>(L)}, ext.max_value};
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::int64_t p, std::int64_t q, std::int64_t r) {
  std::uint64_t z = seed;
  for (auto v : {p, q, r}) {
    z += 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(v);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
  }
  return z;
}

// Scaled distance of (j/1000)(1/p,1/q,1/r) with denominator 1000 L.
struct GridEvaluator {
  std::int64_t den;
  std::int64_t two_den;
  Int3 w;
  __int128 target_num;
  __int128 target_den;

  GridEvaluator(std::int64_t p, std::int64_t q, std::int64_t r, const ExactRational& target) {
    const std::int64_t L = lcm_of({p, q, r});
    if (L > 1'000'000'000'000LL) throw InputError("triple too large for the grid search");
    den = 1000 * L;
    two_den = 2 * den;
    w = {L / p, L / q, L / r};
    target_num = to_int64(target.get_num());
    target_den = to_int64(target.get_den());
  }

  std::int64_t scaled(std::int64_t j) const {
    std::array<std::int64_t, 3> num;
    for (int i = 0; i < 3; ++i) {
      __int128 x = static_cast<__int128>(j) * w[i] % two_den;
      num[i] = static_cast<std::int64_t>(x);
    }
    return kernel::scaled_dist_lambda(num, den);
  }

  bool meets(std::int64_t scaled_value) const {
    return static_cast<__int128>(scaled_value) * target_den >= target_num * den;
  }
};

WitnessT validated(std::int64_t j, std::int64_t scaled_value, const GridEvaluator& ev,
                   std::int64_t p, std::int64_t q, std::int64_t r) {
  const ExactRational t = rat(j, 1000);
  const ExactRational d = dist_to_lattice(scaled_point(t, p, q, r), LatticeKind::ParityLambda);
  if (d != rat(scaled_value, ev.den)) {
    throw VerificationError("integer kernel disagrees with exact distance at t=" + to_string(t));
  }
  return {t, d};
}

}  // namespace

WitnessSearch search_t_witness(std::int64_t p, std::int64_t q, std::int64_t r,
                               const ExactRational& target, int budget, std::uint64_t seed) {
  if (p == 0 || q == 0 || r == 0) throw InputError("find_t_witness: zero parameter");
  if (budget < 1) throw InputError("find_t_witness: budget must be >= 1");
  const GridEvaluator ev(p, q, r, target);
  const std::int64_t n = lcm_of({2, p, q, r});
  WitnessSearch out;

  std::mt19937_64 rng(mix_seed(seed, p, q, r));
  std::uniform_int_distribution<std::int64_t> pick(-1000 * n, 1000 * n);
  for (int i = 0; i < budget; ++i) {
    const std::int64_t j = pick(rng);
    ++out.draws;
    const std::int64_t s = ev.scaled(j);
    if (ev.meets(s)) {
      out.witness = validated(j, s, ev, p, q, r);
      out.route = WitnessRoute::Random;
      out.best = out.witness->distance;
      return out;
    }
  }

  const std::int64_t grid_points = std::min<std::int64_t>(kGridLimit, 2000 * n + 1);
  for (std::int64_t step = 0; step < grid_points; ++step) {
    const std::int64_t j = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
    const std::int64_t s = ev.scaled(j);
    if (ev.meets(s)) {
      out.witness = validated(j, s, ev, p, q, r);
      out.route = WitnessRoute::Grid;
      out.best = out.witness->distance;
      return out;
    }
  }

  const WitnessT best = max_on_triple_line(p, q, r);
  out.best = best.distance;
  out.route = WitnessRoute::ExactMax;
  if (best.distance >= target) out.witness = best;
  return out;
}

std::optional<WitnessT> find_t_witness(std::int64_t p, std::int64_t q, std::int64_t r,
                                       const ExactRational& target, int budget,
                                       std::uint64_t seed) {
  return search_t_witness(p, q, r, target, budget, seed).witness;
}

ExactRational special_hyperplane_formula(std::int64_t p) {
  switch (p % 3) {
    case 0: return rat(4, 3) - rat(2, 3 * (p + 1));
    case 1: return rat(4, 3);
    default: return rat(4, 3) - rat(2, 3 * p);
  }
}

WitnessT special_hyperplane_t(std::int64_t p) {
  if (p < 2) throw InputError("special_hyperplane_t requires p >= 2");
  ExactRational t = rat(p * (p + 1), 3);
  switch (p % 3) {
    case 0: t += rat(p, 3); break;
    case 1: break;
    default: t -= rat(p + 1, 3); break;
  }
  const ExactRational d =
      dist_to_lattice(scaled_point(t, p, p + 1, p * (p + 1)), LatticeKind::ParityLambda);
  return {t, d};
}

const std::vector<HyperplaneRow>& hyperplane_table() {
  static const auto rows = [] {
    struct Raw {
      Int3 triple;
      std::array<std::int64_t, 6> P;  // num/den pairs
    };
    const Raw raw[] = {
        {{0, 0, 1}, {1, 2, 1, 2, 0, 1}}, {{1, 1, 1}, {1, 3, 1, 3, 1, 3}},
        {{0, 1, 2}, {1, 2, 1, 2, 1, 4}}, {{1, 2, 2}, {1, 2, 1, 2, 1, 4}},
        {{0, 1, 4}, {1, 2, 2, 5, 2, 5}}, {{0, 2, 3}, {1, 2, 2, 5, 2, 5}},
        {{1, 1, 3}, {1, 2, 1, 2, 1, 3}}, {{1, 3, 3}, {1, 2, 1, 2, 1, 3}},
        {{2, 2, 3}, {1, 2, 1, 2, 1, 3}}, {{0, 2, 5}, {1, 2, 3, 7, 3, 7}},
        {{0, 3, 4}, {1, 2, 3, 7, 3, 7}}, {{1, 2, 4}, {1, 2, 1, 2, 5, 8}},
        {{1, 4, 4}, {1, 2, 1, 2, 3, 8}}, {{2, 3, 4}, {1, 2, 1, 2, 3, 8}},
        {{2, 2, 5}, {1, 2, 1, 2, 2, 5}}, {{1, 1, 5}, {1, 2, 1, 2, 2, 5}},
    };
    const TorusPoint w{rat(1, 2), rat(1, 2), rat(1, 2)};
    std::vector<HyperplaneRow> out;
    for (const auto& r : raw) {
      TorusPoint P{rat(r.P[0], r.P[1]), rat(r.P[2], r.P[3]), rat(r.P[4], r.P[5])};
      out.push_back({r.triple, P, l1_dist(P, w)});
    }
    return out;
  }();
  return rows;
}

namespace {

struct Int3Hash {
  std::size_t operator()(const Int3& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

Int3 abs_primitive(const Int3& v) {
  return primitive(Int3{std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

std::vector<TripleFailure> check_triples(const std::vector<Int3>& triples, int budget,
                                         std::uint64_t seed, int jobs) {
  const ExactRational target = line_target();
  auto results = parallel_map(triples.size(), jobs, [&](std::size_t i) {
    const auto& t = triples[i];
    const WitnessSearch s = search_t_witness(t[0], t[1], t[2], target, budget, seed);
    std::optional<TripleFailure> f;
    if (!s.witness) f = TripleFailure{t, max_on_triple_line(t[0], t[1], t[2])};
    return f;
  });
  std::vector<TripleFailure> out;
  for (auto& f : results)
    if (f) out.push_back(*f);
  return out;
}

}  // namespace

Codim2Report codim2_sweep(const std::vector<Direction>& directions, int budget,
                          std::uint64_t seed, int jobs) {
  Codim2Report rep;
  std::unordered_set<Int3, Int3Hash> abs_forms;
  std::unordered_set<Int3, Int3Hash> sorted_forms;
  abs_forms.reserve(1 << 20);
  sorted_forms.reserve(1 << 19);
  for (std::size_t i = 0; i < directions.size(); ++i) {
    for (std::size_t j = i + 1; j < directions.size(); ++j) {
      const Int3 x = cross(directions[i], directions[j]);
      ++rep.pairs;
      abs_forms.insert(abs_primitive(x));
      sorted_forms.insert(sorted_abs_primitive(x));
    }
  }
  rep.distinct_abs = abs_forms.size();
  rep.distinct_sorted = sorted_forms.size();

  std::set<Int3> triples;
  for (const auto& f : sorted_forms) {
    if (f[0] == 0 || f[1] == 0 || f[2] == 0) {
      ++rep.zero_entry;
      continue;
    }
    Int3 t{f[1] * f[2], f[0] * f[2], f[0] * f[1]};
    std::sort(t.begin(), t.end());
    triples.insert(primitive(t));
  }
  const std::vector<Int3> list(triples.begin(), triples.end());
  rep.triples_checked = list.size();
  rep.failures = check_triples(list, budget, seed, jobs);
  return rep;
}

ProjectedLinesReport check_projected_lines(std::int64_t height_cutoff, int budget,
                                           std::uint64_t seed, int jobs) {
  ProjectedLinesReport rep;
  rep.height_cutoff = height_cutoff;
  const auto lines = lines_up_to_height(height_cutoff);
  rep.lines_per_hyperplane = lines.size();
  std::set<Int3> forms;
  const auto& table = hyperplane_table();
  for (std::size_t row = 2; row < table.size(); ++row) {
    for (const auto& L : lines) forms.insert(presentation_form(project_line(table[row].triple, L)));
  }
  rep.distinct_directions = forms.size();
  std::set<Int3> triples;
  for (const auto& f : forms) {
    if (f[0] == 0) continue;  // sorted ascending: a zero entry comes first
    ++rep.distinct_nonzero;
    triples.insert(triple_from_direction(f));
  }
  const std::vector<Int3> list(triples.begin(), triples.end());
  rep.triples_checked = list.size();
  rep.failures = check_triples(list, budget, seed, jobs);
  return rep;
}

SpecialFamilyReport check_special_family(std::int64_t p_max, int budget, std::uint64_t seed) {
  SpecialFamilyReport rep;
  rep.p_max = p_max;
  const ExactRational target = line_target();
  for (std::int64_t p = 2; p <= p_max; ++p) {
    const WitnessT w = special_hyperplane_t(p);
    if (w.distance != special_hyperplane_formula(p)) {
      throw VerificationError("closed-form distance mismatch for p=" + std::to_string(p));
    }
    if (w.distance >= target) {
      ++rep.closed_form_ok;
      continue;
    }
    rep.needed_search.push_back(p);
    Int3 t{p, p + 1, p * (p + 1)};
    if (!find_t_witness(t[0], t[1], t[2], target, budget, seed)) {
      rep.failures.push_back({t, max_on_triple_line(t[0], t[1], t[2])});
    }
  }
  return rep;
}

HyperplaneReport run_hyperplane_checks(std::int64_t height_cutoff, int budget, std::uint64_t seed,
                                  int jobs, std::int64_t special_p_max) {
  HyperplaneReport rep;
  rep.target = line_target();
  rep.projected = check_projected_lines(height_cutoff, budget, seed, jobs);
  rep.special = check_special_family(special_p_max, budget, seed);

  const auto table = cached_coef_table(12);
  std::vector<Direction> dirs;
  for (const auto& [d, s] : line_sums(*table)) dirs.push_back(d);
  rep.codim2 = codim2_sweep(dirs, budget, seed, jobs);

  std::map<Int3, TripleFailure> all;
  for (const auto* src : {&rep.projected.failures, &rep.special.failures, &rep.codim2.failures})
    for (const auto& f : *src) all.emplace(f.triple, f);
  for (auto& [t, f] : all) rep.exceptions.push_back(f);
  return rep;
}

std::string hyperplane_problems(const HyperplaneReport& rep) {
  const std::set<Int3> expected{{1, 2, 6}, {2, 3, 6}, {3, 4, 12}};
  std::string problems;
  for (const auto& f : rep.exceptions) {
    const std::string name = "(" + std::to_string(f.triple[0]) + "," + std::to_string(f.triple[1]) +
                             "," + std::to_string(f.triple[2]) + ")";
    if (!expected.count(f.triple)) problems += " unexpected " + name;
    else if (f.best.distance != rat(6, 5)) problems += " " + name + " max " + to_string(f.best.distance);
  }
  if (rep.exceptions.size() != expected.size()) problems += " exception count " + std::to_string(rep.exceptions.size());
  return problems;
}

HyperplaneReport verify_theorem_5lemma(std::int64_t height_cutoff, int budget, std::uint64_t seed,
                                     int jobs, std::int64_t special_p_max) {
  HyperplaneReport rep = run_hyperplane_checks(height_cutoff, budget, seed, jobs, special_p_max);
  const std::string problems = hyperplane_problems(rep);
  if (!problems.empty()) throw VerificationError("hyperplane check failed:" + problems);
  return rep;
}

}  // namespace tricert
