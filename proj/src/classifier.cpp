#include "tricert/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "tricert/arith.hpp"
#include "tricert/errors.hpp"
#include "tricert/jacobsthal.hpp"
#include "tricert/lattice.hpp"
#include "tricert/lemmas.hpp"
#include "tricert/parallel.hpp"

namespace tricert {

const std::vector<Triple>& hilbert_series() {
  static const std::vector<Triple> list = [] {
    const Int3 raw[] = {{2, 4, 6},  {2, 6, 6},   {3, 4, 4},  {3, 6, 6},  {2, 6, 10},   {3, 10, 10},
                        {5, 6, 6},  {6, 10, 15}, {4, 6, 12}, {6, 9, 18}, {14, 21, 42}};
    std::vector<Triple> out;
    for (const auto& t : raw) out.push_back(Triple::make(t[0], t[1], t[2]));
    return out;
  }();
  return list;
}

bool in_hilbert_series(std::int64_t p, std::int64_t q, std::int64_t r) {
  const Triple t = Triple::make(p, q, r);
  const auto& hs = hilbert_series();
  return std::find(hs.begin(), hs.end(), t) != hs.end();
}

Certificate classify(std::int64_t p, std::int64_t q, std::int64_t r, std::uint64_t seed) {
  Certificate c = check_triple(p, q, r);
  c.seed = seed;
  return c;
}

int invariant_trace_degree(std::int64_t p, std::int64_t q, std::int64_t r) {
  const int evens = (p % 2 == 0) + (q % 2 == 0) + (r % 2 == 0);
  return evens == 3 ? 2 : (evens == 2 ? 1 : 0);
}

HilbertSymbol hilbert_symbol_entries(std::int64_t p, std::int64_t q, std::int64_t r) {
  if (p < 2 || q < 2 || r < 2 || !is_hyperbolic(p, q, r)) {
    throw InputError("hilbert_symbol_entries requires a hyperbolic triple");
  }
  const double a = std::cos(std::numbers::pi / static_cast<double>(p));
  const double b = std::cos(std::numbers::pi / static_cast<double>(q));
  const double c = std::cos(std::numbers::pi / static_cast<double>(r));
  return {4 - 4 * a * a - 4 * b * b - 4 * c * c - 8 * a * b * c, 4 * a * a - 4};
}

// ---------------------------------------------------------------- JSON

namespace {

template <class T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("certificate: missing field ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("certificate: bad field ") + key + ": " + e.what());
  }
}

// Fixed key order so that serialization is byte-stable.
std::string dump_ordered(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["triple"] = {cert.triple.p, cert.triple.q, cert.triple.r};
  j["n"] = cert.triple.n;
  if (const auto* w = std::get_if<WitnessK>(&cert.verdict)) {
    j["verdict"] = "witness";
    j["k"] = w->k;
    j["distance"] = to_string(w->distance);
  } else {
    j["verdict"] = "exhausted";
    j["residues_scanned"] = std::get<ExhaustedNoK>(cert.verdict).residues_scanned;
  }
  j["engine"] = cert.engine_version;
  j["seed"] = cert.seed;
  return j.dump();
}

}  // namespace

Certificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("certificate: not a JSON object");
  const auto tr = field<std::vector<std::int64_t>>(j, "triple");
  if (tr.size() != 3) throw InputError("certificate: triple must have three entries");
  if (tr[0] < 1 || tr[1] < 1 || tr[2] < 1) throw InputError("certificate: entries must be positive");
  Certificate c;
  c.triple = Triple::make(tr[0], tr[1], tr[2]);
  if (c.triple.p != tr[0] || c.triple.q != tr[1] || c.triple.r != tr[2]) {
    throw InputError("certificate: triple must be sorted");
  }
  if (field<std::int64_t>(j, "n") != c.triple.n) throw InputError("certificate: n is not lcm(2,p,q,r)");
  const auto verdict = field<std::string>(j, "verdict");
  const auto n = c.triple.n;
  if (verdict == "witness") {
    c.verdict = WitnessK{field<std::int64_t>(j, "k"), parse_rational(field<std::string>(j, "distance"))};
  } else if (verdict == "exhausted") {
    c.verdict = ExhaustedNoK{n, field<std::int64_t>(j, "residues_scanned")};
  } else {
    throw InputError("certificate: verdict must be witness or exhausted");
  }
  c.engine_version = field<std::string>(j, "engine");
  c.seed = field<std::uint64_t>(j, "seed");
  return c;
}

std::string serialize(const Certificate& cert) { return dump_ordered(cert); }

nlohmann::json to_json(const Certificate& cert) { return nlohmann::json::parse(dump_ordered(cert)); }

Certificate deserialize(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("certificate: ") + e.what());
  }
  return certificate_from_json(j);
}

ReplayResult replay(const Certificate& cert) {
  const Triple& t = cert.triple;
  if (t != Triple::make(t.p, t.q, t.r)) return {false, "triple is not normalized"};
  if (cert.engine_version != kEngineVersion) return {false, "engine version " + cert.engine_version};
  if (const auto* w = std::get_if<WitnessK>(&cert.verdict)) {
    if (w->k < 1 || w->k > t.n) return {false, "k out of range"};
    if (std::gcd(w->k, t.n) != 1) return {false, "k not prime to n"};
    const ExactRational d = dist_to_lattice(
        scaled_point(ExactRational{static_cast<long>(w->k)}, t.p, t.q, t.r), LatticeKind::ParityLambda);
    if (d != w->distance) return {false, "distance mismatch: " + to_string(d)};
    if (d < 1) return {false, "distance below 1"};
  } else {
    const auto& e = std::get<ExhaustedNoK>(cert.verdict);
    if (e.n != t.n) return {false, "n mismatch"};
    if (e.residues_scanned != euler_phi(t.n)) return {false, "residue count is not phi(n)"};
  }
  const Certificate fresh = scan_triple(t.p, t.q, t.r);
  if (fresh.verdict != cert.verdict) return {false, "fresh scan disagrees"};
  return {true, {}};
}

ReplayResult replay_json(const std::string& text) {
  Certificate c;
  try {
    c = deserialize(text);
  } catch (const InputError& e) {
    return {false, e.what()};
  }
  auto res = replay(c);
  if (res.ok && serialize(c) != text) return {false, "re-serialization differs"};
  return res;
}

// ---------------------------------------------------------------- batch

BatchReport batch_verify(std::int64_t max_param, int jobs, bool keep_certificates,
                         std::uint64_t seed) {
  if (max_param < 2) throw InputError("batch_verify requires max_param >= 2");
  std::vector<Triple> work;
  for (std::int64_t p = 2; p <= max_param; ++p)
    for (std::int64_t q = p; q <= max_param; ++q)
      for (std::int64_t r = q; r <= max_param; ++r)
        if (is_hyperbolic(p, q, r)) work.push_back(Triple::make(p, q, r));
  // Longest scans first.
  std::stable_sort(work.begin(), work.end(), [](const Triple& a, const Triple& b) { return a.n > b.n; });

  auto certs = parallel_map(work.size(), jobs, [&](std::size_t i) {
    return classify(work[i].p, work[i].q, work[i].r, seed);
  });
  std::sort(certs.begin(), certs.end(),
            [](const Certificate& a, const Certificate& b) { return a.triple < b.triple; });

  BatchReport rep;
  rep.max_param = max_param;
  rep.triples = certs.size();
  for (const auto& c : certs) {
    if (c.has_witness()) {
      ++rep.witnesses;
    } else {
      rep.exhausted.push_back(c.triple);
    }
  }
  std::vector<Triple> expected;
  for (const auto& h : hilbert_series())
    if (h.r <= max_param) expected.push_back(h);
  std::sort(expected.begin(), expected.end());
  rep.matches_hilbert = rep.exhausted == expected;
  if (keep_certificates) rep.certificates = std::move(certs);
  return rep;
}

// ---------------------------------------------------------------- final assembly

bool FinalAssemblyReport::all_hold() const {
  return std::all_of(steps.begin(), steps.end(), [](const AssemblyStep& s) { return s.holds; });
}

FinalAssemblyReport final_assembly_report() {
  FinalAssemblyReport rep;
  const std::int64_t B = rep.B;
  auto add = [&](std::string label, std::string value, bool holds) {
    rep.steps.push_back({std::move(label), std::move(value), holds});
  };

  const BigInt b{static_cast<long>(B)};
  const BigInt c432 = 432 * b * b;
  add("432 B^2", c432.get_str(), c432 == 338353200);
  add("72 B^2 * 6 = 432 B^2", BigInt(72 * b * b * 6).get_str(), 72 * b * b * 6 == c432);

  const ExactRational two_b_15 = rat(BigInt(2 * b), BigInt(15));
  const ExactRational sq = two_b_15 * two_b_15;
  add("(2B/15)^2", to_string(sq), sq == 13924);

  const ExactRational factor = ExactRational(1) / ExactRational(c432) * sq;
  add("(1/(432 B^2)) (2B/15)^2 = 1/24300", to_string(factor), factor == rat(1, 24300));

  const BigInt p16 = primorial(16);
  BigInt two48 = 1;
  two48 <<= 48;
  const ExactRational ratio = rat(p16, two48);
  add("P_16 / 2^48 > 24300", to_string(floor_of(ratio)) + " + frac", ratio > 24300);

  const auto primes = first_primes(18);
  add("p_17 >= 2^3", std::to_string(primes[16]), primes[16] >= 8);

  // Circular table: row (m, A, B) needs 2m/15 >= U(A - 1) and B = P_A.
  const auto& U = jacobsthal_table_u();
  bool rows_ok = true;
  for (const auto& row : circular_table()) {
    const bool ok = 2 * row.m >= 15 * U[row.A - 2] && row.B == primorial(row.A);
    rows_ok = rows_ok && ok;
  }
  add("circular rows: 2m/15 >= U(A-1), B = P_A", std::to_string(circular_table().size()) + " rows",
      rows_ok);

  const CircularRow* at_B = nullptr;
  for (const auto& row : circular_table())
    if (row.m <= B) at_B = &row;
  const bool threshold_ok = at_B && at_B->B == BigInt("117288381359406970983270") && at_B->A == 18;
  add("n >= B(885) and omega(n) >= 18", at_B ? at_B->B.get_str() : "missing", threshold_ok);
  add("omega(n) >= 18 >= 16", "18", at_B && at_B->A >= 16);

  // With omega >= 16: J^3 <= 2^(3 omega) <= n 2^48 / P_16 < n / 24300.
  add("J(n)^3 <= 2^48 n / P_16 < n / 24300", "2^48/P_16 < 1/24300",
      rat(two48, p16) < rat(1, 24300));
  return rep;
}

}  // namespace tricert
