#pragma once

// Hilbert Series membership for hyperbolic triangle groups: certificates,
// their JSON form, batch verification and the closing inequality chain.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tricert/certificate.hpp"
#include "tricert/rational.hpp"

namespace tricert {

/// The eleven triples, sorted entries, in the usual order.
const std::vector<Triple>& hilbert_series();

bool in_hilbert_series(std::int64_t p, std::int64_t q, std::int64_t r);

/// check_triple on a hyperbolic triple; `seed` is recorded in the certificate.
Certificate classify(std::int64_t p, std::int64_t q, std::int64_t r, std::uint64_t seed = 0);

/// e with [K : K^(2)] = 2^e: 2 if all entries even, 1 if exactly two, else 0.
int invariant_trace_degree(std::int64_t p, std::int64_t q, std::int64_t r);

struct HilbertSymbol {
  double alpha;
  double beta;
};

HilbertSymbol hilbert_symbol_entries(std::int64_t p, std::int64_t q, std::int64_t r);

nlohmann::json to_json(const Certificate& cert);
/// Throws InputError on a malformed document.
Certificate certificate_from_json(const nlohmann::json& j);
std::string serialize(const Certificate& cert);  // compact JSON, one line
Certificate deserialize(const std::string& text);

struct ReplayResult {
  bool ok;
  std::string reason;  // empty when ok
};

/// Re-checks a certificate from its own fields: gcd and exact distance of a
/// witness, a minimal witness (no smaller k works), or a full residue count
/// for exhaustion; then compares with a fresh scan.
ReplayResult replay(const Certificate& cert);

/// Parses, replays and checks that re-serialization is byte-identical.
ReplayResult replay_json(const std::string& text);

struct BatchReport {
  std::int64_t max_param = 0;
  std::size_t triples = 0;
  std::size_t witnesses = 0;
  std::vector<Triple> exhausted;          // sorted
  std::vector<Certificate> certificates;  // sorted by triple; empty unless kept
  bool matches_hilbert = false;           // exhausted == Hilbert members with r <= max_param
};

/// All hyperbolic p <= q <= r <= max_param. Work is issued largest n first.
BatchReport batch_verify(std::int64_t max_param, int jobs = 1, bool keep_certificates = false,
                         std::uint64_t seed = 0);

struct AssemblyStep {
  std::string label;
  std::string value;
  bool holds;
};

struct FinalAssemblyReport {
  std::int64_t B = 885;
  std::vector<AssemblyStep> steps;
  bool all_hold() const;
};

FinalAssemblyReport final_assembly_report();

}  // namespace tricert
