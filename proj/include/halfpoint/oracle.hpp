#pragma once

// Exhaustive ground truth over small prime fields.  Truth is computed from
// point enumeration and the group law only; the library's claims about
// quartics are then compared against it.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "halfpoint/field.hpp"
#include "halfpoint/two_division.hpp"
#include "halfpoint/weierstrass.hpp"

namespace halfpoint {

/// Serial is the reference; Parallel fans the enumeration out with OpenMP and
/// merges per-index results in index order, so both give identical reports.
enum class Execution { Serial, Parallel };

struct Discrepancy {
  std::string check;
  std::string inputs;
  std::string expected;
  std::string observed;
  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct SweepReport {
  std::string sweep;
  std::int64_t prime = 0;
  std::map<std::string, std::uint64_t> counters;
  std::vector<Discrepancy> discrepancies;

  bool passed() const noexcept { return discrepancies.empty(); }
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Primes accepted by the sweeps: odd, at most HALFPOINT_MAX_PRIME (default 13).
std::int64_t max_oracle_prime();
std::vector<std::int64_t> default_oracle_primes();

/// Abscissae x1 in F_p, with multiplicity, of the points P1 on the smooth locus
/// over F_{p^2} with 2 P1 = P2.  Pure enumeration; no quartic involved.
std::vector<FieldValue> halves_by_enumeration(const WeierstrassCubic& curve, const CubicPoint& p2);

/// Reachable quartics (all curves, all affine points) vs arises_from_division
/// under `convention`; also the smooth-curve reading and F(-d3/4) = -e/64.
SweepReport gate_sweep(std::int64_t p, SignConvention convention = SignConvention::MinusE,
                       Execution exec = Execution::Parallel);
/// Root profile and quartic-side class vs geometry for every (C, P2), e = 0
/// vs 2-torsion, and the cusp condition on the (x - s)^4 families.
SweepReport classification_sweep(std::int64_t p, Execution exec = Execution::Parallel);
/// 3-torsion flag vs 3 P2 = O, and flagged quartics per curve = order-3 points / 2.
SweepReport torsion_sweep(std::int64_t p, Execution exec = Execution::Parallel);
/// Mean/covariance identity on every smooth instance with four rational halves.
SweepReport stats_sweep(std::int64_t p, Execution exec = Execution::Parallel);
/// reconstruct(forward_quartic(C, P2)) = (C, x2, {+-y2}) whenever e != 0.
SweepReport roundtrip_sweep(std::int64_t p, Execution exec = Execution::Parallel);
/// The quartic of O on every curve: Z F_h, simple root (1:0), and its cubic type.
SweepReport homogeneous_sweep(std::int64_t p, Execution exec = Execution::Parallel);
/// Enumerated half abscissae vs root multiplicities of the quartic, and the
/// rational halves vs `halves`.
SweepReport halves_sweep(std::int64_t p, Execution exec = Execution::Parallel);

/// Dispatch by name: gate, classify, torsion, stats, roundtrip, homogeneous, halves.
SweepReport run_sweep(const std::string& name, std::int64_t p, SignConvention convention = SignConvention::MinusE,
                      Execution exec = Execution::Parallel);
const std::vector<std::string>& sweep_names();

}  // namespace halfpoint
