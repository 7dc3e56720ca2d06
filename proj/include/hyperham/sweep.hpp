#pragma once

// Exhaustive and sampled checking of the Hamiltonicity and laceability classification over
// matchings of small cubes, up to hypercube automorphism.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hyperham/fault_set.hpp"

namespace hyperham {

/// Signed coordinate permutation: bit i of v moves to bit perm[i], then the
/// result is XORed with `flip`.
struct Automorphism {
  std::vector<int> perm;
  Vertex flip = 0;

  Vertex apply(Vertex v) const noexcept;
  Edge apply(const Edge& e) const;
};

inline constexpr int kMaxSweepDim = 6;
inline constexpr int kMaxCanonicalDim = 4;

/// All 2^n * n! automorphisms, identity first. Requires n <= kMaxSweepDim.
std::vector<Automorphism> automorphisms(CubeDim dim);

FaultSet apply(const Automorphism& a, const FaultSet& faults);

/// Position of e in the order (direction, low endpoint with that bit removed).
std::uint32_t edge_index(CubeDim dim, const Edge& e);
Edge edge_at(CubeDim dim, std::uint32_t index);

/// Bit i set iff edge_at(i) is faulty. Requires n <= 4 (at most 32 edges).
std::uint64_t edge_mask(const FaultSet& faults);

/// The image with the smallest edge mask. Requires n <= 4.
FaultSet canonicalize(const FaultSet& faults);

struct CanonicalFaultSet {
  FaultSet representative;
  std::uint64_t orbit_size = 0;
};

/// Streams one representative per automorphism orbit of matchings (the
/// empty one included), in increasing edge-mask order. Requires n <= 4.
void enumerate_matchings(CubeDim dim, const std::function<void(const CanonicalFaultSet&)>& visit);
std::vector<CanonicalFaultSet> matching_orbits(CubeDim dim);

/// Every matching of Q_n, unreduced. Requires n <= 3.
void enumerate_all_matchings(CubeDim dim, const std::function<void(const FaultSet&)>& visit);

/// Independent counters used to pin the enumeration totals.
std::uint64_t count_matchings_brute_force(CubeDim dim);  // n <= 3, over all edge subsets
std::uint64_t count_matchings_dp(CubeDim dim);           // n <= 4, subset DP over vertex sets

enum class FaultConstraint { None, NoTrap, HasScdhw, HasDtbce };

const char* to_string(FaultConstraint c) noexcept;

/// Random matching of the given size. Throws ConstraintUnsatisfiable when
/// the restart budget runs out or the request cannot be met.
FaultSet random_disjoint_faults(CubeDim dim, std::size_t size, FaultConstraint constraint, std::mt19937_64& rng);
FaultSet random_disjoint_faults(CubeDim dim, std::size_t size, FaultConstraint constraint, std::uint64_t seed);

enum class SweepMode { Exhaustive, Sampled };

struct SweepOptions {
  int n = 3;
  SweepMode mode = SweepMode::Exhaustive;
  std::uint64_t seed = 1;
  int jobs = 1;
  /// Exhaustive: visit every matching instead of one per orbit (n <= 3).
  bool all_matchings = false;
  /// Exhaustive n = 4: endpoint pairs per representative for the path
  /// builders; 0 means every opposite-parity pair.
  std::size_t sample_pairs = 0;
  /// Sampled mode.
  std::size_t samples = 10000;
  std::size_t oracle_checks = 200;
  bool check_builds = true;
};

struct Counterexample {
  FaultSet faults;
  std::string what;
};

struct SweepReport {
  int n = 0;
  SweepMode mode = SweepMode::Exhaustive;
  std::uint64_t seed = 0;
  /// Exhaustive: counts weighted by orbit size; sampled: raw counts.
  std::map<std::string, std::uint64_t> counts;
  /// Exhaustive: unweighted counts over representatives.
  std::map<std::string, std::uint64_t> representative_counts;
  std::vector<Counterexample> counterexamples;

  std::string format() const;
  /// Lines `class=<name> count=<k>`.
  std::string format_machine() const;
};

SweepReport run_sweep(const SweepOptions& options);

}  // namespace hyperham
