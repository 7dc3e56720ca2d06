#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperham/fault_set.hpp"

namespace hyperham {

enum class TrapKind {
  /// All crossing edges of one parity in one direction are faulty.
  Scdhw,
  /// All crossing edges in one direction but two, of different parity, are faulty.
  Dtbce,
  /// Q_3 only: three neighbours of a vertex are left with degree 2.
  Claw,
  /// A half-cube disconnected halfway, reported for n <= 4.
  SubcubeDhw,
  /// Q_3 only: two or more faulty edges already break laceability.
  TooManyFaults,
};

struct TrapCertificate {
  TrapKind kind = TrapKind::Scdhw;
  int dir = -1;
  /// Edge parity of the cut (Scdhw) or vertex parity cut off (SubcubeDhw).
  int parity = 0;
  /// Dtbce: low endpoints of the two healthy crossing edges, u < w.
  Vertex u = 0;
  Vertex w = 0;
  Vertex center = 0;
  Subcube subcube;
  std::vector<Edge> witness;

  std::string describe(int n) const;
};

/// Per-direction faulty crossing-edge tallies of a subcube, indexed by
/// global direction (only free directions are meaningful).
struct SubcubeTallies {
  int k = 0;  // subcube dimension
  std::vector<std::array<std::uint64_t, 2>> faulty;
  std::uint64_t per_parity() const noexcept { return k >= 2 ? std::uint64_t{1} << (k - 2) : 0; }
};

SubcubeTallies subcube_tallies(const FaultSet& faults, const Subcube& sub);

/// The trap-freeness test used everywhere: along every direction there are
/// healthy crossing edges of both parities and at least three in total.
bool direction_clean(std::uint64_t healthy0, std::uint64_t healthy1) noexcept;
bool trap_free(const FaultSet& faults, const Subcube& sub);
bool trap_free(const FaultSet& faults);

std::optional<TrapCertificate> detect_scdhw(const FaultSet& faults);
std::optional<TrapCertificate> detect_scdhw(const FaultSet& faults, const Subcube& sub);
std::optional<TrapCertificate> detect_dtbce(const FaultSet& faults);
std::optional<TrapCertificate> detect_dtbce(const FaultSet& faults, const Subcube& sub);
/// Throws DimensionError unless n == 3.
std::optional<TrapCertificate> detect_claw(const FaultSet& faults);

/// Re-expresses an Scdhw certificate as the disconnected-halfway half-cube it cuts off.
TrapCertificate as_subcube_dhw(const TrapCertificate& scdhw, CubeDim dim);

struct Verdict {
  bool yes = true;
  std::optional<TrapCertificate> certificate;
};

struct Diagnosis {
  CubeDim dim;
  Verdict hamiltonian;
  Verdict laceable;
  std::vector<std::array<std::uint64_t, 2>> per_dimension;
  /// For n <= 4 with an Scdhw: the same trap as a subcube certificate.
  std::optional<TrapCertificate> subcube_dhw;
};

/// Hamiltonicity and laceability verdicts. Requires n >= 3.
Diagnosis diagnose(const FaultSet& faults);

/// Line-oriented report:
///   dimension d: healthy0=<k> healthy1=<m>
///   hamiltonian: yes|no <certificate>
///   laceable: yes|no <certificate>
std::string format_diagnosis(const Diagnosis& d);

enum class Feasibility { Constructible, Impossible, Unknown };

struct HpFeasibility {
  Feasibility status = Feasibility::Unknown;
  std::string reason;
};

/// Whether a Hamiltonian path A -> B is known to exist, known not to, or neither.
HpFeasibility hp_feasibility(const FaultSet& faults, Vertex a, Vertex b);

const char* to_string(Feasibility f) noexcept;

}  // namespace hyperham
