#include "hyperham/traps.hpp"

#include <sstream>

namespace hyperham {

namespace {

void require_min_dim(const FaultSet& faults, int min_n, const char* op) {
  if (faults.n() < min_n) {
    throw PreconditionViolated(std::string(op) + " requires n >= " + std::to_string(min_n));
  }
}

std::vector<Edge> crossing_faults(const FaultSet& faults, const Subcube& sub, int dir, int edge_parity) {
  std::vector<Edge> out;
  for (const Edge& e : faults.edges()) {
    if (e.dir == dir && sub.contains(e.low) && e.edge_parity() == edge_parity) out.push_back(e);
  }
  return out;
}

std::vector<Edge> all_crossing_faults(const FaultSet& faults, const Subcube& sub, int dir) {
  std::vector<Edge> out;
  for (const Edge& e : faults.edges()) {
    if (e.dir == dir && sub.contains(e.low)) out.push_back(e);
  }
  return out;
}

}  // namespace

std::string TrapCertificate::describe(int n) const {
  std::ostringstream s;
  switch (kind) {
    case TrapKind::Scdhw:
      s << "SCDHW(dir=" << dir << ",parity=" << parity << ")";
      break;
    case TrapKind::Dtbce:
      s << "DTBCE(dir=" << dir << ",u=" << to_binary(u, n) << ",w=" << to_binary(w, n) << ")";
      break;
    case TrapKind::Claw:
      s << "claw(center=" << to_binary(center, n) << ")";
      break;
    case TrapKind::SubcubeDhw: {
      s << "Q" << subcube.dim() << "-DHW(";
      for (int i = n - 1; i >= 0; --i) s << (subcube.is_free(i) ? '*' : (bit(subcube.fixed, i) ? '1' : '0'));
      s << ",parity=" << parity << ")";
      break;
    }
    case TrapKind::TooManyFaults:
      s << "faults(|F|=" << witness.size() << ">1)";
      break;
  }
  return s.str();
}

SubcubeTallies subcube_tallies(const FaultSet& faults, const Subcube& sub) {
  SubcubeTallies t;
  t.k = sub.dim();
  t.faulty.assign(static_cast<std::size_t>(faults.n()), {0, 0});
  sub.for_each([&](Vertex v) {
    const auto d = faults.raw_fault_dir(v);
    if (d != FaultSet::kNoFault && sub.is_free(d) && !bit(v, d)) {
      ++t.faulty[d][static_cast<std::size_t>(parity(v))];
    }
  });
  return t;
}

bool direction_clean(std::uint64_t healthy0, std::uint64_t healthy1) noexcept {
  return healthy0 >= 1 && healthy1 >= 1 && healthy0 + healthy1 >= 3;
}

bool trap_free(const FaultSet& faults, const Subcube& sub) {
  const auto t = subcube_tallies(faults, sub);
  const auto per = t.per_parity();
  for (Vertex m = sub.free_mask; m != 0; m &= m - 1) {
    const int d = std::countr_zero(m);
    if (!direction_clean(per - t.faulty[d][0], per - t.faulty[d][1])) return false;
  }
  return true;
}

bool trap_free(const FaultSet& faults) {
  for (int d = 0; d < faults.n(); ++d) {
    const auto h = healthy_crossing_counts(faults, d);
    if (!direction_clean(h[0], h[1])) return false;
  }
  return true;
}

std::optional<TrapCertificate> detect_scdhw(const FaultSet& faults) {
  require_min_dim(faults, 3, "detect_scdhw");
  const auto per = faults.crossing_per_parity();
  const auto whole = Subcube::whole(faults.dim());
  for (int d = 0; d < faults.n(); ++d) {
    for (int p = 0; p < 2; ++p) {
      if (faults.tally(d, p) == per) {
        TrapCertificate c;
        c.kind = TrapKind::Scdhw;
        c.dir = d;
        c.parity = p;
        c.subcube = whole;
        c.witness = crossing_faults(faults, whole, d, p);
        return c;
      }
    }
  }
  return std::nullopt;
}

std::optional<TrapCertificate> detect_scdhw(const FaultSet& faults, const Subcube& sub) {
  const auto t = subcube_tallies(faults, sub);
  const auto per = t.per_parity();
  if (per == 0) return std::nullopt;
  for (Vertex m = sub.free_mask; m != 0; m &= m - 1) {
    const int d = std::countr_zero(m);
    for (int p = 0; p < 2; ++p) {
      if (t.faulty[d][p] == per) {
        TrapCertificate c;
        c.kind = TrapKind::Scdhw;
        c.dir = d;
        c.parity = p;
        c.subcube = sub;
        c.witness = crossing_faults(faults, sub, d, p);
        return c;
      }
    }
  }
  return std::nullopt;
}

namespace {

std::optional<TrapCertificate> dtbce_along(const FaultSet& faults, const Subcube& sub, int d) {
  TrapCertificate c;
  c.kind = TrapKind::Dtbce;
  c.dir = d;
  c.subcube = sub;
  std::vector<Vertex> healthy;
  sub.split(d, 0).for_each([&](Vertex v) {
    if (!faults.is_faulty(v, d)) healthy.push_back(v);
  });
  if (healthy.size() != 2 || parity(healthy[0]) == parity(healthy[1])) return std::nullopt;
  c.u = healthy[0];
  c.w = healthy[1];
  c.witness = all_crossing_faults(faults, sub, d);
  return c;
}

}  // namespace

std::optional<TrapCertificate> detect_dtbce(const FaultSet& faults) {
  require_min_dim(faults, 3, "detect_dtbce");
  const auto per = faults.crossing_per_parity();
  for (int d = 0; d < faults.n(); ++d) {
    if (faults.tally(d, 0) + 1 == per && faults.tally(d, 1) + 1 == per) {
      return dtbce_along(faults, Subcube::whole(faults.dim()), d);
    }
  }
  return std::nullopt;
}

std::optional<TrapCertificate> detect_dtbce(const FaultSet& faults, const Subcube& sub) {
  const auto t = subcube_tallies(faults, sub);
  const auto per = t.per_parity();
  if (per == 0) return std::nullopt;
  for (Vertex m = sub.free_mask; m != 0; m &= m - 1) {
    const int d = std::countr_zero(m);
    if (t.faulty[d][0] + 1 == per && t.faulty[d][1] + 1 == per) return dtbce_along(faults, sub, d);
  }
  return std::nullopt;
}

std::optional<TrapCertificate> detect_claw(const FaultSet& faults) {
  if (faults.n() != 3) throw DimensionError("claw traps are defined for n = 3 only");
  for (Vertex u = 0; u < 8; ++u) {
    std::vector<Edge> witness;
    for (int i = 0; i < 3; ++i) {
      const Vertex nb = flip(u, i);
      const auto e = faults.incident(nb);
      if (!e || e->touches(u)) break;
      witness.push_back(*e);
    }
    if (witness.size() == 3) {
      TrapCertificate c;
      c.kind = TrapKind::Claw;
      c.center = u;
      c.subcube = Subcube::whole(faults.dim());
      c.witness = std::move(witness);
      return c;
    }
  }
  return std::nullopt;
}

TrapCertificate as_subcube_dhw(const TrapCertificate& scdhw, CubeDim dim) {
  if (scdhw.kind != TrapKind::Scdhw) throw PreconditionViolated("as_subcube_dhw needs an SCDHW certificate");
  TrapCertificate c = scdhw;
  c.kind = TrapKind::SubcubeDhw;
  // The faulty edges cut every parity-p vertex of the 0-side half from the other half.
  c.subcube = Subcube::half(dim, scdhw.dir, 0);
  return c;
}

Diagnosis diagnose(const FaultSet& faults) {
  require_min_dim(faults, 3, "diagnose");
  Diagnosis d;
  d.dim = faults.dim();
  for (int i = 0; i < faults.n(); ++i) d.per_dimension.push_back(healthy_crossing_counts(faults, i));

  const auto scd = detect_scdhw(faults);
  const auto dt = detect_dtbce(faults);
  if (faults.n() == 3) {
    const auto claw = detect_claw(faults);
    if (scd) {
      d.hamiltonian = {false, scd};
    } else if (claw) {
      d.hamiltonian = {false, claw};
    }
    if (faults.size() >= 2) {
      std::optional<TrapCertificate> cert = scd ? scd : dt ? dt : claw;
      if (!cert) {
        TrapCertificate c;
        c.kind = TrapKind::TooManyFaults;
        c.subcube = Subcube::whole(faults.dim());
        c.witness.assign(faults.edges().begin(), faults.edges().end());
        cert = std::move(c);
      }
      d.laceable = {false, std::move(cert)};
    }
  } else {
    if (scd) {
      d.hamiltonian = {false, scd};
      d.laceable = {false, scd};
    } else if (dt) {
      d.laceable = {false, dt};
    }
  }
  if (scd && faults.n() <= 4) d.subcube_dhw = as_subcube_dhw(*scd, faults.dim());
  return d;
}

std::string format_diagnosis(const Diagnosis& d) {
  std::ostringstream s;
  const int n = d.dim.value();
  for (std::size_t i = 0; i < d.per_dimension.size(); ++i) {
    s << "dimension " << i << ": healthy0=" << d.per_dimension[i][0] << " healthy1=" << d.per_dimension[i][1]
      << '\n';
  }
  auto line = [&](const char* name, const Verdict& v) {
    s << name << ": " << (v.yes ? "yes" : "no");
    if (v.certificate) s << ' ' << v.certificate->describe(n);
    s << '\n';
  };
  line("hamiltonian", d.hamiltonian);
  line("laceable", d.laceable);
  if (d.subcube_dhw) s << "trap: " << d.subcube_dhw->describe(n) << '\n';
  return s.str();
}

const char* to_string(Feasibility f) noexcept {
  switch (f) {
    case Feasibility::Constructible:
      return "constructible";
    case Feasibility::Impossible:
      return "impossible";
    case Feasibility::Unknown:
      return "unknown";
  }
  return "unknown";
}

HpFeasibility hp_feasibility(const FaultSet& faults, Vertex a, Vertex b) {
  const int n = faults.n();
  if (!faults.dim().contains(a) || !faults.dim().contains(b)) throw EdgeOutOfRange("endpoint out of range");
  if (a == b) throw PreconditionViolated("hp_feasibility needs distinct endpoints");
  if (parity(a) == parity(b)) return {Feasibility::Impossible, "endpoints have the same parity"};
  if (n < 3) return {Feasibility::Unknown, "n < 3 is not classified"};

  const auto dt = detect_dtbce(faults);
  if (dt) {
    const Vertex u2 = flip(dt->u, dt->dir);
    const Vertex w2 = flip(dt->w, dt->dir);
    if ((a == dt->u && b == dt->w) || (a == dt->w && b == dt->u) || (a == u2 && b == w2) ||
        (a == w2 && b == u2)) {
      return {Feasibility::Impossible, "forbidden pair of " + dt->describe(n)};
    }
  }
  bool any_scdhw = false;
  for (int d = 0; d < n; ++d) {
    for (int p = 0; p < 2; ++p) {
      if (faults.tally(d, p) != faults.crossing_per_parity()) continue;
      any_scdhw = true;
      // Parity-p vertices of the 0-side are cut off: a path must start there
      // and end at a parity-(1-p) vertex of the 1-side.
      auto fits = [&](Vertex x, Vertex y) {
        return !bit(x, d) && parity(x) == p && bit(y, d) && parity(y) != p;
      };
      if (!fits(a, b) && !fits(b, a)) {
        return {Feasibility::Impossible,
                "endpoints violate SCDHW(dir=" + std::to_string(d) + ",parity=" + std::to_string(p) + ")"};
      }
    }
  }
  if (any_scdhw || dt) return {Feasibility::Unknown, "pair not characterised under the trap"};
  if (n == 3 && faults.size() >= 2) return {Feasibility::Unknown, "Q3 with two or more faults"};
  return {Feasibility::Constructible, "no SCDHW and no DTBCE"};
}

}  // namespace hyperham
