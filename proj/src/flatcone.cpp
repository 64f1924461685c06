#include "causal2d/flatcone.hpp"

#include "causal2d/errors.hpp"
#include "causal2d/random.hpp"

namespace causal2d {

NullEvent null_coords(const Event& e) { return NullEvent{Rational(e.x + e.t), Rational(e.x - e.t)}; }

Event event_coords(const NullEvent& n) {
  return Event{Rational((n.u + n.v) / 2), Rational((n.u - n.v) / 2)};
}

bool causally_leq(const Event& p, const Event& q) {
  const Rational dt = q.t - p.t;
  return dt >= abs(Rational(q.x - p.x));
}

bool chronologically_ll(const Event& p, const Event& q) {
  const Rational dt = q.t - p.t;
  return dt > abs(Rational(q.x - p.x));
}

CausalAutomorphism::CausalAutomorphism(AutoKind kind, LineMap phi, LineMap psi)
    : kind_(kind), phi_(std::move(phi)), psi_(std::move(psi)) {
  const Direction want = kind == AutoKind::Proper ? Direction::Increasing : Direction::Decreasing;
  if (phi_.direction() != psi_.direction()) {
    throw Error(ErrorCode::DirectionMismatch, "phi and psi must be both increasing or both decreasing");
  }
  if (phi_.direction() != want) {
    throw Error(ErrorCode::DirectionMismatch, kind == AutoKind::Proper ? "proper kind needs increasing maps"
                                                                       : "flip kind needs decreasing maps");
  }
}

NullEvent CausalAutomorphism::apply(const NullEvent& n) const {
  if (kind_ == AutoKind::Proper) return NullEvent{phi_(n.u), psi_(n.v)};
  return NullEvent{phi_(n.v), psi_(n.u)};
}

NullEvent CausalAutomorphism::apply_inverse(const NullEvent& n) const {
  if (kind_ == AutoKind::Proper) return NullEvent{phi_.inverse_at(n.u), psi_.inverse_at(n.v)};
  // (u, v) ↦ (φ(v), ψ(u)) = (U, V) gives u = ψ⁻¹(V), v = φ⁻¹(U).
  return NullEvent{psi_.inverse_at(n.v), phi_.inverse_at(n.u)};
}

CausalAutomorphism auto_from_pair(AutoKind kind, LineMap phi, LineMap psi) {
  return CausalAutomorphism(kind, std::move(phi), std::move(psi));
}

Event auto_apply(const CausalAutomorphism& F, const Event& e) { return F(e); }

CausalAutomorphism auto_compose(const CausalAutomorphism& G, const CausalAutomorphism& F) {
  // A flip in G reads F's outputs swapped, so it pairs G.phi with F.psi.
  const bool swap = G.kind() == AutoKind::Flip;
  const LineMap& inner_phi = swap ? F.psi() : F.phi();
  const LineMap& inner_psi = swap ? F.phi() : F.psi();
  const AutoKind kind = G.kind() == F.kind() ? AutoKind::Proper : AutoKind::Flip;
  return CausalAutomorphism(kind, compose(G.phi(), inner_phi), compose(G.psi(), inner_psi));
}

CausalAutomorphism auto_invert(const CausalAutomorphism& F) {
  if (F.kind() == AutoKind::Proper) return CausalAutomorphism(AutoKind::Proper, invert(F.phi()), invert(F.psi()));
  return CausalAutomorphism(AutoKind::Flip, invert(F.psi()), invert(F.phi()));
}

std::vector<std::pair<Event, Event>> sample_event_pairs(const SampleSpec& spec) {
  Sampler s(spec.seed);
  std::vector<std::pair<Event, Event>> out;
  out.reserve(spec.pairs);
  for (std::size_t i = 0; i < spec.pairs; ++i) {
    Event p = s.event(spec.window, spec.denominator);
    Event q;
    const Rational dx = s.rational(spec.window, spec.denominator);
    const Rational gap = abs(s.rational(spec.window, spec.denominator));
    switch (i % 5) {
      case 0: q = s.event(spec.window, spec.denominator); break;
      case 1: q = Event{p.x + dx, p.t + abs(dx) + gap}; break;        // causal future
      case 2: q = Event{p.x + dx, p.t + (s.integer(0, 1) ? Rational(abs(dx)) : Rational(-abs(dx)))}; break;  // null
      case 3: q = Event{p.x + dx, p.t - abs(dx) - gap}; break;        // causal past
      default: q = s.integer(0, 3) == 0 ? p : Event{p.x + dx, p.t + s.rational(1, spec.denominator) * dx}; break;
    }
    out.emplace_back(std::move(p), std::move(q));
  }
  return out;
}

OrderReport verify_order_iso(const PointMap& map, const std::vector<std::pair<Event, Event>>& pairs) {
  OrderReport report;
  for (const auto& [p, q] : pairs) {
    const Event fp = map(p);
    const Event fq = map(q);
    ++report.checked;
    if (causally_leq(p, q) != causally_leq(fp, fq) || causally_leq(q, p) != causally_leq(fq, fp)) {
      report.failures.push_back(OrderViolation{p, q, "leq"});
    } else if (chronologically_ll(p, q) != chronologically_ll(fp, fq) ||
               chronologically_ll(q, p) != chronologically_ll(fq, fp)) {
      report.failures.push_back(OrderViolation{p, q, "ll"});
    }
  }
  return report;
}

OrderReport verify_order_iso(const PointMap& map, const SampleSpec& spec) {
  return verify_order_iso(map, sample_event_pairs(spec));
}

OrderReport verify_order_iso(const CausalAutomorphism& F, const SampleSpec& spec) {
  return verify_order_iso(PointMap([&F](const Event& e) { return F(e); }), spec);
}

}  // namespace causal2d
