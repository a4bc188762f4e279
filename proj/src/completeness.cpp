#include "koenigs/completeness.hpp"

#include "koenigs/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace koenigs {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void add_regularity_witnesses(CompletenessVerdict& v, const RegularityCheck& reg) {
    for (const CombWitness& c : v.features.cantor_combs)
        v.witnesses.push_back({"cantor_comb", {c.J.first, c.J.second, c.q}, "comb teeth over the carrier"});
    for (const Spike& s : v.features.spikes)
        v.witnesses.push_back({"contact_spike", {s.c0, s.q}, "two contact arcs end at the same point"});
    if (v.features.cantor_combs.empty() && v.features.spikes.empty() && !reg.witnesses.empty())
        v.witnesses.push_back({"regularization", reg.witnesses, "psi exceeds its usc(lsc) regularization"});
}

/// Closure of the unbounded -inf component on the infinite side of I, if any.
std::optional<Interval> unbounded_minus_infinity(const DefiningFunction& psi) {
    for (auto [a, b] : psi.minus_infinity_components())
        if ((std::isinf(a) && std::isinf(psi.lo())) || (std::isinf(b) && std::isinf(psi.hi()))) return Interval{a, b};
    return std::nullopt;
}

/// Upper bound of psi over the bounded pieces and point values; +inf when not certified.
double middle_sup(const DefiningFunction& psi) {
    double s = -kInf;
    for (const Piece& p : psi.pieces()) {
        bool outer = std::isinf(p.a) || std::isinf(p.b);
        switch (p.kind) {
        case PieceKind::minus_infinity: break;
        case PieceKind::point_spike: s = std::max({s, p.spike_value, p.background}); break;
        case PieceKind::cantor_comb:
            s = std::max({s, p.on_value, p.oscillate ? p.center + p.amplitude : p.off_bound});
            break;
        case PieceKind::eta_boundary: return kInf;
        default:
            if (outer) {
                if (!p.asymptotics.upper) return kInf;
                const Envelope& e = *p.asymptotics.upper;
                // both envelope kinds are bounded above on a half-line only for these shapes
                if (e.kind == Envelope::log_power && e.k >= 0) s = std::max(s, e.C - e.k * std::pow(std::log(3.0), e.a));
                else return kInf;
            } else {
                s = std::max(s, certified_sup(p.expr, p.a, p.b));
            }
        }
    }
    for (const PointValue& pv : psi.points()) s = std::max(s, pv.value);
    return s;
}

/// Omega contains a translate of the domain bounded by the eta curve with exponent 1,
/// whose frequencies form a bounded interval; a right half-plane fits inside Omega.
bool bounded_frequency_interval(const DefiningFunction& psi, std::string& why) {
    if (std::isfinite(psi.lo()) || std::isfinite(psi.hi())) return false;
    const auto& ps = psi.pieces();
    if (ps.size() == 1 && ps[0].kind == PieceKind::eta_boundary) {
        if (ps[0].eta.a < 1) return false;
        why = "eta boundary with exponent " + fmt(ps[0].eta.a) + " >= 1: frequencies lie in (-1, 0]";
        return true;
    }
    for (const Piece* p : {&ps.front(), &ps.back()}) {
        if (p->kind != PieceKind::finite_analytic && p->kind != PieceKind::oscillatory) return false;
        if (!p->asymptotics.upper || p->asymptotics.upper->kind != Envelope::log_power) return false;
        const Envelope& e = *p->asymptotics.upper;
        // psi <= C - k log(|y|+3)^a lies below the exponent-1 eta curve up to a shift
        if (!((e.a > 1 && e.k > 0) || (e.a == 1 && e.k >= 1))) return false;
    }
    if (!std::isfinite(middle_sup(psi))) return false;
    why = "declared upper envelopes decay at least like -log|y|: Omega contains a translate of the exponent-1 eta domain";
    return true;
}

/// Omega lies in a translate of an eta domain with exponent in (0, 1).
bool log_dominated(const DefiningFunction& psi, std::string& why) {
    if (std::isfinite(psi.lo()) || std::isfinite(psi.hi())) return false;
    const auto& ps = psi.pieces();
    if (ps.size() == 1 && ps[0].kind == PieceKind::eta_boundary) {
        if (!(ps[0].eta.a > 0 && ps[0].eta.a < 1)) return false;
        why = "eta boundary with exponent " + fmt(ps[0].eta.a) + " < 1 is logarithmic starlike";
        return true;
    }
    double amax = 0;
    for (const Piece* p : {&ps.front(), &ps.back()}) {
        if (p->kind != PieceKind::finite_analytic && p->kind != PieceKind::oscillatory) return false;
        if (!p->asymptotics.lower || p->asymptotics.lower->kind != Envelope::log_power) return false;
        const Envelope& e = *p->asymptotics.lower;
        if (!(e.a < 1)) return false;
        amax = std::max(amax, e.a);
    }
    for (const Piece& p : ps) {
        if (std::isinf(p.a) || std::isinf(p.b)) continue;
        bool certified = true;
        double lb = piece_lower_bound(p, p.a, p.b, 0, certified);
        if (!std::isfinite(lb) || !certified) return false;
    }
    for (const PointValue& pv : psi.points())
        if (!std::isfinite(pv.value)) return false;
    why = "lower envelopes -k(log(|y|+3))^a with a <= " + fmt(amax) +
          " < 1: Omega lies in a translate of an eta domain with exponent in (a, 1)";
    return true;
}

} // namespace

CompletenessVerdict decide_weak_star(const DefiningFunction& psi) {
    CompletenessVerdict v;
    SemigroupClass cls = classify(psi);
    v.kind = cls.kind;
    v.features = analyze(psi);
    v.caveats = v.features.caveats;
    RegularityCheck reg = equals_regularized(psi);
    for (const auto& n : reg.notes) v.caveats.push_back(n);
    ClosedSet z = psi.minus_infinity_lsc_set();
    bool z_sure = z.quality != Quality::inconclusive;

    Tri cond = Tri::yes;
    switch (cls.kind) {
    case SemigroupKind::hyperbolic:
        v.route = "thm-hyperbolic-(3)";
        cond = z.parts.size() <= 1 ? Tri::yes : Tri::no;
        break;
    case SemigroupKind::positive_step: {
        v.route = "thm-positive-step-(3)";
        auto inf_part = unbounded_minus_infinity(psi);
        for (auto [a, b] : z.parts) {
            bool inside = inf_part && a >= inf_part->first && b <= inf_part->second;
            if (!inside) cond = Tri::no;
        }
        break;
    }
    case SemigroupKind::zero_step:
        v.route = "thm-zero-step-(3)";
        if (cls.minorant.exists == Tri::no) {
            v.route = "thm-zero-step-no-half-plane";
            v.weak_star_complete = Tri::no;
            v.witnesses.push_back({"no_affine_minorant", {}, cls.minorant.reason});
            v.dynamics_consistent = Tri::yes;
            return v;
        }
        if (cls.minorant.exists == Tri::unknown) {
            v.route = "thm-zero-step-no-half-plane";
            v.caveats.push_back("affine minorant undecided: " + cls.minorant.reason);
            return v;
        }
        if (cls.minorant.quality != Quality::exact) v.caveats.push_back("affine minorant rests on sampled tails");
        break;
    }
    if (!z_sure && cond == Tri::yes) cond = Tri::unknown;
    if (!z_sure && cond == Tri::no) cond = Tri::unknown;
    if (!z_sure) v.caveats.push_back("the set where liminf psi = -inf is only partly resolved");

    v.weak_star_complete = tri_and(reg.equal, cond);
    if (reg.equal == Tri::no) add_regularity_witnesses(v, reg);
    if (cond == Tri::no) {
        std::vector<double> ends;
        for (auto [a, b] : z.parts) ends.push_back(a), ends.push_back(b);
        v.witnesses.push_back({"minus_infinity_set", ends,
                               cls.kind == SemigroupKind::hyperbolic
                                   ? "liminf psi = -inf on more than one interval"
                                   : "liminf psi = -inf outside the closure of the unbounded -inf component"});
    }

    // the dynamical reading must show an obstruction exactly when the verdict is No
    const FeatureReport& f = v.features;
    bool regular_obstruction = !f.cantor_combs.empty() || !f.spikes.empty();
    bool singular_obstruction = !f.I_N.empty() || !f.D_U.empty() || !f.I_R.empty() ||
                                f.dw_discontinuity != DwDiscontinuity::none;
    if (v.weak_star_complete == Tri::yes)
        v.dynamics_consistent = regular_obstruction ? Tri::no : Tri::yes;
    else if (v.weak_star_complete == Tri::no)
        v.dynamics_consistent = (reg.equal == Tri::no ? regular_obstruction || !reg.witnesses.empty() : true) &&
                                        (cond == Tri::no ? singular_obstruction : true)
                                    ? Tri::yes
                                    : Tri::unknown;
    return v;
}

TopologicalVerdict decide_topological(const DefiningFunction& psi, std::optional<Window> window, int resolution) {
    TopologicalVerdict t;
    SemigroupClass cls = classify(psi);
    t.geometry = geometry_verdict(psi, window, resolution);
    Tri ic = t.geometry.int_closure_ok;
    int n = t.geometry.components;
    switch (cls.kind) {
    case SemigroupKind::hyperbolic:
        t.route = "thm-hyperbolic-(2)";
        t.verdict = tri_and(ic, n < 0 ? Tri::unknown : tri_of(n <= 2));
        break;
    case SemigroupKind::positive_step:
        t.route = "thm-positive-step-(2)";
        t.verdict = tri_and(ic, n < 0 ? Tri::unknown : tri_of(n == 1));
        break;
    case SemigroupKind::zero_step:
        if (cls.minorant.exists != Tri::yes) {
            t.route = "thm-zero-step-no-half-plane";
            t.verdict = cls.minorant.exists == Tri::no ? Tri::no : Tri::unknown;
        } else {
            t.route = "thm-zero-step-(2)";
            t.verdict = ic;
        }
        break;
    }
    return t;
}

PVerdict p_completeness_report(const DefiningFunction& psi, double p, const CompletenessVerdict& ws) {
    if (!(p >= 1) || std::isinf(p)) throw ValidationError("p must lie in [1, inf)");
    PVerdict r;
    if (ws.weak_star_complete == Tri::yes) {
        r.complete = Tri::yes;
        r.route = "weak-star-inheritance";
        return r;
    }
    bool suspected_spike = false;
    for (const Spike& s : ws.features.spikes) {
        if (psi.limits(s.c0).quality() == Quality::exact) {
            r.complete = Tri::no;
            r.route = "contact-arc-spike";
            r.witnesses.push_back({"contact_spike", {s.c0, s.q}, "two contact arcs end at the same point"});
        } else {
            suspected_spike = true;
        }
    }
    if (r.complete == Tri::no) return r;
    std::string why;
    if (bounded_frequency_interval(psi, why)) {
        r.complete = Tri::no;
        r.route = "bounded-frequency-interval";
        r.witnesses.push_back({"bounded-frequencies", {-1, 0}, why});
        return r;
    }
    if (ws.kind == SemigroupKind::zero_step && log_dominated(psi, why)) {
        RegularityCheck reg = equals_regularized(psi);
        ClosedSet z = psi.minus_infinity_lsc_set();
        Tri cond = tri_and(reg.equal, z.quality == Quality::inconclusive ? Tri::unknown : tri_of(z.empty()));
        if (cond == Tri::yes) {
            r.complete = Tri::yes;
            r.route = "log-domain-domination";
            r.witnesses.push_back({"log-domain", {}, why});
            return r;
        }
        r.caveats.push_back("contained in a log domain, but the regularity conditions are " +
                            std::string(to_string(cond)));
    }
    if (suspected_spike) r.caveats.push_back("a contact spike is suspected from estimated limits");
    r.caveats.push_back("whether the weak-star conditions are necessary for H^p completeness is open");
    return r;
}

PVerdict p_completeness_report(const DefiningFunction& psi, double p) {
    return p_completeness_report(psi, p, decide_weak_star(psi));
}

CompletenessVerdict decide(const DefiningFunction& psi, double p) {
    CompletenessVerdict v = decide_weak_star(psi);
    v.p_exponent = p;
    v.p = p_completeness_report(psi, p, v);
    return v;
}

} // namespace koenigs
