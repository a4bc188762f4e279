#include "koenigs/features.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace koenigs {

const char* to_string(DwDiscontinuity d) {
    switch (d) {
    case DwDiscontinuity::none: return "none";
    case DwDiscontinuity::simple: return "simple";
    case DwDiscontinuity::double_: return "double";
    default: return "unknown";
    }
}

namespace {

/// Heights where a feature can sit: structure points and finite ends of I.
std::vector<double> candidates(const DefiningFunction& psi) {
    std::set<double> s;
    for (double y : psi.structure_points()) s.insert(y);
    if (std::isfinite(psi.lo())) s.insert(psi.lo());
    if (std::isfinite(psi.hi())) s.insert(psi.hi());
    for (const Piece& p : psi.pieces()) {
        if (std::isfinite(p.a)) s.insert(p.a);
        if (std::isfinite(p.b)) s.insert(p.b);
    }
    return {s.begin(), s.end()};
}

bool in_closure_of(const std::vector<Interval>& parts, double y) {
    return std::any_of(parts.begin(), parts.end(), [y](const Interval& c) { return c.first <= y && y <= c.second; });
}

bool full_minus_inf(const SideLimit& s) { return s.present && s.liminf == -kInf && s.limsup == -kInf; }
bool du_side(const SideLimit& s) { return s.present && s.liminf == -kInf && std::isfinite(s.limsup); }
bool dw_side(const SideLimit& s) { return s.present && s.liminf == -kInf && s.limsup == kInf; }

} // namespace

std::vector<Interval> minus_infinity_components(const DefiningFunction& psi) { return psi.minus_infinity_components(); }

std::vector<Height> detect_super_repelling(const DefiningFunction& psi) {
    std::vector<Height> out;
    auto comps = psi.minus_infinity_components(); // J_inf: every open component
    for (double y : candidates(psi)) {
        if (in_closure_of(comps, y)) continue;
        auto l = psi.limits(y);
        bool inconclusive = (l.left.present && l.left.quality == Quality::inconclusive) ||
                            (l.right.present && l.right.quality == Quality::inconclusive);
        if (full_minus_inf(l.left) || full_minus_inf(l.right))
            out.push_back({y, l.quality() == Quality::exact ? Tri::yes : Tri::unknown});
        else if (inconclusive && (l.left.liminf == -kInf || l.right.liminf == -kInf))
            out.push_back({y, Tri::unknown});
    }
    return out;
}

std::vector<UnboundedDiscontinuity> detect_unbounded_discontinuities(const DefiningFunction& psi) {
    std::vector<UnboundedDiscontinuity> out;
    for (double y : candidates(psi)) {
        auto l = psi.limits(y);
        UnboundedDiscontinuity d;
        d.y = y;
        d.left = du_side(l.left);
        d.right = du_side(l.right);
        bool unsure = (l.left.present && l.left.quality == Quality::inconclusive) ||
                      (l.right.present && l.right.quality == Quality::inconclusive);
        if (d.left || d.right) {
            bool exact = (!d.left || l.left.quality == Quality::exact) && (!d.right || l.right.quality == Quality::exact);
            d.status = unsure || !exact ? Tri::unknown : Tri::yes;
            out.push_back(d);
        }
    }
    return out;
}

std::vector<Spike> detect_contact_spikes(const DefiningFunction& psi) {
    std::vector<Spike> out;
    for (const Piece& p : psi.pieces()) {
        if (p.kind != PieceKind::point_spike || !(p.spike_value > p.background)) continue;
        double q = std::isfinite(p.background) ? 0.5 * (p.spike_value + p.background) : p.spike_value - 1;
        out.push_back({p.c0, q, true});
    }
    for (const PointValue& pv : psi.points()) {
        auto l = psi.limits(pv.y);
        if (l.quality() == Quality::inconclusive) continue;
        double top = l.limsup();
        if (pv.value > top && pv.value != -kInf) {
            double q = std::isfinite(top) ? 0.5 * (pv.value + top) : pv.value - 1;
            out.push_back({pv.y, q, false});
        }
    }
    std::sort(out.begin(), out.end(), [](const Spike& a, const Spike& b) { return a.c0 < b.c0; });
    return out;
}

std::vector<CombWitness> detect_cantor_combs(const DefiningFunction& psi) {
    std::vector<CombWitness> out;
    for (const Piece& p : psi.pieces()) {
        if (p.kind != PieceKind::cantor_comb) continue;
        double ghi = p.oscillate ? p.center + p.amplitude : p.off_bound;
        if (!(p.on_value > ghi)) continue;
        out.push_back({{p.a, p.b}, 0.5 * (p.on_value + ghi), p.carrier});
    }
    return out;
}

DwDiscontinuity dw_discontinuity(const DefiningFunction& psi) {
    int hits = 0;
    bool unsure = false;
    for (double y : {psi.lo(), psi.hi()}) {
        if (!std::isfinite(y)) continue;
        auto l = psi.limits(y);
        const SideLimit& s = l.left.present ? l.left : l.right;
        if (s.quality == Quality::inconclusive) unsure = true;
        else if (dw_side(s)) ++hits;
    }
    if (unsure) return DwDiscontinuity::unknown;
    if (hits == 2) return DwDiscontinuity::double_;
    return hits == 1 ? DwDiscontinuity::simple : DwDiscontinuity::none;
}

Tri exceptional_arc_to_unbounded(const DefiningFunction& psi) {
    bool lo_fin = std::isfinite(psi.lo()), hi_fin = std::isfinite(psi.hi());
    if (lo_fin == hi_fin) return Tri::no; // half-lines only
    auto comps = psi.minus_infinity_components();
    if (comps.empty()) return Tri::no;
    // -inf on (a, inf) inside (a0, inf), or on (-inf, a) inside (-inf, b0)
    const Interval& c = lo_fin ? comps.back() : comps.front();
    double a = lo_fin ? c.first : c.second;
    bool unbounded = lo_fin ? std::isinf(c.second) : std::isinf(c.first);
    if (!unbounded || !psi.in_interval(a)) return Tri::no;
    auto l = psi.limits(a);
    const SideLimit& s = lo_fin ? l.left : l.right;
    if (s.quality == Quality::inconclusive) return Tri::unknown;
    double v = psi.value(a);
    bool ok = s.liminf == -kInf && s.limsup > -kInf && s.limsup == v;
    return ok ? Tri::yes : Tri::no;
}

FeatureReport analyze(const DefiningFunction& psi) {
    FeatureReport r;
    r.minus_inf_components = psi.minus_infinity_components();
    for (const auto& c : r.minus_inf_components)
        (std::isfinite(c.first) && std::isfinite(c.second) ? r.I_R : r.I_infinity).push_back(c);
    r.I_N = detect_super_repelling(psi);
    r.D_U = detect_unbounded_discontinuities(psi);
    r.spikes = detect_contact_spikes(psi);
    r.cantor_combs = detect_cantor_combs(psi);
    if (std::isfinite(psi.lo()) || std::isfinite(psi.hi())) {
        r.dw_discontinuity = dw_discontinuity(psi);
        if (r.dw_discontinuity == DwDiscontinuity::double_ && !psi.bounded()) r.dw_discontinuity = DwDiscontinuity::simple;
    }
    r.exceptional_arc_to_unbounded = exceptional_arc_to_unbounded(psi);
    auto reg = equals_regularized(psi);
    if (reg.equal != Tri::yes)
        r.caveats.push_back("Int(closure(Omega)) = Omega is not established: psi differs from its regularization "
                            "or the check is inconclusive; fixed-point and discontinuity correspondences may fail");
    for (const auto& h : r.I_N)
        if (h.status != Tri::yes) r.caveats.push_back("suspected super-repelling height from an estimated limit");
    for (const auto& d : r.D_U)
        if (d.status != Tri::yes) r.caveats.push_back("suspected unbounded discontinuity from an estimated limit");
    return r;
}

} // namespace koenigs
