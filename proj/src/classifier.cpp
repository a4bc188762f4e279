#include "koenigs/classifier.hpp"

#include "koenigs/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace koenigs {

const char* to_string(SemigroupKind k) {
    switch (k) {
    case SemigroupKind::hyperbolic: return "hyperbolic";
    case SemigroupKind::positive_step: return "parabolic_positive_step";
    default: return "parabolic_zero_step";
    }
}

const char* to_string(Container::Kind k) {
    switch (k) {
    case Container::strip: return "strip";
    case Container::horizontal_half_plane: return "horizontal_half_plane";
    case Container::tilted_half_plane: return "tilted_half_plane";
    default: return "none";
    }
}

namespace {

/// Interval of slopes, possibly open at either end.
struct SlopeSet {
    double lo = -kInf, hi = kInf;
    bool lo_open = false, hi_open = false;

    bool empty() const { return lo > hi || (lo == hi && (lo_open || hi_open)); }
    bool contains(double m) const {
        if (m < lo || m > hi) return false;
        if (m == lo && lo_open) return false;
        if (m == hi && hi_open) return false;
        return true;
    }
    SlopeSet meet(const SlopeSet& o) const {
        SlopeSet r = *this;
        if (o.lo > r.lo || (o.lo == r.lo && o.lo_open)) r.lo = o.lo, r.lo_open = o.lo_open;
        if (o.hi < r.hi || (o.hi == r.hi && o.hi_open)) r.hi = o.hi, r.hi_open = o.hi_open;
        return r;
    }
    /// A member, as close to 0 as the set allows.
    double pick() const {
        if (contains(0)) return 0;
        double m = std::clamp(0.0, lo, hi);
        if (contains(m)) return m;
        if (std::isfinite(lo) && std::isfinite(hi)) return 0.5 * (lo + hi);
        return m == hi ? hi - 0.1 * std::max(1.0, std::fabs(hi)) : lo + 0.1 * std::max(1.0, std::fabs(lo));
    }
};

SlopeSet upto(double v, bool open) { return {-kInf, v, false, open}; }
SlopeSet from(double v, bool open) { return {v, kInf, open, false}; }

struct Tail {
    bool certified = false; // `feasible` is backed by a declared or structural lower bound
    SlopeSet feasible;      // slopes for which psi - m y stays bounded below on the tail
    SlopeSet outer;         // slopes not excluded by an upper bound
    std::string note;
};

/// Slope constraints from the tail at +inf (right) or -inf (left) of piece p.
Tail tail_info(const Piece& p, bool right) {
    Tail t;
    auto mirror = [right](SlopeSet s) {
        if (right) return s;
        return SlopeSet{-s.hi, -s.lo, s.hi_open, s.lo_open};
    };
    // on the left, psi(y) - m y with y = -s behaves like the right tail with slope -m
    auto constant = [&]() {
        t.certified = true;
        t.feasible = t.outer = mirror(upto(0, false));
    };
    switch (p.kind) {
    case PieceKind::point_spike:
    case PieceKind::cantor_comb: constant(); return t;
    case PieceKind::eta_boundary:
        // psi(y) ~ -(log|y|)^a at both ends
        t.certified = true;
        t.feasible = t.outer = mirror(upto(0, true));
        t.note = "eta boundary tends to -inf like -(log|y|)^a";
        return t;
    case PieceKind::minus_infinity: t.feasible = t.outer = SlopeSet{1, 0}; return t;
    default: break;
    }
    if (!p.expr.depends_on_y()) {
        constant();
        return t;
    }
    const Asymptotics& as = p.asymptotics;
    if (as.lower) {
        t.certified = true;
        const Envelope& e = *as.lower;
        if (e.kind == Envelope::affine)
            t.feasible = right ? upto(e.m, false) : from(e.m, false);
        else
            t.feasible = mirror(upto(0, e.k > 0));
    }
    if (as.upper) {
        const Envelope& e = *as.upper;
        if (e.kind == Envelope::affine)
            t.outer = right ? upto(e.m, false) : from(e.m, false);
        else
            t.outer = mirror(upto(0, e.k > 0));
    }
    return t;
}

/// Log-spaced heights covering [lo, hi], finite ends included.
std::vector<double> tail_grid(double lo, double hi) {
    std::vector<double> ys;
    if (std::isfinite(lo)) ys.push_back(lo);
    if (std::isfinite(hi)) ys.push_back(hi);
    if (lo < 0 && 0 < hi) ys.push_back(0);
    for (int j = -160; j <= 8 * 200; ++j) {
        double r = std::ldexp(std::exp2((j % 8) / 8.0), j / 8);
        for (double y : {r, -r})
            if (lo < y && y < hi) ys.push_back(y);
    }
    return ys;
}

/// psi(+-2^k)/(+-2^k) for k = 0..60 inside the span.
std::optional<double> asymptotic_slope(const Piece& p, bool right) {
    std::vector<double> s;
    for (int k = 0; k <= 60; ++k) {
        double y = right ? std::ldexp(1.0, k) : -std::ldexp(1.0, k);
        if (!p.interior(y)) continue;
        s.push_back(p.value(y) / y);
    }
    if (s.size() < 8) return std::nullopt;
    auto [mn, mx] = std::minmax_element(s.end() - 8, s.end());
    if (*mx - *mn <= 1e-6 * std::max(1.0, std::fabs(s.back()))) return s.back();
    return std::nullopt;
}

/// psi(y) - m y nondecreasing along y = +-2^k over the last sampled octaves.
bool tail_grows(const Piece& p, bool right, double m) {
    std::vector<double> g;
    for (int k = 0; k <= 60; ++k) {
        double y = right ? std::ldexp(1.0, k) : -std::ldexp(1.0, k);
        if (p.interior(y)) g.push_back(p.value(y) - m * y);
    }
    if (g.size() < 8) return false;
    for (size_t i = g.size() - 8; i + 1 < g.size(); ++i)
        if (g[i + 1] < g[i] - 1e-9 * (1 + std::fabs(g[i]))) return false;
    return true;
}

} // namespace

AffineMinorant affine_minorant(const DefiningFunction& psi) {
    if (std::isfinite(psi.lo()) || std::isfinite(psi.hi()))
        throw Error("affine_minorant: the interval must be the whole line");
    AffineMinorant out;
    ClosedSet z = psi.minus_infinity_lsc_set();
    if (!z.empty()) {
        std::ostringstream os;
        os << "the lower regularization is -inf at y=" << z.parts.front().first;
        out.exists = Tri::no;
        out.quality = z.quality == Quality::inconclusive ? Quality::estimated : z.quality;
        out.reason = os.str();
        return out;
    }
    if (z.quality == Quality::inconclusive) {
        out.reason = "one-sided limits are inconclusive at a breakpoint";
        return out;
    }

    const Piece& pl = psi.pieces().front();
    const Piece& pr = psi.pieces().back();
    Tail tl = tail_info(pl, false), tr = tail_info(pr, true);
    SlopeSet outer = tl.outer.meet(tr.outer);
    if (outer.empty()) {
        out.exists = Tri::no;
        out.reason = "declared upper envelopes leave no admissible slope";
        if (!tr.note.empty()) out.reason = tr.note;
        return out;
    }

    SlopeSet feasible = outer;
    bool certified = true;
    for (auto [t, p, right] : {std::tuple{&tl, &pl, false}, std::tuple{&tr, &pr, true}}) {
        if (t->certified) {
            feasible = feasible.meet(t->feasible);
            continue;
        }
        certified = false;
        auto s = asymptotic_slope(*p, right);
        if (!s) {
            out.reason = std::string("tail slope at ") + (right ? "+inf" : "-inf") + " does not stabilize";
            return out;
        }
        feasible = feasible.meet(right ? upto(*s, false) : from(*s, false));
    }
    if (feasible.empty()) {
        // lower envelopes are only sufficient, so this does not rule a minorant out
        out.reason = certified ? "lower tail envelopes admit no common slope" : "sampled tail slopes admit no common slope";
        return out;
    }
    double m = feasible.pick();
    for (auto [t, p, right] : {std::tuple{&tl, &pl, false}, std::tuple{&tr, &pr, true}}) {
        if (!t->certified && !tail_grows(*p, right, m)) {
            std::ostringstream os;
            os << "psi(y) - " << m << "*y is not seen to stay bounded toward " << (right ? "+inf" : "-inf");
            out.reason = os.str();
            return out;
        }
    }

    // lower bound of psi(y) - m y over the line
    double low = kInf;
    for (const Piece& p : psi.pieces()) {
        bool tail = std::isinf(p.a) || std::isinf(p.b);
        if (!tail) {
            low = std::min(low, piece_lower_bound(p, p.a, p.b, m, certified));
            continue;
        }
        std::vector<double> ys = tail_grid(p.a, p.b);
        bool enveloped = p.asymptotics.lower && (p.kind == PieceKind::finite_analytic || p.kind == PieceKind::oscillatory);
        bool constant = p.kind == PieceKind::point_spike || p.kind == PieceKind::cantor_comb ||
                        ((p.kind == PieceKind::finite_analytic || p.kind == PieceKind::oscillatory) &&
                         !p.expr.depends_on_y());
        if (constant) {
            // outside a bounded core the piece is a constant; the core is bounded directly
            double core_lo = std::isfinite(p.a) ? p.a : -1, core_hi = std::isfinite(p.b) ? p.b : 1;
            if (p.kind == PieceKind::point_spike) core_lo = std::min(core_lo, p.c0), core_hi = std::max(core_hi, p.c0);
            if (p.kind == PieceKind::cantor_comb)
                core_lo = std::min(core_lo, p.carrier.lo()), core_hi = std::max(core_hi, p.carrier.hi());
            low = std::min(low, piece_lower_bound(p, core_lo, core_hi, m, certified));
            double v = p.kind == PieceKind::point_spike ? p.background
                       : p.kind == PieceKind::cantor_comb ? (p.oscillate ? p.center : p.off_bound)
                                                          : p.expr.eval(0);
            // v - m y over the rest of the span; m was chosen so this is bounded
            for (double y : {core_lo, core_hi}) low = std::min(low, v - m * y);
        } else if (enveloped) {
            for (double y : ys) low = std::min(low, (*p.asymptotics.lower)(y) - m * y);
            low -= 0.5; // grid spacing margin for the explicit envelope
        } else if (p.kind == PieceKind::eta_boundary) {
            out.exists = Tri::no; // unreachable: outer slopes are empty
            return out;
        } else {
            certified = false;
            for (double y : ys) low = std::min(low, p.value(y) - m * y);
        }
    }
    for (double y : psi.structure_points()) low = std::min(low, psi.value(y) - m * y);
    if (!std::isfinite(low)) {
        out.reason = "no finite lower bound on the bounded pieces";
        return out;
    }
    out.exists = Tri::yes;
    out.m = m;
    out.c = std::floor(low) - 1;
    out.quality = certified ? Quality::exact : Quality::estimated;
    out.reason = certified ? "declared envelopes and certified bounds" : "sampled tails";
    return out;
}

bool SlopeRange::contains(double m) const {
    if (empty || m < lo || m > hi) return false;
    return !((m == lo && lo_open) || (m == hi && hi_open));
}

SlopeRange minorant_slopes(const DefiningFunction& psi) {
    SlopeRange r;
    ClosedSet z = psi.minus_infinity_lsc_set();
    if (!z.empty()) {
        r.empty = true;
        r.exact = z.quality != Quality::inconclusive;
        return r;
    }
    bool exact = z.quality != Quality::inconclusive;
    // compact parts of the closure of I carry no slope constraint once the -inf set is empty
    SlopeSet inner, outer;
    for (bool right : {false, true}) {
        if (right ? std::isfinite(psi.hi()) : std::isfinite(psi.lo())) continue;
        const Piece& p = right ? psi.pieces().back() : psi.pieces().front();
        Tail t = tail_info(p, right);
        if (t.certified) {
            inner = inner.meet(t.feasible);
            outer = outer.meet(t.outer);
            bool same = t.feasible.lo == t.outer.lo && t.feasible.hi == t.outer.hi &&
                        t.feasible.lo_open == t.outer.lo_open && t.feasible.hi_open == t.outer.hi_open;
            exact = exact && same;
            continue;
        }
        exact = false;
        auto s = asymptotic_slope(p, right);
        if (!s) {
            inner = SlopeSet{1, 0};
            continue;
        }
        inner = inner.meet(right ? upto(*s, true) : from(*s, true));
        outer = outer.meet(right ? upto(*s, false) : from(*s, false));
    }
    if (inner.empty()) {
        r.empty = true;
        r.exact = exact || outer.empty();
        return r;
    }
    r.lo = inner.lo, r.hi = inner.hi, r.lo_open = inner.lo_open, r.hi_open = inner.hi_open;
    r.exact = exact;
    return r;
}

SemigroupClass classify(const DefiningFunction& psi) {
    SemigroupClass c;
    bool lo_fin = std::isfinite(psi.lo()), hi_fin = std::isfinite(psi.hi());
    if (lo_fin && hi_fin) {
        c.kind = SemigroupKind::hyperbolic;
        c.strip_width = psi.hi() - psi.lo();
        c.container.kind = Container::strip;
        c.container.a = psi.lo();
        c.container.b = psi.hi();
    } else if (lo_fin || hi_fin) {
        c.kind = SemigroupKind::positive_step;
        c.container.kind = Container::horizontal_half_plane;
        c.container.upper = lo_fin;
        c.container.a = lo_fin ? psi.lo() : psi.hi();
    } else {
        c.kind = SemigroupKind::zero_step;
        c.minorant = affine_minorant(psi);
        if (c.minorant.exists == Tri::yes) {
            c.container.kind = Container::tilted_half_plane;
            c.container.m = c.minorant.m;
            c.container.c = c.minorant.c;
        }
    }
    return c;
}

} // namespace koenigs
