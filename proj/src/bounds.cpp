#include "koenigs/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace koenigs {

namespace {

/// Branch and bound for the infimum of sign*(f(y) - slope*y); the result is a lower bound.
double branch_and_bound(const Expr& f, double lo, double hi, double slope, int budget, double sign) {
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) return -kInf;
    auto enclose = [&](double l, double h) {
        Ival v = f.eval(Ival{l, h});
        Ival s = ival::add(v, ival::mul(Ival{-slope, -slope}, Ival{l, h}));
        double lb = sign > 0 ? s.lo : -s.hi;
        return std::isnan(lb) ? -kInf : lb;
    };
    auto point = [&](double y) {
        double v = sign * (f.eval(y) - slope * y);
        return std::isnan(v) ? kInf : v;
    };
    struct Box {
        double l, h, lb;
        bool operator<(const Box& o) const { return lb > o.lb; }
    };
    std::priority_queue<Box> q;
    q.push({lo, hi, enclose(lo, hi)});
    double best = std::min({point(lo), point(hi), point(0.5 * (lo + hi))});
    for (int it = 0; it < budget && !q.empty(); ++it) {
        Box b = q.top();
        if (std::isfinite(b.lb) && best - b.lb <= 1e-9 * (1 + std::fabs(best))) break;
        q.pop();
        double m = 0.5 * (b.l + b.h);
        if (m <= b.l || m >= b.h) {
            // box cannot be split further: its enclosure stands
            q.push({b.l, b.h, b.lb});
            break;
        }
        best = std::min(best, point(m));
        q.push({b.l, m, enclose(b.l, m)});
        q.push({m, b.h, enclose(m, b.h)});
    }
    return q.empty() ? best : std::min(best, q.top().lb);
}

} // namespace

double certified_inf(const Expr& f, double lo, double hi, double slope, int budget) {
    return branch_and_bound(f, lo, hi, slope, budget, 1);
}

double certified_sup(const Expr& f, double lo, double hi, int budget) {
    return -branch_and_bound(f, lo, hi, 0, budget, -1);
}

double eta_lipschitz(double a) {
    // |eta' - 1| = a |log(w+3)|^(a-1) / |w+3| on Re w >= 0, bounded via |w+3| >= 3
    double q = 0;
    for (double r = 3; r < 1e12; r *= 1.05) {
        double lmin = std::log(r), lmax = std::log(r) + M_PI / 2;
        double lf = a >= 1 ? std::pow(lmax, a - 1) : std::pow(lmin, a - 1);
        q = std::max(q, a * lf / r);
    }
    if (q >= 1) return kInf;
    return q / (1 - q);
}

double piece_lower_bound(const Piece& p, double lo, double hi, double slope, bool& certified) {
    lo = std::max(lo, p.a);
    hi = std::min(hi, p.b);
    if (!(lo <= hi)) return kInf;
    auto lin_min = [&](double v) { return std::min(v - slope * lo, v - slope * hi); };
    switch (p.kind) {
    case PieceKind::minus_infinity: return -kInf;
    case PieceKind::point_spike: return lin_min(std::min(p.background, p.spike_value));
    case PieceKind::cantor_comb: {
        double glo = p.oscillate ? p.center - p.amplitude : p.off_bound;
        double outside = p.oscillate ? p.center : p.off_bound;
        return lin_min(std::min({p.on_value, glo, outside}));
    }
    case PieceKind::eta_boundary: {
        certified = false;
        double lip = eta_lipschitz(p.eta.a) + std::fabs(slope);
        int n = 256;
        double h = (hi - lo) / n, best = kInf;
        for (int i = 0; i <= n; ++i) {
            double y = lo + h * i;
            best = std::min(best, p.eta.psi(y) - slope * y);
        }
        return best - lip * h / 2;
    }
    case PieceKind::finite_analytic:
    case PieceKind::oscillatory: {
        double lb = certified_inf(p.expr, lo, hi, slope);
        if (std::isfinite(lb)) return lb;
        // singular formula at an endpoint: fall back to samples away from it
        certified = false;
        double best = kInf;
        for (int i = 1; i < 4096; ++i) {
            double y = lo + (hi - lo) * (i / 4096.0);
            double v = p.expr.eval(y) - slope * y;
            if (!std::isnan(v)) best = std::min(best, v);
        }
        for (const DeclaredLimit* d : {&p.at_lo, &p.at_hi})
            if (d->declared()) best = std::min(best, *d->liminf - std::fabs(slope) * std::max(std::fabs(lo), std::fabs(hi)));
        return best;
    }
    }
    return -kInf;
}

} // namespace koenigs
