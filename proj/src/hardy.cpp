#include "koenigs/hardy.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace koenigs {

// ------------------------------------------------------------ exact Lambda_infinity

Tri InftyRegion::contains(cplx lambda) const {
    if (lambda == cplx(0, 0)) return Tri::yes;
    if (lambda.real() > 0) return Tri::no;
    if (lambda.real() == 0) return tri_of(lambda.imag() > 0 ? plus_i : minus_i);
    // lambda = -s (1 + i m): Re(lambda z) = -s (x - m y) is bounded above iff psi(y) >= m y + c
    double m = lambda.imag() / lambda.real();
    if (slopes.contains(m)) return Tri::yes;
    return slopes.exact ? Tri::no : Tri::unknown;
}

std::string InftyRegion::describe() const {
    std::ostringstream os;
    os << "{0}";
    if (plus_i) os << " u i[0,inf)";
    if (minus_i) os << " u -i[0,inf)";
    if (!slopes.empty) {
        os << " u {-s(1+im): s>0, m in " << (slopes.lo_open ? "(" : "[") << ext_to_string(slopes.lo + 0.0) << ","
           << ext_to_string(slopes.hi + 0.0) << (slopes.hi_open ? ")" : "]") << "}";
    }
    if (!slopes.exact) os << " (slope set known from inside only)";
    return os.str();
}

InftyRegion lambda_infty_region(const DefiningFunction& psi) {
    InftyRegion r;
    r.plus_i = std::isfinite(psi.lo());
    r.minus_i = std::isfinite(psi.hi());
    r.slopes = minorant_slopes(psi);
    r.lower_bound_only = !r.slopes.exact;
    return r;
}

FrequencyRegion lambda_infty(const DefiningFunction& psi) {
    FrequencyRegion f;
    f.exact_infty = lambda_infty_region(psi);
    if (psi.bounded())
        f.p_template = "-c1/p < Re lambda < c2/p up to the boundary lines, with unknown c1, c2 > 0; "
                       "contains the imaginary axis";
    else
        f.p_template = "contains Lambda_infinity; not sampled without a conformal transplant";
    return f;
}

const char* to_string(Membership m) {
    switch (m) {
    case Membership::member: return "member";
    case Membership::non_member: return "non_member";
    default: return "inconclusive";
    }
}

// ------------------------------------------------------------ canonical domains

CanonicalDomain CanonicalDomain::log(double a, double b) {
    if (!(a > 0 && a < 1)) throw ValidationError("log domain exponent must lie in (0, 1)");
    return {log_domain, a, b};
}

CanonicalDomain CanonicalDomain::parse(const std::string& name) {
    if (name == "half_plane" || name == "right_half_plane") return half_plane();
    if (name == "upper_half_plane") return upper();
    if (name == "strip") return strip();
    auto args = [&](size_t pos) {
        std::vector<double> v;
        std::stringstream ss(name.substr(pos));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                v.push_back(std::stod(tok));
            } catch (const std::exception&) {
                throw ValidationError("bad canonical domain parameters in '" + name + "'");
            }
        }
        return v;
    };
    if (name.rfind("eta:", 0) == 0) {
        auto v = args(4);
        if (v.size() != 1 || !(v[0] > 0)) throw ValidationError("expected eta:A with A > 0");
        return eta(v[0]);
    }
    if (name.rfind("log:", 0) == 0) {
        auto v = args(4);
        if (v.size() != 2) throw ValidationError("expected log:A,B");
        return log(v[0], v[1]);
    }
    throw ValidationError("unknown canonical domain '" + name +
                          "' (half_plane, upper_half_plane, strip, eta:A, log:A,B)");
}

std::string CanonicalDomain::name() const {
    std::ostringstream os;
    switch (kind) {
    case half_plane_right: return "half_plane";
    case upper_half_plane: return "upper_half_plane";
    case strip_pi: return "strip";
    case eta_domain: os << "eta:" << a; return os.str();
    case log_domain: os << "log:" << a << "," << b; return os.str();
    }
    return "";
}

namespace {

cplx from_right_half_plane(const CanonicalDomain& d, cplx c) {
    switch (d.kind) {
    case CanonicalDomain::half_plane_right: return c;
    case CanonicalDomain::upper_half_plane: return cplx(0, 1) * c;
    case CanonicalDomain::strip_pi: return std::log(c);
    case CanonicalDomain::eta_domain: return EtaMap{d.a}.eta(c);
    case CanonicalDomain::log_domain: return EtaMap{d.a}.eta(c) + d.b;
    }
    return c;
}

} // namespace

cplx CanonicalDomain::map(double eps, double s, int sigma, double t) const {
    // Cayley image of w = (1-eps) e^{i theta}, theta = s + sigma t with s in {0, pi}
    double sn = std::sin(t), h = std::sin(t / 2), c = std::cos(t / 2);
    bool at_zero = s == 0;
    double sin_th = at_zero ? sigma * sn : -sigma * sn;
    cplx C;
    if (eps == 0) {
        // boundary: C = i cot(theta/2), purely imaginary
        double tn = std::tan(t / 2);
        C = at_zero ? cplx(0, sigma / tn) : cplx(0, -sigma * tn);
    } else {
        double omc = at_zero ? 2 * h * h : 2 * c * c; // 1 - cos theta
        double r = 1 - eps;
        double d = (eps + r * omc) * (eps + r * omc) + (r * sin_th) * (r * sin_th);
        C = cplx(eps * (2 - eps) / d, 2 * r * sin_th / d);
    }
    return from_right_half_plane(*this, C);
}

cplx CanonicalDomain::map(cplx w) const { return from_right_half_plane(*this, (1.0 + w) / (1.0 - w)); }

std::vector<double> CanonicalDomain::singular_angles() const {
    if (kind == strip_pi) return {0, M_PI};
    return {0};
}

double CanonicalDomain::lo() const {
    switch (kind) {
    case upper_half_plane: return 0;
    case strip_pi: return -M_PI / 2;
    default: return -kInf;
    }
}

double CanonicalDomain::hi() const { return kind == strip_pi ? M_PI / 2 : kInf; }

double CanonicalDomain::psi(double y) const {
    switch (kind) {
    case half_plane_right: return 0;
    case upper_half_plane:
    case strip_pi: return -kInf;
    case eta_domain: return EtaMap{a}.psi(y);
    case log_domain: return EtaMap{a}.psi(y) + b;
    }
    return 0;
}

namespace {

/// One arc of the circle from a singular angle s, parametrized by the offset t.
struct HalfArc {
    double s;
    int sigma;
    double length;
};

std::vector<HalfArc> half_arcs(const CanonicalDomain& d) {
    std::vector<double> s = d.singular_angles();
    std::sort(s.begin(), s.end());
    std::vector<HalfArc> out;
    for (size_t i = 0; i < s.size(); ++i) {
        double next = i + 1 < s.size() ? s[i + 1] : s[0] + 2 * M_PI;
        double half = (next - s[i]) / 2;
        out.push_back({s[i], +1, half});
        out.push_back({std::fmod(next, 2 * M_PI), -1, half});
    }
    return out;
}

/// Running log of a sum of exponentials.
struct LogSum {
    double m = -kInf, s = 0;
    void add(double x) {
        if (x == -kInf) return;
        if (x > m) {
            s = s * std::exp(m - x) + 1;
            m = x;
        } else {
            s += std::exp(x - m);
        }
    }
    void add_log(const LogSum& o) {
        if (o.m == -kInf) return;
        add(o.m + std::log(o.s));
    }
    double value() const { return m == -kInf ? -kInf : m + std::log(s); }
};

constexpr double kCell = 0.5; // Gauss-Legendre cell length in u = log t

/// Adds log of the integral of e^{v(u)} over [u0, u1].
template <class V>
void integrate_log(LogSum& acc, V&& v, double u0, double u1) {
    using Rule = boost::math::quadrature::gauss<double, 10>;
    int n = std::max(1, static_cast<int>(std::ceil((u1 - u0) / kCell)));
    double h = (u1 - u0) / n;
    const auto& x = Rule::abscissa();
    const auto& w = Rule::weights();
    for (int c = 0; c < n; ++c) {
        double mid = u0 + (c + 0.5) * h;
        for (size_t i = 0; i < x.size(); ++i) {
            double lw = std::log(w[i] * h / 2);
            acc.add(v(mid + x[i] * h / 2) + lw);
            if (x[i] != 0) acc.add(v(mid - x[i] * h / 2) + lw);
        }
    }
}
constexpr int kBoundaryLevels = 9;  // cutoffs pi 2^{-2^k}, k = 1..9
constexpr int kRadialLevels = 40;   // radii 1 - 2^{-k}

} // namespace

bool CanonicalDomain::winding_check(int samples) const {
    // along each arc between singular angles the boundary image must advance strictly,
    // in Im z, or in Re z on horizontal edges
    for (const HalfArc& arc : half_arcs(*this)) {
        std::vector<cplx> pts;
        int n = std::max(16, samples / static_cast<int>(2 * singular_angles().size()));
        for (int i = 1; i < n; ++i) pts.push_back(map(0, arc.s, arc.sigma, arc.length * i / n));
        auto strictly = [&](auto key) {
            int dir = 0;
            for (size_t i = 1; i < pts.size(); ++i) {
                double d = key(pts[i]) - key(pts[i - 1]);
                if (!std::isfinite(d)) return false;
                int sd = d > 0 ? 1 : d < 0 ? -1 : 0;
                if (sd == 0 || (dir != 0 && sd != dir)) return false;
                dir = sd;
            }
            return true;
        };
        bool horizontal = true;
        for (const cplx& z : pts) horizontal = horizontal && std::fabs(z.imag() - pts[0].imag()) < 1e-9;
        if (!(horizontal ? strictly([](cplx z) { return z.real(); }) : strictly([](cplx z) { return z.imag(); })))
            return false;
    }
    return true;
}

MembershipResult hardy_membership(cplx lambda, const CanonicalDomain& dom, double p) {
    if (!(p >= 1) || std::isinf(p)) throw ValidationError("p must lie in [1, inf)");
    MembershipResult res;
    if (lambda == cplx(0, 0)) {
        res.status = Membership::member;
        res.note = "constant function";
        return res;
    }
    auto logf = [&](double eps, const HalfArc& a, double t) {
        cplx z = dom.map(eps, a.s, a.sigma, t);
        double g = p * (lambda * z).real();
        return std::isnan(g) ? kInf : g;
    };
    const double log2pi = std::log(2 * M_PI);
    auto arcs = half_arcs(dom);

    // circle means at r = 1 - 2^-k, on a log grid in the offset t down to eps * 1e-8
    for (int k = 1; k <= kRadialLevels; ++k) {
        double eps = std::ldexp(1.0, -k);
        LogSum total;
        for (const HalfArc& a : arcs) {
            double ut = std::log(a.length), ub = std::log(eps * 1e-8);
            integrate_log(total, [&](double u) { return logf(eps, a, std::exp(u)) + u; }, ub, ut);
            total.add(logf(eps, a, std::exp(ub)) + ub); // the piece below the grid
        }
        res.radial_log_means.push_back(total.value() - log2pi);
    }

    // boundary integrals truncated at t >= pi 2^{-2^k}; the rest is estimated from the
    // local power law of the integrand when it decays
    std::vector<double> cut(kBoundaryLevels + 1);
    for (int k = 1; k <= kBoundaryLevels; ++k) cut[k] = std::log(M_PI) - std::ldexp(1.0, k) * std::log(2.0);
    std::vector<LogSum> partial(kBoundaryLevels + 1);
    std::vector<double> tail(kBoundaryLevels + 1, 0); // remainder estimates, summed over arcs
    std::vector<bool> tail_ok(kBoundaryLevels + 1, true);
    for (const HalfArc& a : arcs) {
        double ut = std::log(a.length);
        LogSum acc;
        double top = ut;
        for (int k = 1; k <= kBoundaryLevels; ++k) {
            integrate_log(acc, [&](double u) { return logf(0, a, std::exp(u)) + u; }, cut[k], top);
            top = cut[k];
            partial[k].add_log(acc);
            // integrand in u behaves like e^{v}, v ~ beta u near the cutoff
            double v0 = logf(0, a, std::exp(cut[k])) + cut[k];
            double v1 = logf(0, a, std::exp(cut[k] + 1)) + cut[k] + 1;
            double beta = v1 - v0;
            if (beta > 0.05 && std::isfinite(v0))
                tail[k] += std::exp(v0) / beta;
            else
                tail_ok[k] = false;
        }
    }
    std::vector<double> corrected(kBoundaryLevels + 1, kInf);
    for (int k = 1; k <= kBoundaryLevels; ++k) {
        double b = partial[k].value() - log2pi;
        res.boundary_log_integrals.push_back(b);
        if (tail_ok[k]) corrected[k] = std::exp(b) + tail[k] / (2 * M_PI);
    }

    auto growing = [](const std::vector<double>& v, double threshold) {
        if (v.size() < 4 || !(v.back() > threshold)) return false;
        for (size_t i = v.size() - 3; i < v.size(); ++i)
            if (!(v[i] > v[i - 1])) return false;
        return true;
    };
    const double big = std::log(1e12);
    res.log_mean = res.radial_log_means.back();
    if (growing(res.radial_log_means, big)) {
        res.status = Membership::non_member;
        res.note = "circle means grow without bound";
        return res;
    }
    if (growing(res.boundary_log_integrals, big)) {
        res.status = Membership::non_member;
        res.note = "boundary integral diverges at a singular point";
        res.log_mean = res.boundary_log_integrals.back();
        return res;
    }
    int stable = 0;
    for (int k = 2; k <= kBoundaryLevels; ++k) {
        double a = corrected[k - 1], b = corrected[k];
        bool ok = std::isfinite(a) && std::isfinite(b) && std::fabs(b - a) <= 1e-6 * std::max(1.0, std::fabs(b));
        stable = ok ? stable + 1 : 0;
    }
    if (stable >= 3) {
        double limit = corrected[kBoundaryLevels];
        // subharmonicity: circle means increase toward the boundary integral
        bool below = true;
        for (double m : res.radial_log_means) below = below && std::exp(m) <= limit * (1 + 1e-3) + 1e-12;
        if (below) {
            res.status = Membership::member;
            res.log_mean = std::log(limit);
            res.note = "boundary integral converges and bounds the circle means";
            return res;
        }
        res.note = "circle means exceed the boundary integral";
        return res;
    }
    res.note = "neither convergence nor divergence is certified";
    return res;
}

// ------------------------------------------------------------ regions and checks

FrequencyRegion canonical_region(const CanonicalDomain& dom, const std::vector<double>& ps,
                                 const std::vector<cplx>& grid) {
    FrequencyRegion f;
    InftyRegion& r = f.exact_infty;
    r.plus_i = std::isfinite(dom.lo());
    r.minus_i = std::isfinite(dom.hi());
    switch (dom.kind) {
    case CanonicalDomain::half_plane_right: r.slopes = {false, 0, 0, false, false, true}; break;
    case CanonicalDomain::strip_pi:
    case CanonicalDomain::upper_half_plane:
    case CanonicalDomain::eta_domain:
    case CanonicalDomain::log_domain: r.slopes.empty = true; break;
    }
    for (double p : ps) {
        auto& v = f.p_samples[p];
        for (cplx l : grid) v.push_back({l, hardy_membership(l, dom, p).status});
    }
    return f;
}

ConsistencyReport scaling_law_check(const CanonicalDomain& dom, double p, double q, const std::vector<cplx>& grid) {
    ConsistencyReport r;
    for (cplx l : grid) {
        Membership a = hardy_membership(l, dom, p).status;
        Membership b = a == Membership::inconclusive ? a : hardy_membership(l * (p / q), dom, q).status;
        if (a == Membership::inconclusive || b == Membership::inconclusive) {
            ++r.skipped;
            continue;
        }
        ++r.checked;
        if (a != b) r.mismatches.push_back(l);
    }
    return r;
}

ConsistencyReport convexity_check(const CanonicalDomain& dom, double p, const std::vector<cplx>& grid) {
    ConsistencyReport r;
    auto key = [](cplx l) { return std::make_pair(std::llround(l.real() * 1e9), std::llround(l.imag() * 1e9)); };
    std::map<std::pair<long long, long long>, Membership> memo;
    auto status = [&](cplx l) {
        auto [it, fresh] = memo.try_emplace(key(l), Membership::inconclusive);
        if (fresh) it->second = hardy_membership(l, dom, p).status;
        return it->second;
    };
    std::vector<cplx> members;
    for (cplx l : grid)
        if (status(l) == Membership::member) members.push_back(l);
    // on large grids only midpoints that are grid points are tested, which keeps the cost linear
    bool grid_only = members.size() > 40;
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j) {
            cplx mid = 0.5 * (members[i] + members[j]);
            if (grid_only && !memo.count(key(mid))) continue;
            Membership m = status(mid);
            if (m == Membership::inconclusive) {
                ++r.skipped;
                continue;
            }
            ++r.checked;
            if (m != Membership::member) r.mismatches.push_back(mid);
        }
    return r;
}

ConsistencyReport p_monotonicity_check(const CanonicalDomain& dom, double p, double q, const std::vector<cplx>& grid) {
    if (q < p) std::swap(p, q);
    ConsistencyReport r;
    for (cplx l : grid) {
        Membership at_q = hardy_membership(l, dom, q).status;
        if (at_q != Membership::member) {
            ++r.skipped;
            continue;
        }
        Membership at_p = hardy_membership(l, dom, p).status;
        if (at_p == Membership::inconclusive) {
            ++r.skipped;
            continue;
        }
        ++r.checked;
        if (at_p != Membership::member) r.mismatches.push_back(l);
    }
    return r;
}

bool canonical_contains(const CanonicalDomain& outer, const CanonicalDomain& inner) {
    if (inner.lo() < outer.lo() || inner.hi() > outer.hi()) return false;
    std::vector<double> ys;
    double lo = inner.lo(), hi = inner.hi();
    if (std::isfinite(lo) && std::isfinite(hi)) {
        for (int i = 1; i < 512; ++i) ys.push_back(lo + (hi - lo) * i / 512);
    } else {
        for (int j = -40; j <= 48; ++j) {
            double y = std::pow(10.0, j / 8.0);
            for (double v : {y, -y})
                if (v > lo && v < hi) ys.push_back(v);
        }
        if (0 > lo && 0 < hi) ys.push_back(0);
    }
    for (double y : ys)
        if (inner.psi(y) < outer.psi(y)) return false;
    return true;
}

ConsistencyReport domain_monotonicity_check(const CanonicalDomain& inner, const CanonicalDomain& outer, double p,
                                            const std::vector<cplx>& grid) {
    if (!canonical_contains(outer, inner))
        throw ValidationError(outer.name() + " does not contain " + inner.name());
    ConsistencyReport r;
    for (cplx l : grid) {
        Membership o = hardy_membership(l, outer, p).status;
        if (o != Membership::member) {
            ++r.skipped;
            continue;
        }
        Membership i = hardy_membership(l, inner, p).status;
        if (i == Membership::inconclusive) {
            ++r.skipped;
            continue;
        }
        ++r.checked;
        if (i != Membership::member) r.mismatches.push_back(l);
    }
    return r;
}

namespace {

/// Bracket of the member / non-member transition on the ray lambda = sign * x, x > 0.
std::pair<double, double> transition(const CanonicalDomain& dom, double p, double sign) {
    auto status = [&](double x) { return hardy_membership(cplx(sign * x, 0), dom, p).status; };
    double lo = 0, hi = 0.5;
    while (status(hi) != Membership::non_member) {
        if (status(hi) == Membership::member) lo = hi;
        hi *= 2;
        if (hi > 1e3) return {lo, kInf};
    }
    for (int it = 0; it < 40 && hi - lo > 1e-4; ++it) {
        double mid = 0.5 * (lo + hi);
        Membership m = status(mid);
        if (m == Membership::member) {
            lo = mid;
            continue;
        }
        if (m == Membership::non_member) {
            hi = mid;
            continue;
        }
        // inconclusive near the edge: tighten from both sides if the quarter points allow it
        double q1 = 0.5 * (lo + mid), q3 = 0.5 * (mid + hi);
        bool moved = false;
        if (status(q1) == Membership::member) lo = q1, moved = true;
        if (status(q3) == Membership::non_member) hi = q3, moved = true;
        if (!moved) break;
    }
    return {lo, hi};
}

} // namespace

BandEstimate betsakos_band(const CanonicalDomain& dom, double p) {
    if (dom.kind != CanonicalDomain::strip_pi) throw ValidationError("the band estimate needs the strip");
    BandEstimate b;
    auto [l2, h2] = transition(dom, p, +1);
    auto [l1, h1] = transition(dom, p, -1);
    b.c2_bracket = {p * l2, p * h2};
    b.c1_bracket = {p * l1, p * h1};
    b.c2_est = 0.5 * (b.c2_bracket.first + b.c2_bracket.second);
    b.c1_est = 0.5 * (b.c1_bracket.first + b.c1_bracket.second);
    for (double y : {-5.0, -1.0, 1.0, 5.0})
        b.imaginary_axis_ok = b.imaginary_axis_ok && hardy_membership(cplx(0, y), dom, p).status == Membership::member;
    return b;
}

} // namespace koenigs
