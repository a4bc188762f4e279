#include "koenigs/approx.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

namespace koenigs {

namespace {

constexpr cplx I(0, 1);

template <class F>
cplx integrate(F&& f, double lo, double hi) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    double err_re = 0, err_im = 0;
    double re = GK::integrate([&](double t) { return f(t).real(); }, lo, hi, 12, 1e-13, &err_re);
    double im = GK::integrate([&](double t) { return f(t).imag(); }, lo, hi, 12, 1e-13, &err_im);
    if (!std::isfinite(re) || !std::isfinite(im) || !std::isfinite(err_re) || !std::isfinite(err_im))
        throw Error("quadrature failed on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return {re, im};
}

} // namespace

cplx ExpSum::operator()(cplx z) const {
    cplx s = 0;
    for (const ExpTerm& t : terms) {
        switch (family) {
        case ExpFamily::exp_lambda_z: s += t.coefficient * std::exp(t.frequency * z); break;
        case ExpFamily::exp_itz: s += t.coefficient * std::exp(I * t.frequency * z); break;
        case ExpFamily::laplace: s += t.coefficient * std::exp(-t.frequency * z); break;
        }
    }
    return s;
}

cplx phi_beta(cplx beta, cplx z) {
    if (!(beta.real() > M_PI / 2)) throw ValidationError("phi_beta needs Re beta > pi/2");
    cplx d = -I * z + beta;
    if (d == cplx(0, 0)) throw ValidationError("phi_beta: pole at z = -i beta");
    return 1.0 / d;
}

cplx phi_beta_R(cplx beta, double R, cplx z) {
    if (!(R >= 0)) throw ValidationError("phi_beta_R needs R >= 0");
    cplx d = I * z - beta;
    cplx rd = R * d;
    if (std::abs(rd) < 1e-4) return R * (1.0 + rd / 2.0 + rd * rd / 6.0 + rd * rd * rd / 24.0);
    return (std::exp(rd) - 1.0) / d;
}

double AtomicMeasure::total_variation() const {
    double s = 0;
    for (const Atom& a : atoms) s += std::abs(a.weight);
    return s;
}

cplx AtomicMeasure::laplace(cplx z) const {
    cplx s = 0;
    for (const Atom& a : atoms) s += a.weight * std::exp(-a.t * z);
    return s;
}

ExpSum AtomicMeasure::strip_sum() const {
    ExpSum s;
    s.family = ExpFamily::exp_itz;
    for (const Atom& a : atoms) s.terms.push_back({a.weight, a.t});
    return s;
}

ExpSum AtomicMeasure::laplace_sum() const {
    ExpSum s;
    s.family = ExpFamily::laplace;
    for (const Atom& a : atoms) s.terms.push_back({a.weight, a.t});
    return s;
}

AtomicMeasure discretize_measure(const std::function<cplx(double)>& density, double R, int n) {
    if (!(R > 0) || n < 1) throw ValidationError("discretize_measure needs R > 0 and n >= 1");
    AtomicMeasure m;
    m.R = R;
    for (int j = 1; j <= n; ++j) {
        double lo = (j - 1) * R / n, hi = j * R / n;
        m.atoms.push_back({hi, integrate(density, lo, hi)});
    }
    return m;
}

AtomicMeasure convolve(const AtomicMeasure& a, const AtomicMeasure& b) {
    std::map<long long, Atom> merged;
    for (const Atom& x : a.atoms)
        for (const Atom& y : b.atoms) {
            double t = x.t + y.t;
            auto [it, fresh] = merged.try_emplace(std::llround(t * 1e9), Atom{t, 0});
            it->second.weight += x.weight * y.weight;
        }
    AtomicMeasure c;
    c.R = a.R + b.R;
    for (auto& [k, at] : merged) c.atoms.push_back(at);
    return c;
}

double sup_error(const ExpSum& sum, const std::function<cplx(cplx)>& target, const std::vector<cplx>& grid) {
    double e = 0;
    for (cplx z : grid) e = std::max(e, std::abs(sum(z) - target(z)));
    return e;
}

std::vector<cplx> strip_grid(int nx, int ny, double x_extent) {
    std::vector<cplx> g;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            double x = nx == 1 ? 0 : -x_extent + 2 * x_extent * i / (nx - 1);
            double y = ny == 1 ? 0 : -M_PI / 2 + M_PI * j / (ny - 1);
            g.push_back({x, y});
        }
    return g;
}

double strip_uniform_bound(const AtomicMeasure& mu) {
    double s = 0;
    for (const Atom& a : mu.atoms) s += std::abs(a.weight) * std::exp(M_PI / 2 * a.t);
    return s;
}

// ------------------------------------------------------------ least squares

namespace {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

void sample_system(const std::function<cplx(cplx)>& target, const CanonicalDomain& dom,
                   const std::vector<cplx>& freq, int log2_nodes, int log2_gap, Mat& A, Vec& b) {
    int N = 1 << log2_nodes;
    double rho = 1 - std::ldexp(1.0, -log2_gap);
    double scale = 1 / std::sqrt(static_cast<double>(N));
    A.resize(N, static_cast<Eigen::Index>(freq.size()));
    b.resize(N);
    for (int j = 0; j < N; ++j) {
        double th = 2 * M_PI * (j + 0.5) / N;
        cplx z = dom.map(std::polar(rho, th));
        b(j) = target(z) * scale;
        for (size_t k = 0; k < freq.size(); ++k) A(j, static_cast<Eigen::Index>(k)) = std::exp(freq[k] * z) * scale;
    }
}

} // namespace

FitResult least_squares_fit(const std::function<cplx(cplx)>& target, const CanonicalDomain& dom,
                            const std::vector<cplx>& frequencies, const FitOptions& opt) {
    if (frequencies.empty()) throw ValidationError("least_squares_fit needs at least one frequency");
    Mat A;
    Vec b;
    sample_system(target, dom, frequencies, opt.log2_nodes, opt.log2_gap, A, b);
    Eigen::Index n = A.rows(), m = A.cols();
    // ridge as extra rows keeps the QR away from the squared condition number of the Gram matrix
    Mat Aug(n + m, m);
    Aug.topRows(n) = A;
    Aug.bottomRows(m) = std::sqrt(opt.ridge) * Mat::Identity(m, m);
    Vec rhs = Vec::Zero(n + m);
    rhs.head(n) = b;

    FitResult r;
    r.sum.family = ExpFamily::exp_lambda_z;
    r.target_norm = b.norm();
    if (!A.allFinite() || !b.allFinite()) {
        r.conditioning_ok = false;
        r.error = r.refined_error = kInf;
        return r;
    }
    Eigen::HouseholderQR<Mat> qr(Aug);
    Vec c = qr.solve(rhs);
    auto diag = qr.matrixQR().diagonal().cwiseAbs();
    r.condition = diag.maxCoeff() / diag.minCoeff();
    r.conditioning_ok = c.allFinite() && std::isfinite(r.condition);
    for (Eigen::Index k = 0; k < m; ++k) r.sum.terms.push_back({c(k), frequencies[static_cast<size_t>(k)]});
    r.error = (A * c - b).norm();
    sample_system(target, dom, frequencies, opt.log2_nodes + 1, opt.log2_gap + 1, A, b);
    r.refined_error = (A * c - b).norm();
    return r;
}

// ------------------------------------------------------------ alpha map

cplx alpha_map(cplx z) {
    if (std::abs(z) < 0.25) {
        // sum over n of (-z)^n 2 / (n! (n+1)(n+2)(n+3))
        cplx s = 0, pw = 1;
        double fact = 1;
        for (int k = 0; k <= 12; ++k) {
            if (k > 0) fact *= k;
            s += pw * (2.0 / (fact * (k + 1) * (k + 2) * (k + 3)));
            pw *= -z;
        }
        return s;
    }
    return (-2.0 * std::exp(-z) - 2.0 * z + z * z + 2.0) / (z * z * z);
}

cplx alpha_quadrature(cplx z) {
    return integrate([&](double l) { return (1 + l) * (1 + l) * std::exp(l * z); }, -1, 0);
}

cplx inverse_alpha_derivative(cplx z) {
    cplx e = std::exp(-z), z2 = z * z, z3 = z2 * z, z4 = z2 * z2;
    cplx k1 = -4.0 * z3 + 6.0 * z2 - (2.0 * z3 + 6.0 * z2) * e;
    cplx q = z2 - 2.0 * z + 2.0 - 2.0 * e;
    return (z4 + k1) / (q * q);
}

namespace {

std::vector<double> boundary_heights() {
    std::vector<double> ys;
    for (int i = 0; i <= 400; ++i) ys.push_back(-1 + i / 200.0);
    for (int j = 0; j <= 192; ++j) {
        double y = std::pow(10.0, j / 16.0);
        ys.push_back(y);
        ys.push_back(-y);
    }
    return ys;
}

} // namespace

ChooseBResult choose_b(const DefiningFunction& psi, double a, double K, int max_b) {
    if (!(a > 0 && a < 1)) throw ValidationError("choose_b needs a in (0, 1)");
    if (!(K > 0)) throw ValidationError("choose_b needs K > 0");
    if (std::isfinite(psi.lo()) || std::isfinite(psi.hi())) throw ValidationError("choose_b needs I = R");
    ChooseBResult r;
    r.eps = std::atan2(1.0, K);
    std::vector<double> ys = boundary_heights();
    std::vector<double> vals;
    for (double y : ys) {
        double v = psi.value(y);
        if (!std::isfinite(v)) throw ValidationError("choose_b needs a finite defining function");
        vals.push_back(v);
    }
    for (int b = 1; b <= max_b; ++b) {
        bool ok = true;
        double worst = 0;
        for (size_t i = 0; i < ys.size() && ok; ++i) {
            double y = ys[i], x = vals[i] + b;
            if (std::fabs(y) <= 1 ? x < 1 : x < -a * std::log(std::fabs(y))) ok = false;
            double g = std::fabs(std::arg(inverse_alpha_derivative(cplx(x, y))));
            worst = std::max(worst, g);
            if (!(g < r.eps / 2)) ok = false;
        }
        if (ok) {
            r.b = b;
            r.found = true;
            r.max_arg = worst;
            return r;
        }
    }
    return r;
}

WindingReport univalence_winding_check(const std::function<cplx(double)>& curve, const std::vector<cplx>& interior,
                                       int n) {
    WindingReport w;
    std::vector<cplx> p(n);
    for (int j = 0; j < n; ++j) p[j] = curve(static_cast<double>(j) / n);
    for (cplx q : interior) {
        double total = 0;
        for (int j = 0; j < n; ++j) total += std::arg((p[(j + 1) % n] - q) / (p[j] - q));
        w.winding.push_back(static_cast<int>(std::lround(total / (2 * M_PI))));
    }
    // sweep over segments sorted by their left end
    auto cross = [](cplx a, cplx b, cplx c) { return (b - a).real() * (c - a).imag() - (b - a).imag() * (c - a).real(); };
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto xmin = [&](int i) { return std::min(p[i].real(), p[(i + 1) % n].real()); };
    auto xmax = [&](int i) { return std::max(p[i].real(), p[(i + 1) % n].real()); };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return xmin(a) < xmin(b); });
    for (size_t oi = 0; oi < order.size(); ++oi) {
        int i = order[oi];
        for (size_t oj = oi + 1; oj < order.size() && xmin(order[oj]) <= xmax(i); ++oj) {
            int j = order[oj];
            int d = std::abs(i - j);
            if (d <= 1 || d == n - 1) continue;
            cplx a = p[i], b = p[(i + 1) % n], c = p[j], e = p[(j + 1) % n];
            double d1 = cross(a, b, c), d2 = cross(a, b, e), d3 = cross(c, e, a), d4 = cross(c, e, b);
            if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0)
                ++w.self_intersections;
        }
    }
    bool same = !w.winding.empty() && std::abs(w.winding[0]) == 1;
    for (int k : w.winding) same = same && k == w.winding[0];
    w.ok = same && w.self_intersections == 0;
    return w;
}

WindingReport alpha_univalence(const DefiningFunction& psi, double b, int n) {
    auto curve = [&](double s) -> cplx {
        if (s == 0) return 0; // image of the point at infinity
        double y = std::tan(M_PI * (s - 0.5));
        return alpha_map(cplx(psi.value(y) + b, y));
    };
    std::vector<cplx> interior;
    for (double y : {0.0, 1.0, -1.0, 5.0, -5.0}) interior.push_back(alpha_map(cplx(psi.value(y) + b + 1, y)));
    return univalence_winding_check(curve, interior, n);
}

// ------------------------------------------------------------ eta domain checks

double eta_derivative_defect(double a, int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-3, 3);
    std::bernoulli_distribution sign(0.5);
    EtaMap e{a};
    double worst = 0;
    for (int i = 0; i < n; ++i) {
        cplx w(std::pow(10.0, u(rng)), (sign(rng) ? 1 : -1) * std::pow(10.0, u(rng)));
        worst = std::max(worst, std::abs(e.deta(w) - 1.0));
    }
    return worst;
}

bool eta_curve_increasing(double a, double T, int n) {
    EtaMap e{a};
    double prev = -kInf;
    for (int i = 0; i <= n; ++i) {
        double v = e.im_curve(-T + 2 * T * i / n);
        if (!(v > prev)) return false;
        prev = v;
    }
    return true;
}

bool eta_envelope_check(double a, double C) {
    EtaMap e{a};
    for (int j = -48; j <= 48; ++j)
        for (double y : {std::pow(10.0, j / 8.0), -std::pow(10.0, j / 8.0)})
            if (e.psi(y) < -C * std::pow(std::log(std::fabs(y) + 3), a)) return false;
    return e.psi(0) >= -C * std::pow(std::log(3.0), a);
}

// ------------------------------------------------------------ polynomial in alpha

AlphaPipeline alpha_pipeline(const std::function<cplx(cplx)>& f, const DefiningFunction& psi, double b, int degree,
                             int n_atoms, double y_max) {
    if (degree < 0 || degree > 12) throw ValidationError("alpha polynomial degree must lie in [0, 12]");
    if (n_atoms < 1) throw ValidationError("need at least one atom");
    std::vector<cplx> zs;
    const int S = 2001;
    for (int i = 0; i < S; ++i) {
        double y = -y_max + 2 * y_max * i / (S - 1);
        zs.push_back(cplx(psi.value(y) + b, y));
    }
    Mat V(S, degree + 1);
    Vec rhs(S);
    for (int i = 0; i < S; ++i) {
        cplx al = alpha_map(zs[i]), pw = 1;
        for (int k = 0; k <= degree; ++k, pw *= al) V(i, k) = pw;
        rhs(i) = f(zs[i]);
    }
    Vec c = V.householderQr().solve(rhs);
    AlphaPipeline out;
    for (int k = 0; k <= degree; ++k) out.poly.push_back(c(k));
    out.poly_error = (V * c - rhs).cwiseAbs().maxCoeff();

    // alpha is the Laplace transform of (1 - s)^2 ds on [0, 1]; its atoms sit at j/n, so the
    // convolution powers are polynomial products on the index grid
    AtomicMeasure mu = discretize_measure([](double s) { return cplx((1 - s) * (1 - s), 0); }, 1, n_atoms);
    std::vector<cplx> base(n_atoms + 1, 0), power{1}, total(static_cast<size_t>(degree * n_atoms + 1), 0);
    for (int j = 0; j < n_atoms; ++j) base[j + 1] = mu.atoms[j].weight;
    for (int k = 0; k <= degree; ++k) {
        if (k > 0) {
            std::vector<cplx> next(power.size() + n_atoms, 0);
            for (size_t i = 0; i < power.size(); ++i)
                if (power[i] != cplx(0, 0))
                    for (int j = 1; j <= n_atoms; ++j) next[i + j] += power[i] * base[j];
            power.swap(next);
        }
        for (size_t i = 0; i < power.size(); ++i) total[i] += out.poly[k] * power[i];
    }
    out.sum.family = ExpFamily::laplace;
    for (size_t i = 0; i < total.size(); ++i)
        if (total[i] != cplx(0, 0)) out.sum.terms.push_back({total[i], static_cast<double>(i) / n_atoms});
    for (cplx z : zs) out.sum_error = std::max(out.sum_error, std::abs(f(z) - out.sum(z)));
    return out;
}

} // namespace koenigs
