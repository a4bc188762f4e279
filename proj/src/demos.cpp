#include "koenigs/demos.hpp"

#include "koenigs/approx.hpp"

#include <algorithm>
#include <sstream>

namespace koenigs {

namespace {

std::vector<int> doubling(int from, int to) {
    std::vector<int> v;
    for (int m = from; m < to; m *= 2) v.push_back(m);
    v.push_back(to);
    return v;
}

DefiningFunction log_example() {
    return DefiningFunction::from_json_text(
        R"J({"name":"-(1/2)log(|y|+1)","interval":["-inf","inf"],)J"
        R"J("pieces":[{"span":["-inf","inf"],"kind":"finite_analytic","expr":"-0.5*log(abs(y)+1)"}]})J");
}

std::string num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

DemoResult approx_demo(const std::string& name, int budget, int n) {
    if (budget < 1 || n < 1) throw ValidationError("budget and n must be positive");
    DemoResult d;
    d.name = name;
    if (name == "halfplane") {
        d.columns = {"budget", "error", "refined_error"};
        auto target = [](cplx z) { return 1.0 / ((z + 1.0) * (z + 1.0)); };
        for (int m : doubling(std::min(8, budget), budget)) {
            std::vector<cplx> f;
            for (int k = 1; k <= m; ++k) f.push_back(-k / 8.0);
            auto r = least_squares_fit(target, CanonicalDomain::half_plane(), f);
            d.rows.push_back({m, r.error, r.refined_error});
            if (!r.conditioning_ok) d.notes.push_back("conditioning failure at budget " + std::to_string(m));
        }
        d.notes.push_back("target 1/(z+1)^2, frequencies -k/8; sums are 16 pi i periodic, so the error has a floor");
    } else if (name == "strip") {
        d.columns = {"n", "sup_error", "uniform_bound"};
        auto density = [](double t) { return cplx(std::exp(-2 * t)); };
        auto target = [](cplx z) { return phi_beta_R(2, 5, z); };
        auto grid = strip_grid(41, 11, 5);
        for (int k : doubling(std::min(16, n), n)) {
            auto mu = discretize_measure(density, 5, k);
            d.rows.push_back({k, sup_error(mu.strip_sum(), target, grid), strip_uniform_bound(mu)});
        }
        d.notes.push_back("beta = 2, R = 5, closed strip |Im z| <= pi/2, |Re z| <= 5");
    } else if (name == "logdomain") {
        d.columns = {"atoms", "sup_error", "poly_error"};
        auto psi = log_example();
        auto b = choose_b(psi, 0.75, 0.5);
        if (!b.found) throw Error("no admissible shift found");
        auto w = alpha_univalence(psi, b.b);
        d.notes.push_back("psi = -(1/2)log(|y|+1), a = 3/4, K = 1/2, b = " + num(b.b));
        d.notes.push_back(std::string("alpha univalence check ") + (w.ok ? "passed" : "failed"));
        int degree = std::min(12, budget);
        auto f = [](cplx z) { return 1.0 / z; };
        for (int k : doubling(std::min(64, n), n)) {
            auto r = alpha_pipeline(f, psi, b.b, degree, k, 20);
            d.rows.push_back({k, r.sum_error, r.poly_error});
        }
        d.notes.push_back("target 1/z on the boundary for |Im z| <= 20, polynomial degree " + std::to_string(degree));
    } else if (name == "eta") {
        d.columns = {"budget", "error", "refined_error"};
        auto dom = CanonicalDomain::eta(1);
        double z0 = dom.psi(0) - 1;
        auto target = [z0](cplx z) { return 1.0 / ((z - z0) * (z - z0)); };
        for (int m : doubling(std::min(8, budget), budget)) {
            std::vector<cplx> f;
            for (int k = 0; k < m; ++k) f.push_back(-0.5 * k / m);
            auto r = least_squares_fit(target, dom, f);
            d.rows.push_back({m, r.error, r.refined_error});
        }
        d.notes.push_back("exponent-1 eta domain, target 1/(z + " + num(-z0) +
                          ")^2, frequencies in (-1/2, 0]; the exponentials are not complete in H^2 here");
    } else {
        throw ValidationError("unknown demo '" + name + "' (halfplane, strip, logdomain, eta)");
    }
    return d;
}

} // namespace koenigs
