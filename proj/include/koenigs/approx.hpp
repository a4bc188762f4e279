#pragma once

#include "koenigs/domain.hpp"
#include "koenigs/hardy.hpp"

#include <functional>
#include <vector>

namespace koenigs {

/// Which exponential each term carries.
enum class ExpFamily {
    exp_lambda_z, ///< e^{lambda z}
    exp_itz,      ///< e^{i t z}, t real
    laplace,      ///< e^{-s z}, s >= 0
};

struct ExpTerm {
    cplx coefficient;
    cplx frequency;
};

struct ExpSum {
    std::vector<ExpTerm> terms;
    ExpFamily family = ExpFamily::exp_lambda_z;

    cplx operator()(cplx z) const;
};

/// 1/(-iz + beta), the Laplace side of e^{-t beta} dt.
cplx phi_beta(cplx beta, cplx z);
/// Integral of e^{itz} e^{-t beta} over [0, R].
cplx phi_beta_R(cplx beta, double R, cplx z);

struct Atom {
    double t;
    cplx weight;
};

struct AtomicMeasure {
    std::vector<Atom> atoms;
    double R = 0;

    double total_variation() const;
    /// sum of w e^{-t z}
    cplx laplace(cplx z) const;
    /// sum of w e^{i t z}
    ExpSum strip_sum() const;
    ExpSum laplace_sum() const;
};

/// Atoms at jR/n carrying the density integral over the j-th cell.
AtomicMeasure discretize_measure(const std::function<cplx(double)>& density, double R, int n);
/// Exact convolution; atoms at coinciding locations are merged.
AtomicMeasure convolve(const AtomicMeasure& a, const AtomicMeasure& b);

double sup_error(const ExpSum& sum, const std::function<cplx(cplx)>& target, const std::vector<cplx>& grid);
/// Points of the closed strip |Im z| <= pi/2, including both edges.
std::vector<cplx> strip_grid(int nx, int ny, double x_extent);
/// sum |w_j| e^{pi t_j / 2}, a bound for the strip sum on the closed strip.
double strip_uniform_bound(const AtomicMeasure& mu);

struct FitOptions {
    double ridge = 1e-12;
    int log2_nodes = 14;
    int log2_gap = 12; ///< radius 1 - 2^-log2_gap
};

struct FitResult {
    ExpSum sum;
    double error = 0;         ///< transplanted boundary L2 error at the fit radius
    double refined_error = 0; ///< same coefficients, radius and node count refined once
    double target_norm = 0;
    double condition = 0; ///< ratio of extreme diagonal entries of the QR factor
    bool conditioning_ok = true;
};

/// Least squares over the coefficients of e^{lambda_k z} in the transplanted H^2 norm of dom.
FitResult least_squares_fit(const std::function<cplx(cplx)>& target, const CanonicalDomain& dom,
                            const std::vector<cplx>& frequencies, const FitOptions& opt = {});

/// Integral of (1 + lambda)^2 e^{lambda z} over [-1, 0].
cplx alpha_map(cplx z);
/// The same integral by Gauss-Kronrod quadrature, for cross-checks.
cplx alpha_quadrature(cplx z);
/// Derivative of 1/alpha.
cplx inverse_alpha_derivative(cplx z);

struct ChooseBResult {
    double b = 0;
    bool found = false;
    double max_arg = 0; ///< largest |arg (1/alpha)'| on the shifted boundary samples
    double eps = 0;     ///< arg(K + i)
};

/// Least integer b with psi + b >= -a log|y| for |y| >= 1, psi + b >= 1 for |y| <= 1 and
/// |arg (1/alpha)'| < eps/2 on boundary samples, where eps = arg(K + i).
ChooseBResult choose_b(const DefiningFunction& psi, double a, double K, int max_b = 4096);

struct WindingReport {
    std::vector<int> winding;
    int self_intersections = 0;
    bool ok = false;
};

/// Winding numbers of the closed polyline curve(j/n), j < n, about each interior point
/// (all must be +1 or all -1), and a sweep for crossings of non-adjacent segments.
WindingReport univalence_winding_check(const std::function<cplx(double)>& curve, const std::vector<cplx>& interior,
                                       int n);

/// Winding check for alpha(z + b) on the boundary of the domain of psi, compactified through
/// y = tan(pi (s - 1/2)).
WindingReport alpha_univalence(const DefiningFunction& psi, double b, int n = 1 << 14);

/// max |eta' - 1| over n seeded random points of the right half-plane.
double eta_derivative_defect(double a, int n, unsigned seed);
/// Im eta(it) strictly increasing on a grid of [-T, T].
bool eta_curve_increasing(double a, double T, int n);
/// psi_eta(y) >= -C (log(|y| + 3))^a on a log-spaced grid up to 1e6.
bool eta_envelope_check(double a, double C);

/// Polynomial in alpha fitted to f on boundary samples of the domain of psi shifted by b, expanded
/// into the Laplace transform of a combination of convolution powers of a discretized measure.
struct AlphaPipeline {
    std::vector<cplx> poly;   ///< coefficients of alpha^k
    double poly_error = 0;    ///< max |f - P(alpha)| on the samples
    ExpSum sum;               ///< laplace family
    double sum_error = 0;     ///< max |f - sum| on the samples
};
AlphaPipeline alpha_pipeline(const std::function<cplx(cplx)>& f, const DefiningFunction& psi, double b, int degree,
                             int n_atoms, double y_max);

} // namespace koenigs
