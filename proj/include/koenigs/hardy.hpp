#pragma once

#include "koenigs/classifier.hpp"
#include "koenigs/eta.hpp"

#include <map>
#include <string>
#include <vector>

namespace koenigs {

/// Lambda with sup of Re(lambda z) over Omega finite: {0}, the rays +-i allowed by the
/// ends of I, and -s(1 + i m) for s > 0 and every slope m of an affine minorant.
struct InftyRegion {
    bool plus_i = false;  ///< I bounded below
    bool minus_i = false; ///< I bounded above
    SlopeRange slopes;
    bool lower_bound_only = false; ///< slope set only known from inside

    Tri contains(cplx lambda) const;
    std::string describe() const;
};

InftyRegion lambda_infty_region(const DefiningFunction& psi);

enum class Membership { member, non_member, inconclusive };
const char* to_string(Membership m);

/// Simply connected model domains with explicit maps from the unit disc.
struct CanonicalDomain {
    enum Kind { half_plane_right, upper_half_plane, strip_pi, log_domain, eta_domain } kind = half_plane_right;
    double a = 1; ///< exponent of the eta map
    double b = 0; ///< horizontal translation of the log domain

    static CanonicalDomain half_plane() { return {half_plane_right, 1, 0}; }
    static CanonicalDomain upper() { return {upper_half_plane, 1, 0}; }
    static CanonicalDomain strip() { return {strip_pi, 1, 0}; }
    static CanonicalDomain eta(double a) { return {eta_domain, a, 0}; }
    /// Translate by b of the eta domain with exponent a in (0, 1).
    static CanonicalDomain log(double a, double b);
    /// "half_plane", "upper_half_plane", "strip", "eta:A", "log:A,B".
    static CanonicalDomain parse(const std::string& name);
    std::string name() const;

    /// Image of the disc point (1-eps) e^{i(s + sigma t)} for a singular angle s;
    /// the offset form keeps points next to s accurate.
    cplx map(double eps, double s, int sigma, double t) const;
    cplx map(cplx w) const;
    /// Boundary angles where the map tends to infinity.
    std::vector<double> singular_angles() const;
    /// The boundary image is a simple curve on a grid of `samples` angles.
    bool winding_check(int samples = 1 << 14) const;

    /// Interval and defining function of the domain.
    double lo() const;
    double hi() const;
    double psi(double y) const;
};

struct MembershipResult {
    Membership status = Membership::inconclusive;
    double log_mean = 0; ///< log of the last p-th power circle mean (normalized)
    std::vector<double> radial_log_means, boundary_log_integrals;
    std::string note;
};

/// Whether e^{lambda z} lies in H^p(dom), from circle means at r = 1 - 2^-k and
/// boundary integrals truncated at angle pi 2^{-2^k} around each singular angle.
MembershipResult hardy_membership(cplx lambda, const CanonicalDomain& dom, double p);

struct Sample {
    cplx lambda;
    Membership status;
};

struct FrequencyRegion {
    InftyRegion exact_infty;
    std::map<double, std::vector<Sample>> p_samples;
    /// What is known about Lambda_p without a transplant, e.g. the band shape for strips.
    std::string p_template;
};

/// Exact Lambda_infinity of psi; sampled H^p entries are left empty for general psi.
FrequencyRegion lambda_infty(const DefiningFunction& psi);

/// Exact Lambda_infinity of a canonical domain plus membership samples for each p.
FrequencyRegion canonical_region(const CanonicalDomain& dom, const std::vector<double>& ps,
                                 const std::vector<cplx>& grid);

struct ConsistencyReport {
    int checked = 0, skipped = 0;
    std::vector<cplx> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Lambda_q = (p/q) Lambda_p on the grid.
ConsistencyReport scaling_law_check(const CanonicalDomain& dom, double p, double q, const std::vector<cplx>& grid);
/// Midpoints of definite members are members.
ConsistencyReport convexity_check(const CanonicalDomain& dom, double p, const std::vector<cplx>& grid);
/// Member for q >= p implies member for p.
ConsistencyReport p_monotonicity_check(const CanonicalDomain& dom, double p, double q, const std::vector<cplx>& grid);
/// inner contained in outer implies Lambda_p(outer) within Lambda_p(inner).
ConsistencyReport domain_monotonicity_check(const CanonicalDomain& inner, const CanonicalDomain& outer, double p,
                                            const std::vector<cplx>& grid);
/// Containment of canonical domains, compared through their defining functions.
bool canonical_contains(const CanonicalDomain& outer, const CanonicalDomain& inner);

struct BandEstimate {
    double c1_est = 0, c2_est = 0;
    std::pair<double, double> c1_bracket, c2_bracket; ///< p*lambda brackets of the transitions
    bool imaginary_axis_ok = true;
};

/// Real-axis transitions -c1/p < Re lambda < c2/p of H^p membership on the strip.
BandEstimate betsakos_band(const CanonicalDomain& dom, double p);

} // namespace koenigs
