#pragma once

#include "koenigs/domain.hpp"

#include <string>
#include <vector>

namespace koenigs {

using Interval = std::pair<double, double>;

/// A detected height; `status` is unknown when it rests on an inconclusive estimate.
struct Height {
    double y = 0;
    Tri status = Tri::yes;
};

struct UnboundedDiscontinuity {
    double y = 0;
    bool left = false, right = false; ///< sides with liminf = -inf < limsup < +inf
    Tri status = Tri::yes;
};

struct Spike {
    double c0 = 0, q = 0;
    bool declared = true; ///< a point_spike piece, as opposed to a point value above its limits
};

struct CombWitness {
    Interval J;
    double q = 0;
    CantorSet carrier;
};

enum class DwDiscontinuity { none, simple, double_, unknown };
const char* to_string(DwDiscontinuity d);

struct FeatureReport {
    std::vector<Interval> minus_inf_components;
    std::vector<Interval> I_R;        ///< bounded components
    std::vector<Interval> I_infinity; ///< unbounded components
    std::vector<Height> I_N;
    std::vector<UnboundedDiscontinuity> D_U;
    std::vector<Spike> spikes;
    std::vector<CombWitness> cantor_combs;
    DwDiscontinuity dw_discontinuity = DwDiscontinuity::none;
    Tri exceptional_arc_to_unbounded = Tri::no;
    std::vector<std::string> caveats;
};

std::vector<Interval> minus_infinity_components(const DefiningFunction& psi);
std::vector<Height> detect_super_repelling(const DefiningFunction& psi);
std::vector<UnboundedDiscontinuity> detect_unbounded_discontinuities(const DefiningFunction& psi);
std::vector<Spike> detect_contact_spikes(const DefiningFunction& psi);
std::vector<CombWitness> detect_cantor_combs(const DefiningFunction& psi);
DwDiscontinuity dw_discontinuity(const DefiningFunction& psi);
Tri exceptional_arc_to_unbounded(const DefiningFunction& psi);

FeatureReport analyze(const DefiningFunction& psi);

} // namespace koenigs
