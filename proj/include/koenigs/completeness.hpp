#pragma once

#include "koenigs/classifier.hpp"
#include "koenigs/features.hpp"
#include "koenigs/raster.hpp"

#include <optional>
#include <string>
#include <vector>

namespace koenigs {

/// Data behind a verdict: `kind` names the obstruction or certificate.
struct Witness {
    std::string kind;
    std::vector<double> at;
    std::string detail;
};

struct PVerdict {
    Tri complete = Tri::unknown;
    std::string route;
    std::vector<Witness> witnesses;
    std::vector<std::string> caveats;
};

struct CompletenessVerdict {
    SemigroupKind kind = SemigroupKind::zero_step;
    Tri weak_star_complete = Tri::unknown;
    std::string route;
    std::vector<Witness> witnesses;
    PVerdict p;
    double p_exponent = 2;
    FeatureReport features;
    /// A No verdict is matched by a dynamical obstruction among the features.
    Tri dynamics_consistent = Tri::unknown;
    std::vector<std::string> caveats;
};

CompletenessVerdict decide_weak_star(const DefiningFunction& psi);

struct TopologicalVerdict {
    Tri verdict = Tri::unknown;
    std::string route;
    GeometryVerdict geometry;
};
TopologicalVerdict decide_topological(const DefiningFunction& psi, std::optional<Window> window, int resolution);

/// Completeness of the frequencies in H^p, p in [1, inf).
PVerdict p_completeness_report(const DefiningFunction& psi, double p);
PVerdict p_completeness_report(const DefiningFunction& psi, double p, const CompletenessVerdict& weak_star);

/// Weak-star verdict with the H^p report attached.
CompletenessVerdict decide(const DefiningFunction& psi, double p);

} // namespace koenigs
