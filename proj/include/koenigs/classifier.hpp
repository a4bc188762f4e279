#pragma once

#include "koenigs/domain.hpp"

#include <string>

namespace koenigs {

enum class SemigroupKind { hyperbolic, positive_step, zero_step };
const char* to_string(SemigroupKind k);

/// Canonical domain containing Omega.
struct Container {
    enum Kind { strip, horizontal_half_plane, tilted_half_plane, none } kind = none;
    double a = 0, b = 0; ///< strip a < Im z < b; half-plane boundary Im z = a
    bool upper = true;   ///< half-plane Im z > a when true, Im z < a otherwise
    double m = 0, c = 0; ///< tilted half-plane Re z > m Im z + c
};
const char* to_string(Container::Kind k);

/// psi(y) >= m*y + c on the whole line, when `exists` is yes.
struct AffineMinorant {
    Tri exists = Tri::unknown;
    double m = 0, c = 0;
    Quality quality = Quality::exact;
    std::string reason;
};

struct SemigroupClass {
    SemigroupKind kind = SemigroupKind::zero_step;
    double strip_width = 0;
    Container container;
    AffineMinorant minorant; ///< evaluated for the zero-step kind only
};

SemigroupClass classify(const DefiningFunction& psi);

/// Slopes m for which psi(y) - m*y is bounded below on I, as an interval.
struct SlopeRange {
    bool empty = false;
    double lo = -kInf, hi = kInf;
    bool lo_open = false, hi_open = false;
    bool exact = true; ///< false when only an inner approximation is certain

    bool contains(double m) const;
};
SlopeRange minorant_slopes(const DefiningFunction& psi);
AffineMinorant affine_minorant(const DefiningFunction& psi);

} // namespace koenigs
