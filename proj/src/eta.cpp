#include "koenigs/eta.hpp"

#include "koenigs/core.hpp"

#include <cmath>

namespace koenigs {

cplx EtaMap::eta(cplx w) const { return w - std::pow(std::log(w + 3.0), a); }

cplx EtaMap::deta(cplx w) const {
    cplx l = std::log(w + 3.0);
    return 1.0 - a * std::pow(l, a - 1.0) / (w + 3.0);
}

double EtaMap::invert(double y) const {
    // |Im (log(it+3))^a| is bounded by (log|it+3| + pi/2)^a, so a bracket of that width works
    double pad = std::pow(std::log(std::fabs(y) + 3.0) + 2.0, a) + 2.0;
    double lo = y - pad, hi = y + pad;
    for (int i = 0; i < 60 && im_curve(lo) > y; ++i) lo -= pad * (1 << std::min(i, 20));
    for (int i = 0; i < 60 && im_curve(hi) < y; ++i) hi += pad * (1 << std::min(i, 20));
    if (im_curve(lo) > y || im_curve(hi) < y) throw Error("eta boundary: bisection bracket not found");
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (im_curve(mid) < y) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace koenigs
