#pragma once

#include "koenigs/core.hpp"

#include <optional>
#include <vector>

namespace koenigs {

/// Cantor set on [lo, hi]: points whose radix-`radix` expansion of (y-lo)/(hi-lo)
/// uses only `digits`. Membership is decided on the exact rational value of the
/// double argument.
class CantorSet {
public:
    CantorSet() = default;
    CantorSet(double lo, double hi, int radix, std::vector<int> digits, int depth = 30);

    static CantorSet ternary(double lo = 0, double hi = 1) { return CantorSet(lo, hi, 3, {0, 2}); }

    struct Location {
        Tri member = Tri::no;
        bool accumulates_left = false;  ///< points of C arbitrarily close on the left
        bool accumulates_right = false;
    };

    Location locate(double y) const;
    bool contains(double y) const { return locate(y).member != Tri::no; }

    /// True iff [a, b] meets the set.
    bool intersects(double a, double b) const;

    /// Maximal open gap of the hull containing y, if y is in the hull and not in the set.
    std::optional<std::pair<double, double>> gap_containing(double y) const;

    /// Gaps of the first `levels` construction stages.
    std::vector<std::pair<double, double>> gaps(int levels) const;

    /// A member strictly inside (lo, hi) whose double value is exactly in the set.
    double interior_member() const;

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    int radix() const { return radix_; }
    const std::vector<int>& digits() const { return digits_; }
    int depth() const { return depth_; }

private:
    double lo_ = 0, hi_ = 1;
    int radix_ = 3;
    std::vector<int> digits_{0, 2};
    int depth_ = 30;
    std::vector<char> kept_;

    bool kept(int d) const { return d >= 0 && d < radix_ && kept_[static_cast<size_t>(d)]; }
};

} // namespace koenigs
