#include "koenigs/cantor.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <map>

namespace koenigs {

using boost::multiprecision::cpp_int;

CantorSet::CantorSet(double lo, double hi, int radix, std::vector<int> digits, int depth)
    : lo_(lo), hi_(hi), radix_(radix), digits_(std::move(digits)), depth_(depth) {
    if (!(lo_ < hi_) || !std::isfinite(lo_) || !std::isfinite(hi_))
        throw ValidationError("cantor carrier: base interval must be finite with lo < hi");
    if (radix_ < 2) throw ValidationError("cantor carrier: radix must be >= 2");
    std::sort(digits_.begin(), digits_.end());
    digits_.erase(std::unique(digits_.begin(), digits_.end()), digits_.end());
    if (digits_.size() < 2 || static_cast<int>(digits_.size()) >= radix_)
        throw ValidationError("cantor carrier: need at least two kept digits and at least one removed digit");
    kept_.assign(static_cast<size_t>(radix_), 0);
    for (int d : digits_) {
        if (d < 0 || d >= radix_) throw ValidationError("cantor carrier: digit out of range");
        kept_[static_cast<size_t>(d)] = 1;
    }
}

namespace {

// Exact integer pair (num, den) with num/den == (y - lo) / (hi - lo).
void exact_ratio(double y, double lo, double hi, cpp_int& num, cpp_int& den) {
    auto split = [](double v, cpp_int& m, int& e) {
        int ex = 0;
        double f = std::frexp(v, &ex);
        long long mi = static_cast<long long>(std::ldexp(f, 53));
        m = mi;
        e = ex - 53;
    };
    cpp_int my, ml, mh;
    int ey = 0, el = 0, eh = 0;
    split(y, my, ey);
    split(lo, ml, el);
    split(hi, mh, eh);
    int e = std::min({ey, el, eh});
    auto scaled = [e](const cpp_int& m, int ex) { return cpp_int(m << (ex - e)); };
    num = scaled(my, ey) - scaled(ml, el);
    den = scaled(mh, eh) - scaled(ml, el);
}

} // namespace

CantorSet::Location CantorSet::locate(double y) const {
    Location out;
    if (!(y >= lo_ && y <= hi_)) return out;
    cpp_int r, den;
    exact_ratio(y, lo_, hi_, r, den);
    const int kmin = digits_.front(), kmax = digits_.back();
    std::map<cpp_int, int> seen;
    std::vector<int> path;
    const int limit = 4096;
    for (int step = 0; step < limit; ++step) {
        if (r == 0 || r == den) {
            // Terminal: x = 0 has expansion 0^inf, x = 1 has (B-1)^inf.
            bool ok = r == 0 ? kept(0) : kept(radix_ - 1);
            if (!ok) return out;
            out.member = Tri::yes;
            // only reachable at the hull ends: 0^inf or (B-1)^inf
            out.accumulates_left = r != 0;
            out.accumulates_right = r == 0;
            return out;
        }
        auto [it, fresh] = seen.emplace(r, step);
        if (!fresh) {
            int start = it->second;
            bool all_min = true, all_max = true;
            for (size_t i = static_cast<size_t>(start); i < path.size(); ++i) {
                all_min = all_min && path[i] == kmin;
                all_max = all_max && path[i] == kmax;
            }
            out.member = Tri::yes;
            out.accumulates_left = !all_min;
            out.accumulates_right = !all_max;
            return out;
        }
        cpp_int t = r * radix_;
        cpp_int q = t / den;
        cpp_int rem = t - q * den;
        int d = static_cast<int>(q);
        if (rem == 0) {
            // x sits on a digit boundary d/B: expansions (d-1)(B-1)^inf and d 0^inf.
            bool a = d >= 1 && kept(d - 1) && kept(radix_ - 1);
            bool b = d <= radix_ - 1 && kept(d) && kept(0);
            if (!a && !b) return out;
            out.member = Tri::yes;
            out.accumulates_left = a;   // (B-1)^inf is not eventually kmin
            out.accumulates_right = b;  // 0^inf is not eventually kmax
            return out;
        }
        if (!kept(d)) return out;
        path.push_back(d);
        r = rem;
    }
    out.member = Tri::unknown;
    out.accumulates_left = out.accumulates_right = true;
    return out;
}

bool CantorSet::intersects(double a, double b) const {
    if (b < lo_ || a > hi_) return false;
    struct Frame {
        double l, w;
        int level;
    };
    std::vector<Frame> stack{{lo_, hi_ - lo_, 0}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        double r = f.l + f.w;
        if (b < f.l || a > r) continue;
        if (a <= f.l && r <= b) return true;
        if (f.level > 60 || f.w <= 0) return true;
        double sub = f.w / radix_;
        for (int d : digits_) stack.push_back({f.l + d * sub, sub, f.level + 1});
    }
    return false;
}

std::optional<std::pair<double, double>> CantorSet::gap_containing(double y) const {
    if (!(y > lo_ && y < hi_)) return std::nullopt;
    double l = lo_, w = hi_ - lo_;
    for (int level = 0; level < 64; ++level) {
        double sub = w / radix_;
        int d = static_cast<int>(std::floor((y - l) / sub));
        d = std::clamp(d, 0, radix_ - 1);
        if (!kept(d)) {
            int d1 = d, d2 = d;
            while (d1 - 1 >= 0 && !kept(d1 - 1)) --d1;
            while (d2 + 1 < radix_ && !kept(d2 + 1)) ++d2;
            double g0 = l + d1 * sub, g1 = l + (d2 + 1) * sub;
            if (y > g0 && y < g1) return std::make_pair(g0, g1);
            return std::nullopt;
        }
        l += d * sub;
        w = sub;
    }
    return std::nullopt;
}

std::vector<std::pair<double, double>> CantorSet::gaps(int levels) const {
    std::vector<std::pair<double, double>> out;
    std::vector<std::pair<double, double>> cur{{lo_, hi_ - lo_}};
    for (int level = 0; level < levels; ++level) {
        std::vector<std::pair<double, double>> next;
        for (auto [l, w] : cur) {
            double sub = w / radix_;
            for (int d = 0; d < radix_;) {
                if (kept(d)) {
                    next.emplace_back(l + d * sub, sub);
                    ++d;
                    continue;
                }
                int d2 = d;
                while (d2 + 1 < radix_ && !kept(d2 + 1)) ++d2;
                out.emplace_back(l + d * sub, l + (d2 + 1) * sub);
                d = d2 + 1;
            }
        }
        cur.swap(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

double CantorSet::interior_member() const {
    for (int k = 1; k <= 24; ++k) {
        for (long long m = 1; m < (1LL << k); m += 2) {
            double y = lo_ + (hi_ - lo_) * std::ldexp(static_cast<double>(m), -k);
            if (y > lo_ && y < hi_ && locate(y).member == Tri::yes) return y;
        }
    }
    throw Error("cantor carrier: no dyadic interior member found");
}

} // namespace koenigs
