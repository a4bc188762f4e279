#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace koenigs {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Three-valued answer used wherever a numeric certificate can fail.
enum class Tri { no, yes, unknown };

inline const char* to_string(Tri t) {
    switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "unknown";
    }
}

inline Tri tri_and(Tri a, Tri b) {
    if (a == Tri::no || b == Tri::no) return Tri::no;
    if (a == Tri::unknown || b == Tri::unknown) return Tri::unknown;
    return Tri::yes;
}

inline Tri tri_not(Tri a) {
    if (a == Tri::unknown) return a;
    return a == Tri::yes ? Tri::no : Tri::yes;
}

inline Tri tri_of(bool b) { return b ? Tri::yes : Tri::no; }

enum class Side { left, right };

/// How a limit value was obtained.
enum class Quality { exact, estimated, inconclusive };

inline Quality worst(Quality a, Quality b) { return a > b ? a : b; }

inline const char* to_string(Quality q) {
    switch (q) {
    case Quality::exact: return "exact";
    case Quality::estimated: return "estimated";
    default: return "inconclusive";
    }
}

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an expression evaluates to NaN on a span where it must be finite.
struct EvaluatorError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

/// Extended-real text form used at the JSON boundary.
inline std::string ext_to_string(double v) {
    if (v == kInf) return "inf";
    if (v == -kInf) return "-inf";
    return std::to_string(v);
}

} // namespace koenigs
