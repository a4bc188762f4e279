#pragma once

#include "koenigs/cantor.hpp"
#include "koenigs/core.hpp"
#include "koenigs/eta.hpp"
#include "koenigs/expr.hpp"

#include <nlohmann/json_fwd.hpp>

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace koenigs {

/// liminf/limsup of psi when approaching a point from one side.
struct SideLimit {
    bool present = false; ///< false when that side leaves the interval
    double liminf = 0, limsup = 0;
    Quality quality = Quality::exact;
};

struct OneSidedLimits {
    SideLimit left, right;

    Quality quality() const;
    /// min of the present liminfs; +inf when neither side is present.
    double liminf() const;
    double limsup() const;
};

/// Tail envelope: affine m*y + c, or C - k*(log(|y|+3))^a.
struct Envelope {
    enum Kind { affine, log_power } kind = affine;
    double m = 0, c = 0;
    double C = 0, k = 0, a = 1;

    double operator()(double y) const;
};

/// Declared bounds that hold on the whole span of an outermost piece.
struct Asymptotics {
    std::optional<Envelope> lower, upper;
};

enum class PieceKind { finite_analytic, oscillatory, minus_infinity, point_spike, cantor_comb, eta_boundary };

const char* to_string(PieceKind k);

struct DeclaredLimit {
    std::optional<double> liminf, limsup;
    bool declared() const { return liminf.has_value(); }
};

struct Piece {
    PieceKind kind = PieceKind::finite_analytic;
    double a = 0, b = 0; // span

    // finite_analytic, oscillatory
    Expr expr;
    DeclaredLimit at_lo, at_hi; // toward a from the right, toward b from the left

    // point_spike
    double c0 = 0, spike_value = 0, background = 0;

    // cantor_comb; with an oscillating profile the gaps carry
    // center + amplitude*sin(1/((g1-y)(y-g0))) and points outside the hull carry center
    CantorSet carrier;
    double on_value = 1, off_bound = 0;
    bool oscillate = false;
    double center = 0, amplitude = 0;

    // eta_boundary
    EtaMap eta;

    Asymptotics asymptotics;

    bool interior(double y) const { return a < y && y < b; }
    /// Value at a point of the open span.
    double value(double y) const;
    /// Limits toward y0 in [a, b] from `side`, the side lying inside the span.
    SideLimit side_limit(double y0, Side side) const;
    /// Value of a comb on its gaps and outside its hull.
    double comb_off_value(double y) const;
};

struct PointValue {
    double y = 0, value = 0;
    Quality quality = Quality::exact;
    bool declared = false;
};

/// Closed subset of the closure of I, as disjoint sorted closed intervals (points allowed).
struct ClosedSet {
    std::vector<std::pair<double, double>> parts;
    Quality quality = Quality::exact;
    bool empty() const { return parts.empty(); }
};

/// psi : I -> [-inf, inf) given by typed pieces; defines the domain {Re z > psi(Im z), Im z in I}.
class DefiningFunction {
public:
    static DefiningFunction from_json(const nlohmann::json& j);
    static DefiningFunction from_json_text(const std::string& text);
    static DefiningFunction from_file(const std::string& path);

    /// Builds and validates the structural invariants (coverage, spans, declarations).
    DefiningFunction(double lo, double hi, std::vector<Piece> pieces, std::vector<PointValue> points = {});

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    bool bounded() const { return std::isfinite(lo_) && std::isfinite(hi_); }
    const std::vector<Piece>& pieces() const { return pieces_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    bool in_interval(double y) const { return lo_ < y && y < hi_; }
    bool in_closure(double y) const { return lo_ <= y && y <= hi_ && std::isfinite(y); }

    /// psi(y) for y in I.
    double value(double y) const;
    PointValue point_value(double y) const;

    OneSidedLimits limits(double y0) const;

    /// Finite heights where the function is not given by a single piece formula:
    /// interior piece boundaries, point overrides and spike locations.
    std::vector<double> structure_points() const;
    const std::vector<PointValue>& points() const { return points_; }

    /// Lower and upper semicontinuous regularizations, represented on the same pieces.
    DefiningFunction lsc_regularized() const;
    DefiningFunction usc_regularized() const;

    /// min(psi(y), liminf from each side); defined on the closure of I.
    double lsc_value(double y) const;

    /// Heights in the closure of I where the lower regularization is -inf.
    ClosedSet minus_infinity_lsc_set() const;

    /// Maximal open intervals where psi is -inf.
    std::vector<std::pair<double, double>> minus_infinity_components() const;

    /// Index of the piece whose open span contains y, or -1.
    int piece_at(double y) const;

private:
    double lo_ = 0, hi_ = 0;
    std::vector<Piece> pieces_;
    std::vector<PointValue> points_; // sorted; every interior piece boundary has an entry
    std::string name_;

    const PointValue* find_point(double y) const;
    SideLimit side_limit(double y0, Side side) const;
    DefiningFunction transformed(bool lower) const;
};

/// Dyadic estimate of the one-sided limit of f at y0: samples y0 -/+ 2^-k delta, k <= 40.
SideLimit estimate_limit(const std::function<double(double)>& f, double y0, Side side, double delta);

bool contains(const DefiningFunction& psi, std::complex<double> z);
OneSidedLimits one_sided_limits(const DefiningFunction& psi, double y0);

struct UscReport {
    Tri ok = Tri::yes;
    std::vector<std::string> messages;
};
UscReport usc_check(const DefiningFunction& psi);

std::function<double(double)> lsc_regularization(const DefiningFunction& psi);
std::function<double(double)> usc_of_lsc(const DefiningFunction& psi);

struct RegularityCheck {
    Tri equal = Tri::yes;
    std::vector<double> witnesses; ///< heights with psi > usc(lsc(psi))
    std::vector<std::string> notes;
};
RegularityCheck equals_regularized(const DefiningFunction& psi);

/// Parses a number or one of the strings "inf", "+inf", "-inf".
double parse_extended(const nlohmann::json& v, const std::string& where);
nlohmann::json extended_to_json(double v);

} // namespace koenigs
