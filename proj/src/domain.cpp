#include "koenigs/domain.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace koenigs {

using nlohmann::json;

namespace {

constexpr double kTol = 1e-12;

bool close(double a, double b) {
    if (a == b) return true;
    if (!std::isfinite(a) || !std::isfinite(b)) return false;
    return std::fabs(a - b) <= kTol * (1 + std::max(std::fabs(a), std::fabs(b)));
}

SideLimit exact(double lo, double hi) { return {true, lo, hi, Quality::exact}; }

} // namespace

const char* to_string(PieceKind k) {
    switch (k) {
    case PieceKind::finite_analytic: return "finite_analytic";
    case PieceKind::oscillatory: return "oscillatory";
    case PieceKind::minus_infinity: return "minus_infinity";
    case PieceKind::point_spike: return "point_spike";
    case PieceKind::cantor_comb: return "cantor_comb";
    default: return "eta_boundary";
    }
}

Quality OneSidedLimits::quality() const {
    Quality q = Quality::exact;
    if (left.present) q = worst(q, left.quality);
    if (right.present) q = worst(q, right.quality);
    return q;
}

double OneSidedLimits::liminf() const {
    double v = kInf;
    if (left.present) v = std::min(v, left.liminf);
    if (right.present) v = std::min(v, right.liminf);
    return v;
}

double OneSidedLimits::limsup() const {
    double v = -kInf;
    if (left.present) v = std::max(v, left.limsup);
    if (right.present) v = std::max(v, right.limsup);
    return v;
}

double Envelope::operator()(double y) const {
    if (kind == affine) return m * y + c;
    return C - k * std::pow(std::log(std::fabs(y) + 3.0), a);
}

// ---------------------------------------------------------------- estimator

SideLimit estimate_limit(const std::function<double(double)>& f, double y0, Side side, double delta) {
    constexpr int kDepth = 40, kWindow = 8;
    std::vector<double> v;
    v.reserve(kDepth + 1);
    double sgn = side == Side::left ? -1.0 : 1.0;
    for (int k = 0; k <= kDepth; ++k) {
        double t = y0 + sgn * std::ldexp(delta, -k);
        if (t == y0) break;
        double x = f(t);
        if (std::isnan(x)) {
            std::ostringstream os;
            os << "evaluation is NaN at y=" << t;
            throw EvaluatorError(os.str());
        }
        v.push_back(x);
    }
    SideLimit out{true, -kInf, kInf, Quality::inconclusive};
    if (v.size() < static_cast<size_t>(kWindow)) return out;
    auto tail = std::vector<double>(v.end() - kWindow, v.end());
    auto [mn, mx] = std::minmax_element(tail.begin(), tail.end());
    if (std::isfinite(*mn) && std::isfinite(*mx)) {
        double scale = std::max(1.0, std::fabs(tail.back()));
        if (*mx - *mn < 1e-9 * scale) return {true, tail.back(), tail.back(), Quality::estimated};
    }
    if (*mn == *mx && std::isinf(*mn)) return {true, *mn, *mn, Quality::estimated};
    // monotone run whose steps do not shrink: divergence
    bool diverges = true;
    double dir = tail[1] - tail[0];
    for (int i = 0; i + 1 < kWindow && diverges; ++i) {
        double d = tail[i + 1] - tail[i];
        if (!(d * dir > 0)) diverges = false;
        if (i > 0 && diverges) {
            double prev = tail[i] - tail[i - 1];
            if (d / prev < 0.995) diverges = false;
        }
    }
    if (diverges) {
        double lim = dir > 0 ? kInf : -kInf;
        return {true, lim, lim, Quality::estimated};
    }
    out.liminf = *mn;
    out.limsup = *mx;
    return out;
}

// ------------------------------------------------------------------ pieces

double Piece::comb_off_value(double y) const {
    if (!oscillate) return off_bound;
    if (y < carrier.lo() || y > carrier.hi()) return center;
    auto g = carrier.gap_containing(y);
    if (!g) return center; // not reached for y off the carrier
    double s = (g->second - y) * (y - g->first);
    return center + amplitude * std::sin(1.0 / s);
}

double Piece::value(double y) const {
    switch (kind) {
    case PieceKind::finite_analytic:
    case PieceKind::oscillatory: {
        double v = expr.eval(y);
        if (std::isnan(v)) {
            std::ostringstream os;
            os << "expression '" << expr.text() << "' is NaN at y=" << y;
            throw EvaluatorError(os.str());
        }
        return v;
    }
    case PieceKind::minus_infinity: return -kInf;
    case PieceKind::point_spike: return y == c0 ? spike_value : background;
    case PieceKind::cantor_comb: {
        if (y >= carrier.lo() && y <= carrier.hi() && carrier.locate(y).member != Tri::no) return on_value;
        return comb_off_value(y);
    }
    case PieceKind::eta_boundary: return eta.psi(y);
    }
    return 0;
}

SideLimit Piece::side_limit(double y0, Side side) const {
    switch (kind) {
    case PieceKind::finite_analytic:
    case PieceKind::oscillatory: {
        if (interior(y0) || !expr.depends_on_y()) {
            double v = expr.eval(interior(y0) ? y0 : 0.5 * (a + b));
            return exact(v, v);
        }
        const DeclaredLimit& d = (y0 == b) ? at_hi : at_lo;
        if (d.declared()) return exact(*d.liminf, *d.limsup);
        double delta = std::isfinite(b - a) ? std::min(1.0, (b - a) / 2) : 1.0;
        return estimate_limit([this](double t) { return value(t); }, y0, side, delta);
    }
    case PieceKind::minus_infinity: return exact(-kInf, -kInf);
    case PieceKind::point_spike: return exact(background, background);
    case PieceKind::eta_boundary: {
        double v = eta.psi(y0);
        return exact(v, v);
    }
    case PieceKind::cantor_comb: {
        double u = carrier.lo(), v = carrier.hi();
        bool in_hull = side == Side::left ? (u < y0 && y0 <= v) : (u <= y0 && y0 < v);
        double outside = oscillate ? center : off_bound;
        if (!in_hull) return exact(outside, outside);
        auto loc = carrier.locate(y0);
        Quality q = loc.member == Tri::unknown ? Quality::estimated : Quality::exact;
        bool acc = loc.member == Tri::unknown ||
                   (side == Side::left ? loc.accumulates_left : loc.accumulates_right);
        double glo = oscillate ? center - amplitude : off_bound;
        double ghi = oscillate ? center + amplitude : off_bound;
        if (loc.member != Tri::no && acc) return {true, std::min(glo, on_value), std::max(ghi, on_value), q};
        if (loc.member != Tri::no) return {true, glo, ghi, q}; // an adjacent gap
        double g = comb_off_value(y0);
        return exact(g, g);
    }
    }
    return {};
}

// -------------------------------------------------------------- JSON input

double parse_extended(const json& v, const std::string& where) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        auto s = v.get<std::string>();
        if (s == "inf" || s == "+inf") return kInf;
        if (s == "-inf") return -kInf;
    }
    throw ValidationError(where + ": expected a number or \"inf\"/\"-inf\"");
}

json extended_to_json(double v) {
    if (v == kInf) return "inf";
    if (v == -kInf) return "-inf";
    return v;
}

namespace {

double finite_number(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) throw ValidationError(where + "/" + key + ": missing");
    double v = parse_extended(obj.at(key), where + "/" + key);
    if (!std::isfinite(v)) throw ValidationError(where + "/" + key + ": must be finite");
    return v;
}

DeclaredLimit parse_declared(const json& j, const std::string& where) {
    DeclaredLimit d;
    if (j.contains("limit")) {
        double v = parse_extended(j.at("limit"), where + "/limit");
        d.liminf = d.limsup = v;
        return d;
    }
    if (!j.contains("liminf") || !j.contains("limsup"))
        throw ValidationError(where + ": declare both liminf and limsup, or a single limit");
    d.liminf = parse_extended(j.at("liminf"), where + "/liminf");
    d.limsup = parse_extended(j.at("limsup"), where + "/limsup");
    if (*d.liminf > *d.limsup) throw ValidationError(where + ": liminf exceeds limsup");
    return d;
}

Envelope parse_envelope(const json& j, const std::string& where) {
    Envelope e;
    std::string kind = j.value("kind", "");
    if (kind == "affine") {
        e.kind = Envelope::affine;
        e.m = finite_number(j, "m", where);
        e.c = finite_number(j, "c", where);
    } else if (kind == "log_power") {
        e.kind = Envelope::log_power;
        e.C = finite_number(j, "C", where);
        e.k = finite_number(j, "k", where);
        e.a = finite_number(j, "a", where);
        if (e.k < 0 || e.a <= 0) throw ValidationError(where + ": log_power needs k >= 0 and a > 0");
    } else {
        throw ValidationError(where + "/kind: expected \"affine\" or \"log_power\"");
    }
    return e;
}

Piece parse_piece(const json& j, const std::string& where) {
    if (!j.is_object()) throw ValidationError(where + ": expected an object");
    Piece p;
    if (!j.contains("span") || !j.at("span").is_array() || j.at("span").size() != 2)
        throw ValidationError(where + "/span: expected [a, b]");
    p.a = parse_extended(j.at("span")[0], where + "/span/0");
    p.b = parse_extended(j.at("span")[1], where + "/span/1");
    std::string kind = j.value("kind", "");
    if (kind == "finite_analytic" || kind == "oscillatory") {
        p.kind = kind == "oscillatory" ? PieceKind::oscillatory : PieceKind::finite_analytic;
        if (!j.contains("expr") || !j.at("expr").is_string()) throw ValidationError(where + "/expr: missing");
        try {
            p.expr = Expr::parse(j.at("expr").get<std::string>());
        } catch (const Error& e) {
            throw ValidationError(where + "/expr: " + e.what());
        }
        if (j.contains("limits")) {
            const auto& l = j.at("limits");
            if (l.contains("lo")) p.at_lo = parse_declared(l.at("lo"), where + "/limits/lo");
            if (l.contains("hi")) p.at_hi = parse_declared(l.at("hi"), where + "/limits/hi");
        }
        if (p.kind == PieceKind::oscillatory) {
            if (std::isfinite(p.a) && !p.at_lo.declared())
                throw ValidationError(where + "/limits/lo: required for an oscillatory piece");
            if (std::isfinite(p.b) && !p.at_hi.declared())
                throw ValidationError(where + "/limits/hi: required for an oscillatory piece");
        }
    } else if (kind == "minus_infinity") {
        p.kind = PieceKind::minus_infinity;
    } else if (kind == "point_spike") {
        p.kind = PieceKind::point_spike;
        p.c0 = finite_number(j, "c0", where);
        p.spike_value = finite_number(j, "value", where);
        if (!j.contains("background")) throw ValidationError(where + "/background: missing");
        p.background = parse_extended(j.at("background"), where + "/background");
        if (p.background == kInf) throw ValidationError(where + "/background: must be below +inf");
    } else if (kind == "cantor_comb") {
        p.kind = PieceKind::cantor_comb;
        if (!j.contains("carrier")) throw ValidationError(where + "/carrier: missing");
        const auto& c = j.at("carrier");
        std::string cw = where + "/carrier";
        if (!c.contains("base") || c.at("base").size() != 2) throw ValidationError(cw + "/base: expected [u, v]");
        double u = parse_extended(c.at("base")[0], cw + "/base/0");
        double v = parse_extended(c.at("base")[1], cw + "/base/1");
        int radix = c.value("radix", 3);
        std::vector<int> digits = c.value("digits", std::vector<int>{0, 2});
        int depth = c.value("depth", 30);
        try {
            p.carrier = CantorSet(u, v, radix, digits, depth);
        } catch (const Error& e) {
            throw ValidationError(cw + ": " + e.what());
        }
        p.on_value = finite_number(j, "on_value", where);
        p.off_bound = finite_number(j, "off_bound", where);
        if (j.contains("profile")) {
            const auto& pr = j.at("profile");
            std::string pk = pr.value("kind", "");
            if (pk == "oscillate") {
                p.oscillate = true;
                p.center = finite_number(pr, "center", where + "/profile");
                p.amplitude = finite_number(pr, "amplitude", where + "/profile");
                if (p.amplitude < 0) throw ValidationError(where + "/profile/amplitude: must be >= 0");
            } else if (pk != "constant") {
                throw ValidationError(where + "/profile/kind: expected \"constant\" or \"oscillate\"");
            }
        }
    } else if (kind == "eta_boundary") {
        p.kind = PieceKind::eta_boundary;
        p.eta.a = finite_number(j, "a", where);
        if (p.eta.a <= 0) throw ValidationError(where + "/a: must be positive");
    } else {
        throw ValidationError(where + "/kind: unknown piece kind '" + kind + "'");
    }
    if (j.contains("asymptotics")) {
        const auto& as = j.at("asymptotics");
        if (as.contains("lower")) p.asymptotics.lower = parse_envelope(as.at("lower"), where + "/asymptotics/lower");
        if (as.contains("upper")) p.asymptotics.upper = parse_envelope(as.at("upper"), where + "/asymptotics/upper");
    }
    return p;
}

} // namespace

DefiningFunction DefiningFunction::from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("/: expected an object");
    if (!j.contains("interval") || !j.at("interval").is_array() || j.at("interval").size() != 2)
        throw ValidationError("/interval: expected [lo, hi]");
    double lo = parse_extended(j.at("interval")[0], "/interval/0");
    double hi = parse_extended(j.at("interval")[1], "/interval/1");
    if (!j.contains("pieces") || !j.at("pieces").is_array()) throw ValidationError("/pieces: expected an array");
    std::vector<Piece> pieces;
    for (size_t i = 0; i < j.at("pieces").size(); ++i)
        pieces.push_back(parse_piece(j.at("pieces")[i], "/pieces/" + std::to_string(i)));
    std::vector<PointValue> points;
    if (j.contains("points")) {
        for (size_t i = 0; i < j.at("points").size(); ++i) {
            const auto& pj = j.at("points")[i];
            std::string w = "/points/" + std::to_string(i);
            PointValue pv;
            pv.y = finite_number(pj, "y", w);
            if (!pj.contains("value")) throw ValidationError(w + "/value: missing");
            pv.value = parse_extended(pj.at("value"), w + "/value");
            pv.declared = true;
            points.push_back(pv);
        }
    }
    DefiningFunction f(lo, hi, std::move(pieces), std::move(points));
    f.name_ = j.value("name", "");
    return f;
}

DefiningFunction DefiningFunction::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("/: invalid JSON: ") + e.what());
    }
    return from_json(j);
}

DefiningFunction DefiningFunction::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

DefiningFunction::DefiningFunction(double lo, double hi, std::vector<Piece> pieces, std::vector<PointValue> points)
    : lo_(lo), hi_(hi), pieces_(std::move(pieces)), points_(std::move(points)) {
    if (std::isnan(lo_) || std::isnan(hi_) || !(lo_ < hi_)) throw ValidationError("/interval: empty interval");
    if (pieces_.empty()) throw ValidationError("/pieces: at least one piece required");
    for (size_t i = 0; i < pieces_.size(); ++i) {
        const Piece& p = pieces_[i];
        std::string w = "/pieces/" + std::to_string(i);
        if (!(p.a < p.b)) throw ValidationError(w + "/span: empty span");
        double expect = i == 0 ? lo_ : pieces_[i - 1].b;
        if (p.a != expect) throw ValidationError(w + "/span/0: pieces must cover the interval contiguously");
        if (p.kind == PieceKind::point_spike && !p.interior(p.c0))
            throw ValidationError(w + "/c0: must lie strictly inside the span");
        if (p.kind == PieceKind::cantor_comb && (p.carrier.lo() < p.a || p.carrier.hi() > p.b))
            throw ValidationError(w + "/carrier/base: must lie inside the span");
        if (p.kind == PieceKind::eta_boundary && (pieces_.size() != 1 || std::isfinite(lo_) || std::isfinite(hi_)))
            throw ValidationError(w + ": an eta_boundary piece must be the only piece, on the whole line");
    }
    if (pieces_.back().b != hi_) throw ValidationError("/pieces: last span must end at the interval end");

    bool all_minus = std::all_of(pieces_.begin(), pieces_.end(),
                                 [](const Piece& p) { return p.kind == PieceKind::minus_infinity; });
    if (all_minus && std::isinf(lo_) && std::isinf(hi_))
        throw ValidationError("/pieces: psi identically -inf on the whole line is the whole plane");

    for (size_t i = 0; i < points_.size(); ++i)
        if (!in_interval(points_[i].y))
            throw ValidationError("/points/" + std::to_string(i) + "/y: must lie inside the interval");
    std::sort(points_.begin(), points_.end(), [](auto& x, auto& y) { return x.y < y.y; });
    for (size_t i = 1; i < points_.size(); ++i)
        if (points_[i].y == points_[i - 1].y) throw ValidationError("/points: duplicate height");
    for (const auto& pv : points_)
        if (pv.value == kInf) throw ValidationError("/points: value must be below +inf");

    // interior breakpoints without a declared value get max(limsup left, limsup right)
    for (size_t i = 0; i + 1 < pieces_.size(); ++i) {
        double y0 = pieces_[i].b;
        if (find_point(y0)) continue;
        SideLimit l = pieces_[i].side_limit(y0, Side::left);
        SideLimit r = pieces_[i + 1].side_limit(y0, Side::right);
        PointValue pv;
        pv.y = y0;
        pv.value = std::max(l.limsup, r.limsup);
        pv.quality = worst(l.quality, r.quality);
        if (pv.value == kInf) {
            std::ostringstream os;
            os << "/pieces/" << i + 1 << "/span/0: limsup at breakpoint " << y0
               << " is +inf or undetermined; declare limits or add a points entry";
            throw ValidationError(os.str());
        }
        auto it = std::lower_bound(points_.begin(), points_.end(), y0, [](auto& p, double y) { return p.y < y; });
        points_.insert(it, pv);
    }
}

const PointValue* DefiningFunction::find_point(double y) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), y, [](auto& p, double v) { return p.y < v; });
    if (it != points_.end() && it->y == y) return &*it;
    return nullptr;
}

int DefiningFunction::piece_at(double y) const {
    // first piece with b > y
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), y, [](double v, const Piece& p) { return v < p.b; });
    if (it == pieces_.end() || !(it->a < y)) return -1;
    return static_cast<int>(it - pieces_.begin());
}

PointValue DefiningFunction::point_value(double y) const {
    if (!in_interval(y)) {
        std::ostringstream os;
        os << "height " << y << " is outside the interval";
        throw Error(os.str());
    }
    if (auto p = find_point(y)) return *p;
    int i = piece_at(y);
    PointValue pv;
    pv.y = y;
    pv.value = pieces_[static_cast<size_t>(i)].value(y);
    return pv;
}

double DefiningFunction::value(double y) const { return point_value(y).value; }

SideLimit DefiningFunction::side_limit(double y0, Side side) const {
    if (side == Side::left && !(y0 > lo_)) return {};
    if (side == Side::right && !(y0 < hi_)) return {};
    for (const Piece& p : pieces_) {
        bool hit = side == Side::left ? (p.a < y0 && y0 <= p.b) : (p.a <= y0 && y0 < p.b);
        if (hit) return p.side_limit(y0, side);
    }
    return {};
}

OneSidedLimits DefiningFunction::limits(double y0) const {
    if (!in_closure(y0)) {
        std::ostringstream os;
        os << "height " << y0 << " is outside the closure of the interval";
        throw Error(os.str());
    }
    return {side_limit(y0, Side::left), side_limit(y0, Side::right)};
}

std::vector<double> DefiningFunction::structure_points() const {
    std::set<double> s;
    for (const auto& p : points_) s.insert(p.y);
    for (const auto& p : pieces_)
        if (p.kind == PieceKind::point_spike) s.insert(p.c0);
    return {s.begin(), s.end()};
}

double DefiningFunction::lsc_value(double y) const {
    auto l = limits(y);
    double v = l.liminf();
    if (in_interval(y)) v = std::min(v, value(y));
    return v;
}

DefiningFunction DefiningFunction::transformed(bool lower) const {
    std::vector<Piece> ps = pieces_;
    for (Piece& p : ps) {
        if (p.kind == PieceKind::point_spike) {
            p.spike_value = lower ? std::min(p.spike_value, p.background) : std::max(p.spike_value, p.background);
        } else if (p.kind == PieceKind::cantor_comb) {
            // carrier points are limits of gaps from at least one side
            double glo = p.oscillate ? p.center - p.amplitude : p.off_bound;
            double ghi = p.oscillate ? p.center + p.amplitude : p.off_bound;
            p.on_value = lower ? std::min(p.on_value, glo) : std::max(p.on_value, ghi);
        }
    }
    std::vector<PointValue> pts;
    for (const auto& pv : points_) {
        auto l = limits(pv.y);
        PointValue q = pv;
        q.declared = true;
        q.value = lower ? std::min(pv.value, l.liminf()) : std::max(pv.value, l.limsup());
        q.quality = worst(pv.quality, l.quality());
        pts.push_back(q);
    }
    DefiningFunction out(lo_, hi_, std::move(ps), std::move(pts));
    out.name_ = name_;
    return out;
}

DefiningFunction DefiningFunction::lsc_regularized() const { return transformed(true); }
DefiningFunction DefiningFunction::usc_regularized() const { return transformed(false); }

ClosedSet DefiningFunction::minus_infinity_lsc_set() const {
    ClosedSet z;
    std::vector<std::pair<double, double>> parts;
    for (const Piece& p : pieces_)
        if (p.kind == PieceKind::minus_infinity) parts.emplace_back(p.a, p.b);
    std::vector<double> cand = structure_points();
    if (std::isfinite(lo_)) cand.push_back(lo_);
    if (std::isfinite(hi_)) cand.push_back(hi_);
    for (double y : cand) {
        auto l = limits(y);
        if (l.quality() == Quality::inconclusive) z.quality = Quality::inconclusive;
        else z.quality = worst(z.quality, l.quality());
        if (lsc_value(y) == -kInf) parts.emplace_back(y, y);
    }
    std::sort(parts.begin(), parts.end());
    for (auto& pr : parts) {
        if (!z.parts.empty() && pr.first <= z.parts.back().second)
            z.parts.back().second = std::max(z.parts.back().second, pr.second);
        else
            z.parts.push_back(pr);
    }
    return z;
}

std::vector<std::pair<double, double>> DefiningFunction::minus_infinity_components() const {
    std::vector<std::pair<double, double>> out;
    for (size_t i = 0; i < pieces_.size(); ++i) {
        const Piece& p = pieces_[i];
        if (p.kind != PieceKind::minus_infinity) continue;
        bool joins = !out.empty() && out.back().second == p.a && value(p.a) == -kInf;
        if (joins) out.back().second = p.b;
        else out.emplace_back(p.a, p.b);
    }
    return out;
}

// ------------------------------------------------------------- operations

bool contains(const DefiningFunction& psi, std::complex<double> z) {
    double y = z.imag();
    if (!psi.in_interval(y)) return false;
    return z.real() > psi.value(y);
}

OneSidedLimits one_sided_limits(const DefiningFunction& psi, double y0) { return psi.limits(y0); }

UscReport usc_check(const DefiningFunction& psi) {
    UscReport r;
    auto fail = [&](const std::string& m) {
        r.ok = Tri::no;
        r.messages.push_back(m);
    };
    for (double y : psi.structure_points()) {
        auto l = psi.limits(y);
        double v = psi.value(y);
        std::ostringstream os;
        if (l.quality() == Quality::inconclusive) {
            if (r.ok == Tri::yes) r.ok = Tri::unknown;
            os << "limits at " << y << " are inconclusive";
            r.messages.push_back(os.str());
        } else if (l.limsup() > v && !close(l.limsup(), v)) {
            os << "limsup " << ext_to_string(l.limsup()) << " exceeds the value " << ext_to_string(v) << " at " << y;
            fail(os.str());
        }
    }
    for (size_t i = 0; i < psi.pieces().size(); ++i) {
        const Piece& p = psi.pieces()[i];
        std::ostringstream os;
        if (p.kind == PieceKind::point_spike && p.spike_value < p.background) {
            os << "spike value below background at " << p.c0;
            fail(os.str());
        }
        if (p.kind == PieceKind::cantor_comb) {
            double ghi = p.oscillate ? p.center + p.amplitude : p.off_bound;
            if (p.on_value < ghi && !close(p.on_value, ghi)) {
                os << "comb carrier value " << p.on_value << " is below the nearby gap values " << ghi;
                fail(os.str());
            }
        }
        if (p.kind == PieceKind::finite_analytic || p.kind == PieceKind::oscillatory) {
            // finiteness on a sample grid of the open span
            double a = std::isfinite(p.a) ? p.a : (std::isfinite(p.b) ? p.b - 1e3 : -1e3);
            double b = std::isfinite(p.b) ? p.b : a + 2e3;
            for (int k = 1; k < 256; ++k) {
                double t = a + (b - a) * (k + 0.5 * std::sin(k)) / 256.0;
                if (!p.interior(t)) continue;
                double v = p.expr.eval(t);
                if (!std::isfinite(v)) {
                    std::ostringstream ms;
                    ms << "expression '" << p.expr.text() << "' is not finite at y=" << t;
                    fail(ms.str());
                    break;
                }
            }
        }
    }
    return r;
}

std::function<double(double)> lsc_regularization(const DefiningFunction& psi) {
    auto low = std::make_shared<DefiningFunction>(psi.lsc_regularized());
    return [low](double y) { return low->in_interval(y) ? low->value(y) : low->lsc_value(y); };
}

std::function<double(double)> usc_of_lsc(const DefiningFunction& psi) {
    auto up = std::make_shared<DefiningFunction>(psi.lsc_regularized().usc_regularized());
    return [up](double y) {
        if (up->in_interval(y)) return up->value(y);
        return up->limits(y).limsup();
    };
}

RegularityCheck equals_regularized(const DefiningFunction& psi) {
    RegularityCheck r;
    DefiningFunction tilde = psi.lsc_regularized().usc_regularized();
    for (size_t i = 0; i < psi.pieces().size(); ++i) {
        const Piece& p = psi.pieces()[i];
        const Piece& q = tilde.pieces()[i];
        if (p.kind == PieceKind::point_spike && !close(p.spike_value, q.spike_value)) {
            r.equal = Tri::no;
            r.witnesses.push_back(p.c0);
        }
        if (p.kind == PieceKind::cantor_comb && !close(p.on_value, q.on_value)) {
            r.equal = Tri::no;
            r.witnesses.push_back(p.carrier.interior_member());
            std::ostringstream os;
            os << "comb on [" << p.carrier.lo() << ", " << p.carrier.hi() << "]: psi=" << p.on_value
               << " on the carrier, regularization " << q.on_value;
            r.notes.push_back(os.str());
        }
    }
    for (const auto& pv : tilde.points()) {
        PointValue orig = psi.point_value(pv.y);
        if (pv.quality == Quality::inconclusive) {
            if (r.equal == Tri::yes) r.equal = Tri::unknown;
            std::ostringstream os;
            os << "limits at " << pv.y << " are inconclusive";
            r.notes.push_back(os.str());
            continue;
        }
        if (!close(orig.value, pv.value)) {
            r.equal = Tri::no;
            r.witnesses.push_back(pv.y);
        }
    }
    std::sort(r.witnesses.begin(), r.witnesses.end());
    return r;
}

} // namespace koenigs
