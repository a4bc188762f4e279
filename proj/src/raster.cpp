#include "koenigs/raster.hpp"

#include "koenigs/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace koenigs {

namespace {

constexpr int kSamples = 16;

/// Stratified heights in the open interval (l, h), offset by the golden ratio so
/// that they avoid dyadic and triadic structure.
std::vector<double> band_samples(double l, double h) {
    std::vector<double> ys;
    if (!(l < h)) return ys;
    const double phi = 0.6180339887498949;
    for (int k = 0; k < kSamples; ++k) {
        double f = std::fmod(phi * (k + 1) + 0.5 * phi * l, 1.0);
        if (f < 0) f += 1;
        double y = l + (h - l) * (k + 0.05 + 0.9 * f) / kSamples;
        if (l < y && y < h) ys.push_back(y);
    }
    return ys;
}

void add_ess(BandSummary& s, double v) {
    s.ess_sup = std::max(s.ess_sup, v);
    s.sup = std::max(s.sup, v);
    s.inf = std::min(s.inf, v);
}

void add_analytic(BandSummary& s, const Piece& p, double y0, double y1, double l, double h) {
    bool touches_end = false;
    for (auto [e, side] : {std::pair{p.a, Side::right}, std::pair{p.b, Side::left}}) {
        if (!std::isfinite(e) || e < y0 || e > y1) continue;
        touches_end = true;
        SideLimit lim = p.side_limit(e, side);
        s.ess_sup = std::max(s.ess_sup, lim.limsup);
        s.sup = std::max(s.sup, lim.limsup);
        s.inf = std::min(s.inf, lim.liminf);
    }
    double mn = kInf, mx = -kInf;
    for (double y : band_samples(l, h)) {
        double v = p.value(y);
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    // sampling misses the peaks of fast oscillation; the enclosure does not
    if (l < h) {
        double ub = certified_sup(p.expr, l, h, 400);
        if (std::isfinite(ub)) mx = std::max(mx, ub);
    }
    s.ess_sup = std::max(s.ess_sup, mx);
    s.sup = std::max(s.sup, mx);
    if (s.inf == -kInf) return;
    double lb = certified_inf(p.expr, l, h, 0, 400);
    if (!std::isfinite(lb)) {
        // singular formula at a touched endpoint whose limit is finite
        lb = touches_end && std::isfinite(mn) ? mn - std::max(1.0, mx - mn) : lb;
    }
    s.inf = std::min(s.inf, lb);
}

void add_comb(BandSummary& s, const Piece& p, double l, double h) {
    double u = p.carrier.lo(), v = p.carrier.hi();
    double outside = p.oscillate ? p.center : p.off_bound;
    if (l < h && (l < u || h > v)) add_ess(s, outside);
    double cl = std::max(l, u), ch = std::min(h, v);
    if (cl > ch) return;
    if (p.carrier.intersects(cl, ch)) {
        s.sup = std::max(s.sup, p.on_value);
        s.inf = std::min(s.inf, p.on_value);
        if (p.oscillate) {
            // the profile oscillates fully next to every point of the carrier
            s.ess_sup = std::max(s.ess_sup, p.center + p.amplitude);
            s.sup = std::max(s.sup, p.center + p.amplitude);
            s.inf = std::min(s.inf, p.center - p.amplitude);
        } else if (cl < ch) {
            add_ess(s, p.off_bound);
        }
        return;
    }
    if (!p.oscillate) {
        add_ess(s, p.off_bound);
        return;
    }
    for (double y : band_samples(cl, ch)) add_ess(s, p.comb_off_value(y));
    s.inf = std::min(s.inf, p.center - p.amplitude);
}

} // namespace

BandSummary band_summary(const DefiningFunction& psi, double y0, double y1) {
    BandSummary s;
    s.inside_I = psi.lo() <= y0 && y1 <= psi.hi();
    for (const Piece& p : psi.pieces()) {
        // a band meeting only an endpoint of the span still sees the one-sided limit there
        if (p.a > y1 || p.b < y0) continue;
        double l = std::max(y0, p.a), h = std::min(y1, p.b);
        switch (p.kind) {
        case PieceKind::finite_analytic:
        case PieceKind::oscillatory: add_analytic(s, p, y0, y1, l, h); break;
        case PieceKind::minus_infinity:
            s.inf = -kInf;
            break;
        case PieceKind::point_spike:
            if (l < h) add_ess(s, p.background);
            if (l <= p.c0 && p.c0 <= h && p.interior(p.c0)) {
                s.sup = std::max(s.sup, p.spike_value);
                s.inf = std::min(s.inf, p.spike_value);
            }
            break;
        case PieceKind::cantor_comb: add_comb(s, p, l, h); break;
        case PieceKind::eta_boundary: {
            double mn = kInf;
            auto ys = band_samples(l, h);
            ys.push_back(l);
            ys.push_back(h);
            for (double y : ys) {
                double v = p.eta.psi(y);
                add_ess(s, v);
                mn = std::min(mn, v);
            }
            s.inf = std::min(s.inf, mn - eta_lipschitz(p.eta.a) * (h - l));
            break;
        }
        }
    }
    for (double y : psi.structure_points()) {
        if (y < y0 || y > y1 || !psi.in_interval(y)) continue;
        double v = psi.value(y);
        s.sup = std::max(s.sup, v);
        s.inf = std::min(s.inf, v);
    }
    s.unbounded_above = s.sup == kInf;
    if (!s.inside_I) s.sup = s.ess_sup = kInf;
    return s;
}

Window auto_window(const DefiningFunction& psi) {
    std::vector<double> feats;
    auto add = [&](double y) {
        if (std::isfinite(y)) feats.push_back(y);
    };
    add(psi.lo());
    add(psi.hi());
    for (const Piece& p : psi.pieces()) {
        add(p.a);
        add(p.b);
        if (p.kind == PieceKind::point_spike) add(p.c0);
        if (p.kind == PieceKind::cantor_comb) add(p.carrier.lo()), add(p.carrier.hi());
    }
    for (double y : psi.structure_points()) add(y);
    double ylo = -1, yhi = 1;
    if (!feats.empty()) {
        auto [a, b] = std::minmax_element(feats.begin(), feats.end());
        ylo = *a, yhi = *b;
        if (yhi - ylo < 1) ylo -= 1, yhi += 1;
    }
    double span = yhi - ylo;
    Window w;
    w.y_min = ylo - (std::isfinite(psi.lo()) && psi.lo() == ylo ? 0.15 : 0.5) * span;
    w.y_max = yhi + (std::isfinite(psi.hi()) && psi.hi() == yhi ? 0.15 : 0.5) * span;

    // horizontal extent from a coarse scan, with outlying rows trimmed
    std::vector<double> sups, esss;
    const int rows = 256;
    for (int j = 0; j < rows; ++j) {
        double y0 = w.y_min + j * (w.y_max - w.y_min) / rows, y1 = w.y_min + (j + 1) * (w.y_max - w.y_min) / rows;
        BandSummary s = band_summary(psi, y0, y1);
        if (!s.inside_I) continue;
        if (std::isfinite(s.sup)) sups.push_back(s.sup);
        if (std::isfinite(s.ess_sup)) esss.push_back(s.ess_sup);
    }
    double xhi = -kInf, xlo = kInf;
    if (!sups.empty()) {
        std::sort(sups.begin(), sups.end());
        xhi = sups[static_cast<size_t>(0.95 * (sups.size() - 1))];
    }
    if (!esss.empty()) {
        std::sort(esss.begin(), esss.end());
        xlo = esss[static_cast<size_t>(0.05 * (esss.size() - 1))];
    }
    auto structural = [&](double v) {
        if (!std::isfinite(v)) return;
        xhi = std::max(xhi, v);
        xlo = std::min(xlo, v);
    };
    for (const Piece& p : psi.pieces()) {
        if (p.kind == PieceKind::point_spike) structural(p.spike_value), structural(p.background);
        if (p.kind == PieceKind::cantor_comb) {
            structural(p.on_value);
            if (p.oscillate)
                structural(p.center + p.amplitude), structural(p.center - p.amplitude);
            else
                structural(p.off_bound);
        }
    }
    for (const PointValue& pv : psi.points())
        if (pv.y > w.y_min && pv.y < w.y_max) structural(pv.value);
    if (!std::isfinite(xlo)) xlo = std::isfinite(xhi) ? xhi - 1 : -1;
    if (!std::isfinite(xhi)) xhi = xlo + 1;
    double width = std::max(xhi - xlo, 1.0);
    w.x_min = xlo - 0.15 * width;
    w.x_max = xhi + 0.15 * width;
    return w;
}

RasterGrid rasterize(const DefiningFunction& psi, const Window& window, int n) {
    if (n < 4) throw ValidationError("resolution must be at least 4");
    if (!(window.x_min < window.x_max && window.y_min < window.y_max)) throw ValidationError("empty window");
    RasterGrid g;
    g.window = window;
    g.nx = g.ny = n;
    size_t cells = static_cast<size_t>(n) * n;
    g.inside.assign(cells, 0);
    g.thin.assign(cells, 0);
    g.closure.assign(cells, 0);
    g.int_closure.assign(cells, 0);
    g.rows.reserve(n);
    bool any = false;
    for (int j = 0; j < n; ++j) {
        BandSummary s = band_summary(psi, g.y_lo(j), g.y_hi(j));
        g.rows.push_back(s);
        for (int i = 0; i < n; ++i) {
            double x = g.x_center(i);
            if (x > s.sup) g.inside[g.at(i, j)] = 1, any = true;
            else if (x > s.ess_sup) g.thin[g.at(i, j)] = 1;
        }
    }
    if (!any) throw ValidationError("window does not meet the domain");

    for (int j = 0; j < n; ++j) {
        // psi is -inf somewhere in the band: the closure holds a full horizontal line
        bool line = g.rows[j].inf == -kInf && (g.rows[j].inside_I || psi.in_closure(g.y_lo(j)) || psi.in_closure(g.y_hi(j)));
        for (int i = 0; i < n; ++i) {
            auto in = [&](int a, int b) { return a >= 0 && a < n && b >= 0 && b < n && g.inside[g.at(a, b)]; };
            bool c = line || in(i, j) || g.thin[g.at(i, j)] || in(i - 1, j) || in(i + 1, j) || in(i, j - 1) || in(i, j + 1);
            g.closure[g.at(i, j)] = c;
        }
    }
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            auto cl = [&](int a, int b) {
                a = std::clamp(a, 0, n - 1);
                b = std::clamp(b, 0, n - 1);
                return g.closure[g.at(a, b)] != 0;
            };
            g.int_closure[g.at(i, j)] = cl(i, j) && cl(i - 1, j) && cl(i + 1, j) && cl(i, j - 1) && cl(i, j + 1);
        }
    return g;
}

IntClosureScan int_closure_equals_domain(const RasterGrid& g) {
    IntClosureScan r;
    for (int j = 0; j < g.ny; ++j) {
        int run = 0;
        for (int i = 0; i < g.nx; ++i) {
            size_t k = g.at(i, j);
            bool defect = g.int_closure[k] && !g.inside[k] && g.thin[k];
            run = defect ? run + 1 : 0;
            if (run > r.longest_defect_run) {
                r.longest_defect_run = run;
                r.defect_height = 0.5 * (g.y_lo(j) + g.y_hi(j));
            }
        }
    }
    // a boundary band of two cells absorbs discretization slack
    r.ok = r.longest_defect_run <= 2;
    return r;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

/// Whether the region of I beyond the window edge carries a full -inf line.
bool beyond_blocks(const DefiningFunction& psi, double edge, bool above) {
    if (above ? psi.hi() <= edge : psi.lo() >= edge) return false;
    for (const Piece& p : psi.pieces())
        if (p.kind == PieceKind::minus_infinity && (above ? p.b > edge : p.a < edge)) return true;
    for (double y : psi.structure_points())
        if ((above ? y > edge : y < edge) && psi.lsc_value(y) == -kInf) return true;
    return false;
}

} // namespace

int complement_components(const DefiningFunction& psi, const RasterGrid& g) {
    const int nx = g.nx, ny = g.ny;
    std::vector<int> label(static_cast<size_t>(nx) * ny, -1);
    int nl = 0;
    std::vector<std::pair<int, int>> stack;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            if (g.closure[g.at(i, j)] || label[g.at(i, j)] >= 0) continue;
            label[g.at(i, j)] = nl;
            stack.push_back({i, j});
            while (!stack.empty()) {
                auto [a, b] = stack.back();
                stack.pop_back();
                for (auto [da, db] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
                    int c = a + da, d = b + db;
                    if (c < 0 || c >= nx || d < 0 || d >= ny) continue;
                    size_t k = g.at(c, d);
                    if (g.closure[k] || label[k] >= 0) continue;
                    label[k] = nl;
                    stack.push_back({c, d});
                }
            }
            ++nl;
        }

    // Rows whose boundary leaves the window are fine only on the way to a height
    // where psi has limsup +inf.
    std::vector<char> exempt(ny, 0);
    for (int j = 0; j < ny; ++j) {
        if (exempt[j] || !g.rows[j].unbounded_above) continue;
        for (int d : {-1, 1})
            for (int k = j; k >= 0 && k < ny && g.rows[k].sup >= g.window.x_max; k += d) exempt[k] = 1;
    }
    for (int j = 0; j < ny; ++j) {
        const BandSummary& s = g.rows[j];
        if (s.inside_I && !exempt[j] && label[g.at(nx - 1, j)] >= 0) {
            std::ostringstream os;
            os << "window too small: the complement reaches the right edge at y=" << 0.5 * (g.y_lo(j) + g.y_hi(j))
               << "; enlarge x_max";
            throw WindowTooSmall(os.str());
        }
    }

    // Rows with a finite band infimum continue to the left of the window as
    // complement; a maximal run of them forms one region outside the window.
    bool bottom_blocks = beyond_blocks(psi, g.window.y_min, false);
    bool top_blocks = beyond_blocks(psi, g.window.y_max, true);
    std::vector<int> seg(ny + 2, -1); // index 0 bottom, 1..ny rows, ny+1 top
    int ns = 0;
    bool open = false;
    for (int t = 0; t < ny + 2; ++t) {
        bool blocks = t == 0 ? bottom_blocks : t == ny + 1 ? top_blocks : g.rows[t - 1].inf == -kInf;
        if (blocks) {
            open = false;
            continue;
        }
        if (!open) ++ns, open = true;
        seg[t] = ns - 1;
    }
    Dsu dsu(static_cast<size_t>(nl + ns));
    for (int j = 0; j < ny; ++j) {
        int l = label[g.at(0, j)];
        if (l >= 0 && seg[j + 1] >= 0) dsu.unite(l, nl + seg[j + 1]);
    }
    for (int i = 0; i < nx; ++i) {
        int lb = label[g.at(i, 0)], lt = label[g.at(i, ny - 1)];
        if (lb >= 0 && seg[0] >= 0) dsu.unite(lb, nl + seg[0]);
        if (lt >= 0 && seg[ny + 1] >= 0) dsu.unite(lt, nl + seg[ny + 1]);
    }
    int count = 0;
    for (int k = 0; k < nl + ns; ++k)
        if (dsu.find(k) == k) ++count;
    return count;
}

void RasterGrid::write_pgm(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path);
    f << "P5\n" << nx << " " << ny << "\n255\n";
    for (int j = ny - 1; j >= 0; --j)
        for (int i = 0; i < nx; ++i) {
            size_t k = at(i, j);
            unsigned char v = inside[k] ? 255 : (int_closure[k] && thin[k]) ? 85 : closure[k] ? 170 : 0;
            f.put(static_cast<char>(v));
        }
}

GeometryVerdict geometry_verdict(const DefiningFunction& psi, std::optional<Window> window, int n) {
    GeometryVerdict v;
    v.window = window ? *window : auto_window(psi);
    v.n = n;
    RasterGrid fine = rasterize(psi, v.window, n);
    RasterGrid coarse = rasterize(psi, v.window, std::max(4, n / 2));
    IntClosureScan a = int_closure_equals_domain(fine), b = int_closure_equals_domain(coarse);
    if (a.ok == b.ok) {
        v.int_closure_ok = a.ok ? Tri::yes : Tri::no;
        if (!a.ok) {
            std::ostringstream os;
            os << "closure interior exceeds the domain near y=" << a.defect_height;
            v.notes.push_back(os.str());
        }
    } else {
        v.notes.push_back("interior-of-closure verdict differs between resolutions");
    }
    int ca = complement_components(psi, fine), cb = complement_components(psi, coarse);
    if (ca == cb)
        v.components = ca;
    else
        v.notes.push_back("component count differs between resolutions (" + std::to_string(ca) + " vs " +
                          std::to_string(cb) + ")");
    return v;
}

} // namespace koenigs
