// Command-line front end: classify, analyze, decide, freq, oracle, approx.
#include "koenigs/approx.hpp"
#include "koenigs/report.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace koenigs;
using nlohmann::json;

namespace {

struct Config {
    std::string spec, out, window, pgm, csv, svg, domain, demo, grid = "-2,2,-2,2,9,9";
    int resolution = 512, budget = 64, n = 256;
    double p = 2;
    std::vector<double> ps{1, 2};
    unsigned seed = 0;
    bool strict = false, cross_check = false;
};

std::vector<double> parse_list(const std::string& s, size_t expected, const std::string& flag) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            v.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw ValidationError(flag + ": '" + tok + "' is not a number");
        }
    }
    if (v.size() != expected) throw ValidationError(flag + ": expected " + std::to_string(expected) + " numbers");
    return v;
}

std::optional<Window> parse_window(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto v = parse_list(s, 4, "--window");
    return Window{v[0], v[1], v[2], v[3]};
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path);
    f << text;
}

json envelope(const Config& c, const std::string& command, json result) {
    result["schema"] = kSchema;
    result["command"] = command;
    if (!c.spec.empty()) result["input"] = c.spec;
    result["seed"] = c.seed;
    return result;
}

/// Log-scale convergence plot with the data embedded as a comment.
std::string svg_plot(const DemoResult& d) {
    const double W = 480, H = 320, pad = 48;
    double xmin = kInf, xmax = -kInf, ymin = kInf, ymax = -kInf;
    for (const DemoRow& r : d.rows) {
        if (!(r.error > 0)) continue;
        xmin = std::min(xmin, std::log2(r.size));
        xmax = std::max(xmax, std::log2(r.size));
        ymin = std::min(ymin, std::log10(r.error));
        ymax = std::max(ymax, std::log10(r.error));
    }
    if (xmax <= xmin) xmax = xmin + 1;
    if (ymax <= ymin) ymax = ymin + 1;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n<!-- "
       << d.columns[0] << "," << d.columns[1] << "\n";
    for (const DemoRow& r : d.rows) os << r.size << "," << r.error << "\n";
    os << "-->\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"" << pad << "\" y=\"20\" font-size=\"14\">" << d.name << ": log10 " << d.columns[1] << " vs log2 "
       << d.columns[0] << "</text>\n<polyline fill=\"none\" stroke=\"black\" points=\"";
    for (const DemoRow& r : d.rows) {
        if (!(r.error > 0)) continue;
        double x = pad + (W - 2 * pad) * (std::log2(r.size) - xmin) / (xmax - xmin);
        double y = H - pad - (H - 2 * pad) * (std::log10(r.error) - ymin) / (ymax - ymin);
        os << x << "," << y << " ";
    }
    os << "\"/>\n<text x=\"" << pad << "\" y=\"" << H - 12 << "\" font-size=\"11\">" << d.columns[0] << " "
       << std::pow(2, xmin) << " .. " << std::pow(2, xmax) << ", error 1e" << ymin << " .. 1e" << ymax
       << "</text>\n</svg>\n";
    return os.str();
}

std::vector<cplx> lambda_grid(const std::string& spec) {
    auto v = parse_list(spec, 6, "--grid");
    int nx = static_cast<int>(v[4]), ny = static_cast<int>(v[5]);
    if (nx < 1 || ny < 1 || nx * ny > 100000) throw ValidationError("--grid: counts must be in 1..100000 points");
    std::vector<cplx> g;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            g.push_back({nx == 1 ? v[0] : v[0] + (v[1] - v[0]) * i / (nx - 1),
                         ny == 1 ? v[2] : v[2] + (v[3] - v[2]) * j / (ny - 1)});
    return g;
}

bool any_unknown(const json& j) {
    if (j.is_string()) return j.get<std::string>() == "unknown" || j.get<std::string>() == "inconclusive";
    if (j.is_object() || j.is_array())
        for (const auto& v : j) if (any_unknown(v)) return true;
    return false;
}

int run(const std::string& command, const Config& c) {
    json out;
    if (command == "classify") {
        out = envelope(c, command, to_json(classify(DefiningFunction::from_file(c.spec))));
    } else if (command == "analyze") {
        out = envelope(c, command, to_json(analyze(DefiningFunction::from_file(c.spec))));
    } else if (command == "decide") {
        auto psi = DefiningFunction::from_file(c.spec);
        json r = to_json(decide(psi, c.p));
        if (c.cross_check) {
            auto t = decide_topological(psi, parse_window(c.window), c.resolution);
            r["cross_check"] = to_json(t);
            r["routes_agree"] = to_string(t.verdict == Tri::unknown || r["weak_star_complete"] == "unknown"
                                              ? Tri::unknown
                                              : tri_of(to_string(t.verdict) == r["weak_star_complete"]));
        }
        out = envelope(c, command, r);
    } else if (command == "oracle") {
        auto psi = DefiningFunction::from_file(c.spec);
        auto g = geometry_verdict(psi, parse_window(c.window), c.resolution);
        if (!c.pgm.empty()) rasterize(psi, g.window, c.resolution).write_pgm(c.pgm);
        json r = to_json(g);
        if (!c.pgm.empty()) r["pgm"] = c.pgm;
        out = envelope(c, command, r);
    } else if (command == "freq") {
        std::vector<cplx> grid = lambda_grid(c.grid);
        json r;
        std::ostringstream csv;
        csv << "re,im,p,status\n";
        if (c.domain.size() > 5 && c.domain.substr(c.domain.size() - 5) == ".json") {
            auto psi = DefiningFunction::from_file(c.domain);
            auto region = lambda_infty(psi);
            r = to_json(region);
            r["notes"] = json::array({"H^p samples need a conformal transplant; only canonical domains are sampled"});
            for (cplx l : grid)
                csv << l.real() << "," << l.imag() << ",inf," << to_string(region.exact_infty.contains(l)) << "\n";
        } else {
            auto dom = CanonicalDomain::parse(c.domain);
            auto region = canonical_region(dom, c.ps, grid);
            r = to_json(region);
            r["domain"] = dom.name();
            for (const auto& [p, samples] : region.p_samples)
                for (const Sample& s : samples)
                    csv << s.lambda.real() << "," << s.lambda.imag() << "," << p << "," << to_string(s.status) << "\n";
        }
        r["grid"] = c.grid;
        if (!c.csv.empty()) emit(csv.str(), c.csv);
        out = envelope(c, command, r);
    } else if (command == "approx") {
        DemoResult d = approx_demo(c.demo, c.budget, c.n);
        std::ostringstream csv;
        csv << d.columns[0] << "," << d.columns[1] << "," << d.columns[2] << "\n";
        csv.precision(10);
        for (const DemoRow& row : d.rows) csv << row.size << "," << row.error << "," << row.extra << "\n";
        if (!c.svg.empty()) emit(svg_plot(d), c.svg);
        emit(csv.str(), c.out);
        for (const std::string& note : d.notes) std::cerr << "# " << note << "\n";
        return 0;
    }
    emit(out.dump(2) + "\n", c.out);
    if (c.strict && any_unknown(out)) {
        std::cerr << "strict: the result contains unknown verdicts\n";
        return 4;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Starlike-at-infinity domains: completeness of exponential frequencies"};
    app.require_subcommand(1);
    Config c;
    auto common = [&](CLI::App* s) {
        s->add_option("--out", c.out, "Write the result here instead of stdout");
        s->add_option("--seed", c.seed, "Recorded in the output; all runs are deterministic");
        s->add_flag("--strict", c.strict, "Exit with status 4 when a verdict is unknown");
    };
    auto spec_arg = [&](CLI::App* s) { s->add_option("spec", c.spec, "Domain spec JSON")->required()->check(CLI::ExistingFile); };
    auto geometry = [&](CLI::App* s) {
        s->add_option("--window", c.window, "x0,x1,y0,y1 (automatic when omitted)");
        s->add_option("--resolution", c.resolution, "Raster cells per side")->check(CLI::Range(4, 8192));
    };

    auto* classify = app.add_subcommand("classify", "Semigroup type and containing canonical domain");
    spec_arg(classify);
    common(classify);
    auto* analyze = app.add_subcommand("analyze", "Dynamical features of the domain");
    spec_arg(analyze);
    common(analyze);
    auto* decide = app.add_subcommand("decide", "Completeness verdicts");
    spec_arg(decide);
    common(decide);
    geometry(decide);
    decide->add_option("--p", c.p, "Hardy exponent in [1, inf)")->check(CLI::Range(1.0, 1e300));
    decide->add_flag("--cross-check", c.cross_check, "Also run the raster route");
    auto* oracle = app.add_subcommand("oracle", "Raster geometry oracle");
    spec_arg(oracle);
    common(oracle);
    geometry(oracle);
    oracle->add_option("--pgm", c.pgm, "Write the cell classification as a PGM image");
    auto* freq = app.add_subcommand("freq", "Frequency sets");
    freq->add_option("--domain", c.domain, "half_plane | upper_half_plane | strip | eta:A | log:A,B | spec.json")
        ->required();
    freq->add_option("--p", c.ps, "Hardy exponents")->delimiter(',')->check(CLI::Range(1.0, 1e300));
    freq->add_option("--grid", c.grid, "x0,x1,y0,y1,nx,ny lambda grid");
    freq->add_option("--csv", c.csv, "Write the samples as CSV");
    common(freq);
    auto* approx = app.add_subcommand("approx", "Exponential approximation demos (CSV)");
    approx->add_option("--demo", c.demo, "halfplane | strip | logdomain | eta")->required();
    approx->add_option("--budget", c.budget, "Frequency budget")->check(CLI::PositiveNumber);
    approx->add_option("--n", c.n, "Discretization size")->check(CLI::PositiveNumber);
    approx->add_option("--svg", c.svg, "Write a convergence plot");
    common(approx);

    CLI11_PARSE(app, argc, argv);
    try {
        return run(app.get_subcommands().front()->get_name(), c);
    } catch (const WindowTooSmall& e) {
        std::cerr << "error: " << e.what()
                  << "\nhint: the domain reaches the right edge of the window; enlarge --window or omit it\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
