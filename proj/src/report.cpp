#include "koenigs/report.hpp"

#include <sstream>

namespace koenigs {

using nlohmann::json;

namespace {

json ext(double v) { return extended_to_json(v); }

json interval(const Interval& i) { return json::array({ext(i.first), ext(i.second)}); }

json intervals(const std::vector<Interval>& v) {
    json a = json::array();
    for (const Interval& i : v) a.push_back(interval(i));
    return a;
}

json numbers(const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(ext(x));
    return a;
}

} // namespace

json complex_to_json(cplx z) { return json::array({ext(z.real()), ext(z.imag())}); }

json to_json(const SemigroupClass& c) {
    json j{{"kind", to_string(c.kind)}};
    json k{{"kind", to_string(c.container.kind)}};
    switch (c.container.kind) {
    case Container::strip:
        k["lo"] = ext(c.container.a);
        k["hi"] = ext(c.container.b);
        j["strip_width"] = ext(c.strip_width);
        break;
    case Container::horizontal_half_plane:
        k["boundary"] = ext(c.container.a);
        k["side"] = c.container.upper ? "above" : "below";
        break;
    case Container::tilted_half_plane:
        k["m"] = ext(c.container.m);
        k["c"] = ext(c.container.c);
        break;
    case Container::none: break;
    }
    j["container"] = k;
    if (c.kind == SemigroupKind::zero_step) {
        json m{{"exists", to_string(c.minorant.exists)}, {"quality", to_string(c.minorant.quality)}};
        if (c.minorant.exists == Tri::yes) {
            m["m"] = ext(c.minorant.m);
            m["c"] = ext(c.minorant.c);
        }
        if (!c.minorant.reason.empty()) m["reason"] = c.minorant.reason;
        j["affine_minorant"] = m;
    }
    return j;
}

json to_json(const FeatureReport& f) {
    json j;
    j["minus_inf_components"] = intervals(f.minus_inf_components);
    j["I_R"] = intervals(f.I_R);
    j["I_infinity"] = intervals(f.I_infinity);
    j["I_N"] = json::array();
    for (const Height& h : f.I_N) j["I_N"].push_back({{"y", ext(h.y)}, {"status", to_string(h.status)}});
    j["D_U"] = json::array();
    for (const UnboundedDiscontinuity& d : f.D_U) {
        json s = json::array();
        if (d.left) s.push_back("left");
        if (d.right) s.push_back("right");
        j["D_U"].push_back({{"y", ext(d.y)}, {"sides", s}, {"status", to_string(d.status)}});
    }
    j["spikes"] = json::array();
    for (const Spike& s : f.spikes)
        j["spikes"].push_back({{"c0", ext(s.c0)}, {"q", ext(s.q)}, {"declared", s.declared}});
    j["cantor_combs"] = json::array();
    for (const CombWitness& c : f.cantor_combs) {
        json carrier{{"lo", ext(c.carrier.lo())},
                     {"hi", ext(c.carrier.hi())},
                     {"radix", c.carrier.radix()},
                     {"digits", c.carrier.digits()}};
        j["cantor_combs"].push_back({{"J", interval(c.J)}, {"q", ext(c.q)}, {"carrier", carrier}});
    }
    j["dw_discontinuity"] = to_string(f.dw_discontinuity);
    j["exceptional_arc_to_unbounded"] = to_string(f.exceptional_arc_to_unbounded);
    j["caveats"] = f.caveats;
    return j;
}

json to_json(const Witness& w) { return {{"kind", w.kind}, {"at", numbers(w.at)}, {"detail", w.detail}}; }

json to_json(const PVerdict& p) {
    json w = json::array();
    for (const Witness& x : p.witnesses) w.push_back(to_json(x));
    return {{"complete", to_string(p.complete)}, {"route", p.route}, {"witnesses", w}, {"caveats", p.caveats}};
}

json to_json(const CompletenessVerdict& v) {
    json w = json::array();
    for (const Witness& x : v.witnesses) w.push_back(to_json(x));
    return {{"kind", to_string(v.kind)},
            {"weak_star_complete", to_string(v.weak_star_complete)},
            {"route", v.route},
            {"witnesses", w},
            {"p", ext(v.p_exponent)},
            {"p_complete", to_string(v.p.complete)},
            {"p_report", to_json(v.p)},
            {"dynamics_consistent", to_string(v.dynamics_consistent)},
            {"features", to_json(v.features)},
            {"caveats", v.caveats}};
}

json to_json(const GeometryVerdict& g) {
    return {{"int_closure_ok", to_string(g.int_closure_ok)},
            {"components", g.components},
            {"window", numbers({g.window.x_min, g.window.x_max, g.window.y_min, g.window.y_max})},
            {"resolution", g.n},
            {"notes", g.notes}};
}

json to_json(const TopologicalVerdict& t) {
    return {{"weak_star_complete", to_string(t.verdict)}, {"route", t.route}, {"geometry", to_json(t.geometry)}};
}

json to_json(const InftyRegion& r) {
    json s;
    if (r.slopes.empty) {
        s = nullptr;
    } else {
        s = {{"lo", ext(r.slopes.lo)},
             {"hi", ext(r.slopes.hi)},
             {"lo_open", r.slopes.lo_open},
             {"hi_open", r.slopes.hi_open}};
    }
    return {{"plus_i_ray", r.plus_i},
            {"minus_i_ray", r.minus_i},
            {"slopes", s},
            {"exact", !r.lower_bound_only},
            {"description", r.describe()}};
}

json to_json(const FrequencyRegion& f) {
    json p = json::object();
    for (const auto& [exponent, samples] : f.p_samples) {
        json a = json::array();
        for (const Sample& s : samples) a.push_back({{"lambda", complex_to_json(s.lambda)}, {"status", to_string(s.status)}});
        std::ostringstream key;
        key << exponent;
        p[key.str()] = a;
    }
    json j{{"lambda_infinity", to_json(f.exact_infty)}, {"samples", p}};
    if (!f.p_template.empty()) j["lambda_p_template"] = f.p_template;
    return j;
}

json to_json(const MembershipResult& m) {
    return {{"status", to_string(m.status)},
            {"log_mean", ext(m.log_mean)},
            {"radial_log_means", numbers(m.radial_log_means)},
            {"boundary_log_integrals", numbers(m.boundary_log_integrals)},
            {"note", m.note}};
}

json to_json(const DemoResult& d) {
    json rows = json::array();
    for (const DemoRow& r : d.rows) rows.push_back({r.size, ext(r.error), ext(r.extra)});
    return {{"demo", d.name}, {"columns", d.columns}, {"rows", rows}, {"notes", d.notes}};
}

} // namespace koenigs
