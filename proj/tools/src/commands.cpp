#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <trigonal/abelian.hpp>
#include <trigonal/errors.hpp>
#include <trigonal/kleinian.hpp>
#include <trigonal/pack.hpp>
#include <trigonal/schur.hpp>
#include <trigonal/symbolic.hpp>

namespace trigonal::cli
{

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace
{

fs::path data_dir(const options &o)
{
    return o.data_dir.empty() ? default_data_dir() : fs::path(o.data_dir);
}

curve_id resolve_curve(const options &o)
{
    curve_id id;
    if (o.n || o.s) {
        id = {o.n, o.s};
    } else {
        id = parse_curve_id(o.curve);
    }
    check_curve_id(id);
    return id;
}

bool has_data(const options &o, curve_id id)
{
    return fs::is_directory(curve_data_dir(data_dir(o), id));
}

// Data-backed model when the curve ships data, otherwise the bare cyclic curve.
curve_model model_for(const options &o, curve_id id)
{
    return has_data(o, id) ? load_curve(data_dir(o), id) : make_curve(id);
}

curve_model loaded_curve(const options &o)
{
    const auto id = resolve_curve(o);
    if (!has_data(o, id)) {
        throw usage_error("no data for curve " + id.str() + " under " + data_dir(o).string());
    }
    return load_curve(data_dir(o), id);
}

curve_model curve_with_f(const options &o)
{
    auto c = loaded_curve(o);
    if (!c.F) {
        throw usage_error("curve " + c.id.str() + " ships no fundamental polynomial F");
    }
    return c;
}

json header(const char *command)
{
    json j;
    j["schema"] = report_schema;
    j["command"] = command;
    j["status"] = "pass";
    return j;
}

void finish(outcome &out)
{
    out.json["status"] = out.passed ? "pass" : "fail";
}

json rational_list(const std::vector<rational> &v)
{
    json a = json::array();
    for (const auto &x : v) {
        a.push_back(to_string(x));
    }
    return a;
}

std::string join(const std::vector<int> &v, const char *sep = " ")
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        s += (k ? sep : "") + std::to_string(v[k]);
    }
    return s;
}

std::string parity_name(parity p)
{
    return p == parity::even ? "even" : p == parity::odd ? "odd" : "none";
}

json optional_int(const std::optional<int> &v)
{
    return v ? json(*v) : json(nullptr);
}

std::pair<int, int> parse_pair(const std::string &text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw usage_error("expected i,j but got '" + text + "'");
    }
    try {
        return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::exception &) {
        throw usage_error("expected i,j but got '" + text + "'");
    }
}

int points_or(const options &o, int fallback)
{
    const int p = o.points.value_or(fallback);
    if (p < 1) {
        throw usage_error("--points must be positive");
    }
    return p;
}

std::vector<std::pair<std::string, sparse_poly>> blocks_of(const formula_group &g)
{
    std::vector<std::pair<std::string, sparse_poly>> out;
    for (const auto &b : g.blocks) {
        out.emplace_back(b.name, b.value);
    }
    return out;
}

json report_json(const verification_report &rep)
{
    json j;
    j["suite"] = rep.suite;
    j["curve"] = rep.curve;
    j["seed"] = rep.seed;
    j["resampled"] = rep.resampled;
    json pts = json::array();
    for (const auto &p : rep.points) {
        pts.push_back(rational_list(p));
    }
    j["points"] = pts;
    json rels = json::array();
    for (const auto &r : rep.relations) {
        json e;
        e["id"] = r.id;
        e["weight"] = optional_int(r.weight);
        e["status"] = r.passed ? "pass" : "fail";
        e["residual"] = r.residual;
        e["point"] = r.point ? json(*r.point) : json(nullptr);
        rels.push_back(e);
    }
    j["relations"] = rels;
    return j;
}

void report_text(std::ostringstream &os, const verification_report &rep)
{
    std::size_t failed = 0;
    for (const auto &r : rep.relations) {
        if (!r.passed) {
            ++failed;
            os << "FAIL " << r.id << " residual " << r.residual << " at point " << *r.point << "\n";
        }
    }
    os << rep.suite << " on (" << rep.curve << "): " << rep.relations.size() - failed << "/" << rep.relations.size()
       << " relations vanish at " << rep.points.size() << " points (seed " << rep.seed << ", " << rep.resampled
       << " resampled)\n";
}

std::vector<std::string> suite_groups(const formula_pack &pack, const std::string &suite)
{
    std::vector<std::string> wanted;
    if (suite == "q-family") {
        wanted = {"q4", "q6", "bous"};
    } else if (suite == "all") {
        wanted = {"q4", "q6", "bous", "quadratic", "bilinear"};
    } else {
        if (!pack.has(suite)) {
            throw usage_error("curve " + pack.id.str() + " has no suite '" + suite + "'");
        }
        return {suite};
    }
    std::vector<std::string> out;
    for (const auto &g : wanted) {
        if (pack.has(g)) {
            out.push_back(g);
        }
    }
    if (out.empty()) {
        throw usage_error("curve " + pack.id.str() + " has no relations for suite '" + suite + "'");
    }
    return out;
}

} // namespace

outcome run_gaps(const options &o)
{
    const auto id = resolve_curve(o);
    const auto gaps = gap_sequence(id.n, id.s);
    outcome out;
    out.json = header("gaps");
    out.json["curve"] = id.str();
    out.json["genus"] = curve_genus(id);
    out.json["gaps"] = gaps;
    out.text = join(gaps) + "\n";
    return out;
}

outcome run_weights(const options &o)
{
    const auto id = resolve_curve(o);
    const auto w = compute_sato_weights(id);
    outcome out;
    out.json = header("weights");
    out.json["curve"] = id.str();
    out.json["genus"] = curve_genus(id);
    out.json["u"] = w.u;
    out.json["lambda"] = w.lambda;
    out.json["x"] = w.x;
    out.json["y"] = w.y;
    out.json["sigma"] = w.sigma;
    out.json["sigma_parity"] = parity_name(w.sigma_parity);
    std::ostringstream os;
    os << "x " << w.x << "\ny " << w.y << "\n";
    for (std::size_t k = 0; k < w.u.size(); ++k) {
        os << "u" << k + 1 << " " << w.u[k] << "\n";
    }
    for (std::size_t k = w.lambda.size(); k-- > 0;) {
        os << "lam" << k << " " << w.lambda[k] << "\n";
    }
    os << "sigma " << w.sigma << " (" << parity_name(w.sigma_parity) << ")\n";
    out.text = os.str();
    return out;
}

outcome run_sw(const options &o)
{
    const auto id = resolve_curve(o);
    const auto c = model_for(o, id);
    const auto sw = schur_weierstrass(c);
    outcome out;
    out.json = header("sw");
    out.json["curve"] = id.str();
    out.json["genus"] = c.genus;
    out.json["weight"] = optional_int(homogeneous_weight(sw.sw));
    out.json["monomials"] = sw.sw.size();
    const auto par = uniform_parity(sw.sw);
    out.json["parity"] = par ? json(parity_name(*par)) : json(nullptr);
    out.json["partition"] = sw.weierstrass;
    json match = nullptr;
    std::ostringstream os;
    os << to_string(sw.sw) << "\n";
    if (has_data(o, id) && fs::exists(curve_data_dir(data_dir(o), id) / "sigma.txt")) {
        const auto pack = load_pack(data_dir(o), c);
        const auto &shipped = pack.group("sigma").at("sw").value;
        const bool same = shipped == sw.sw;
        match = same;
        out.passed = same;
        os << "# " << sw.sw.size() << " monomials, " << (same ? "equal to" : "DIFFERENT from") << " the shipped sigma\n";
    } else {
        os << "# " << sw.sw.size() << " monomials\n";
    }
    out.json["matches_data"] = match;
    out.json["polynomial"] = to_string(sw.sw);
    out.text = os.str();
    finish(out);
    return out;
}

outcome run_expansions(const options &o)
{
    const auto id = resolve_curve(o);
    const auto c = model_for(o, id);
    if (o.terms < 1) {
        throw usage_error("--terms must be positive");
    }
    const auto ex = local_expansions(c, o.terms);
    outcome out;
    out.json = header("expansions");
    out.json["curve"] = id.str();
    out.json["terms"] = o.terms;
    std::ostringstream os;
    os << "x = " << to_string(ex.x) << "\n";
    os << "y = " << to_string(ex.y) << "\n";
    out.json["x"] = to_string(ex.x);
    out.json["y"] = to_string(ex.y);
    json u = json::array();
    for (std::size_t k = 0; k < ex.u.size(); ++k) {
        os << "u" << k + 1 << " = " << to_string(ex.u[k]) << "\n";
        u.push_back(to_string(ex.u[k]));
    }
    out.json["u"] = u;
    out.text = os.str();
    return out;
}

outcome run_rho(const options &o)
{
    const auto c = curve_with_f(o);
    if (o.count < 1) {
        throw usage_error("--count must be positive");
    }
    const auto ex = generate_rho(c, o.count);
    std::optional<formula_pack> pack;
    if (fs::exists(curve_data_dir(data_dir(o), c.id) / "rho.txt")) {
        pack = load_pack(data_dir(o), c);
    }
    outcome out;
    out.json = header("rho");
    out.json["curve"] = c.id.str();
    out.json["valuation"] = ex.valuation;
    std::ostringstream os;
    json list = json::array();
    for (std::size_t k = 0; k < ex.rho.size(); ++k) {
        const auto &r = ex.rho[k];
        const auto name = "rho" + std::to_string(k + 1);
        json e;
        e["name"] = name;
        e["xi_exponent"] = ex.exponents[k];
        e["terms"] = r.size();
        e["z_degree"] = r.degree_in(c.z_id());
        e["w_degree"] = r.degree_in(c.w_id());
        e["weight"] = optional_int(homogeneous_weight(r));
        json match = nullptr;
        std::string note;
        if (pack) {
            if (const auto *b = pack->group("rho").find(name)) {
                const auto ratio = proportionality(r, b->value);
                match = ratio ? json(to_string(*ratio)) : json(false);
                note = ratio ? ", shipped one times " + to_string(*ratio) : ", NOT proportional to the shipped one";
                out.passed = out.passed && ratio.has_value();
            }
        }
        e["matches_data"] = match;
        if (o.print) {
            e["polynomial"] = to_string(r);
        }
        list.push_back(e);
        os << name << " (xi^" << ex.exponents[k] << ", " << r.size() << " terms" << note << ")\n";
        if (o.print) {
            os << "  " << to_string(r) << "\n";
        }
    }
    out.json["rho"] = list;
    out.text = os.str();
    finish(out);
    return out;
}

outcome run_resultant(const options &o)
{
    const auto c = curve_with_f(o);
    std::vector<std::pair<int, int>> pairs;
    if (o.table) {
        for (int i = 1; i <= 5; ++i) {
            for (int j = i + 1; j <= 9; ++j) {
                pairs.emplace_back(i, j);
            }
        }
    } else {
        if (o.i < 1 || o.j <= o.i) {
            throw usage_error("need 1 <= i < j");
        }
        pairs.emplace_back(o.i, o.j);
    }
    int top = 0;
    for (const auto &[i, j] : pairs) {
        top = std::max(top, j);
    }
    const auto ex = generate_rho(c, top);
    std::optional<formula_pack> pack;
    if (fs::exists(curve_data_dir(data_dir(o), c.id) / "rho.txt")) {
        pack = load_pack(data_dir(o), c);
    }
    outcome out;
    out.json = header("resultant");
    out.json["curve"] = c.id.str();
    std::ostringstream os;
    json list = json::array();
    for (const auto &[i, j] : pairs) {
        const auto name = "rho" + std::to_string(i) + std::to_string(j);
        const formula_block *printed = pack ? pack->group("rho").find(name) : nullptr;
        const auto e = eliminate_w(c, ex.rho[static_cast<std::size_t>(i - 1)], ex.rho[static_cast<std::size_t>(j - 1)],
                                   printed ? &printed->value : nullptr);
        json r;
        r["i"] = i;
        r["j"] = j;
        r["terms"] = e.terms;
        r["z_degree"] = e.z_degree;
        r["weight"] = optional_int(e.weight);
        json match = nullptr;
        std::string note;
        if (printed) {
            const auto ratio = proportionality(e.value, printed->value);
            match = ratio ? json(to_string(*ratio)) : json(false);
            note = ratio ? ", shipped one times " + to_string(*ratio) : ", NOT proportional to the shipped one";
            out.passed = out.passed && ratio.has_value();
        }
        r["matches_data"] = match;
        if (o.print) {
            r["polynomial"] = to_string(e.value);
        }
        list.push_back(r);
        os << "rho_{" << i << "," << j << "}: " << e.terms << " terms, degree " << e.z_degree << " in z";
        if (e.weight) {
            os << ", weight " << *e.weight;
        }
        os << note << "\n";
        if (o.print) {
            os << "  " << to_string(e.value) << "\n";
        }
    }
    out.json["resultants"] = list;
    out.text = os.str();
    finish(out);
    return out;
}

outcome run_reduce(const options &o)
{
    const auto c = curve_with_f(o);
    const auto [ti, tj] = parse_pair(o.target);
    const auto [pi, pj] = parse_pair(o.pivot);
    if (ti < 1 || tj <= ti || pi < 1 || pj <= pi) {
        throw usage_error("need 1 <= i < j for target and pivot");
    }
    const auto ex = generate_rho(c, std::max(tj, pj));
    const auto rho = [&](int k) { return ex.rho[static_cast<std::size_t>(k - 1)]; };
    const auto target = eliminate_w(c, rho(ti), rho(tj)).value;
    const auto pivot = eliminate_w(c, rho(pi), rho(pj)).value;
    const auto red = reduce_degree(c, target, pivot);
    const int npts = points_or(o, 5);

    std::vector<std::pair<std::string, sparse_poly>> checks;
    for (std::size_t k = 0; k < red.relations.size(); ++k) {
        const auto [even, odd] = parity_split(red.relations[k]);
        const auto tag = "z" + std::to_string(k);
        checks.emplace_back(tag, red.relations[k]);
        checks.emplace_back(tag + ".even", even);
        checks.emplace_back(tag + ".odd", odd);
    }
    const auto rep = verify_relations(c, "reduce", checks, npts, o.seed);

    outcome out;
    out.json = header("reduce");
    out.json["curve"] = c.id.str();
    out.json["target"] = {ti, tj};
    out.json["pivot"] = {pi, pj};
    out.json["rounds"] = red.rounds;
    out.json["seed"] = o.seed;
    std::ostringstream os;
    os << "rho_{" << ti << "," << tj << "} reduced by rho_{" << pi << "," << pj << "} in " << red.rounds
       << " round(s): " << red.relations.size() << " relations\n";
    json list = json::array();
    for (std::size_t k = 0; k < red.relations.size(); ++k) {
        const auto &rel = red.relations[k];
        json e;
        e["z_power"] = k;
        e["terms"] = rel.size();
        e["weight"] = optional_int(homogeneous_weight(rel));
        e["polynomial"] = to_string(rel);
        bool ok = true;
        json st = json::object();
        for (std::size_t q = 0; q < 3; ++q) {
            const auto &r = rep.relations[3 * k + q];
            st[q == 0 ? "relation" : q == 1 ? "even" : "odd"] = r.passed ? "pass" : "fail";
            ok = ok && r.passed;
        }
        e["vanishes"] = st;
        out.passed = out.passed && ok;
        list.push_back(e);
        os << "[z^" << k << "] (" << rel.size() << " terms, " << (ok ? "vanishes" : "FAILS") << " at lam = 0 with both parity parts)\n  "
           << to_string(rel) << "\n";
    }
    out.json["relations"] = list;
    out.json["points"] = report_json(rep)["points"];
    out.text = os.str();
    finish(out);
    return out;
}

outcome run_invert(const options &o)
{
    const auto c = loaded_curve(o);
    std::string source = o.source;
    if (source == "auto") {
        source = c.F ? "generated" : "data";
    }
    sparse_poly rho12(c.reg), rho1(c.reg);
    if (source == "generated") {
        if (!c.F) {
            throw usage_error("curve " + c.id.str() + " ships no F; use --source data");
        }
        const auto ex = generate_rho(c, 2);
        const auto pair = jacobi_invert_symbolic(c, ex.rho[0], ex.rho[1]);
        rho12 = pair.rho12;
        rho1 = pair.rho1;
    } else if (source == "data") {
        const auto pack = load_pack(data_dir(o), c);
        const auto &g = pack.group("rho");
        rho12 = g.at("rho12").value;
        rho1 = g.at("rho1").value;
    } else {
        throw usage_error("--source must be auto, generated or data");
    }
    const int npts = points_or(o, 5);
    if (o.precision < 20) {
        throw usage_error("--precision must be at least 20 digits");
    }
    const mp_real bound = boost::multiprecision::pow(mp_real(10), -o.tolerance);

    point_sampler sampler(c, o.seed);
    std::size_t degenerate = 0;
    outcome out;
    out.json = header("invert");
    out.json["curve"] = c.id.str();
    out.json["source"] = source;
    out.json["precision"] = o.precision;
    out.json["seed"] = o.seed;
    out.json["tolerance"] = "1e-" + std::to_string(o.tolerance);
    std::ostringstream os;
    json list = json::array();
    mp_real worst = 0;
    for (int k = 0; k < npts;) {
        const auto pt = sampler.next();
        inversion_result inv;
        try {
            inv = jacobi_invert_numeric(c, rho12, rho1, pt, o.precision);
        } catch (const divisor_error &) {
            ++degenerate;
            continue;
        }
        ++k;
        const bool ok = inv.max_residual < bound && inv.vieta_error < bound;
        out.passed = out.passed && ok;
        worst = std::max(worst, inv.max_residual);
        json e;
        e["u"] = rational_list(inv.u);
        e["max_residual"] = to_string(inv.max_residual, 6);
        e["vieta_sum"] = to_string(inv.vieta_sum);
        e["vieta_error"] = to_string(inv.vieta_error, 6);
        json zs = json::array();
        for (const auto &p : inv.points) {
            zs.push_back({{"z", {to_string(p.z.re, 20), to_string(p.z.im, 20)}},
                          {"w", {to_string(p.w.re, 20), to_string(p.w.im, 20)}},
                          {"residual", to_string(p.residual, 6)}});
        }
        e["divisor"] = zs;
        e["status"] = ok ? "pass" : "fail";
        list.push_back(e);
        os << "point " << k << ": max |w^n - z^s| residual " << to_string(inv.max_residual, 3) << ", Vieta error "
           << to_string(inv.vieta_error, 3) << (ok ? "" : "  FAIL") << "\n";
    }
    out.json["resampled"] = sampler.resampled() + degenerate;
    out.json["max_residual"] = to_string(worst, 6);
    out.json["points"] = list;
    os << "(" << c.id.str() << ") " << npts << " points at " << o.precision << " digits, worst residual "
       << to_string(worst, 3) << "\n";
    out.text = os.str();
    finish(out);
    return out;
}

outcome run_verify(const options &o)
{
    const auto c = loaded_curve(o);
    outcome out;
    out.json = header("verify");
    std::ostringstream os;
    json reports = json::array();
    const auto add = [&](const verification_report &rep) {
        reports.push_back(report_json(rep));
        report_text(os, rep);
        out.passed = out.passed && rep.passed();
    };
    if (o.suite == "hirota") {
        add(verify_hirota(c, points_or(o, 20), o.seed));
    } else if (o.suite == "boussinesq") {
        const auto b = boussinesq_check(c, points_or(o, 5), o.seed);
        const bool ok = b.consistent && b.residual == 0;
        out.passed = ok;
        json j;
        j["suite"] = "boussinesq";
        j["curve"] = c.id.str();
        j["seed"] = o.seed;
        j["c"] = to_string(b.c);
        j["consistent"] = b.consistent;
        j["residual"] = to_string(b.residual);
        reports.push_back(j);
        os << "Q[" << c.genus << "," << c.genus << "," << c.genus << "," << c.genus << "] = " << to_string(b.c) << " p["
           << c.genus - 1 << "," << c.genus - 1 << "]" << (b.consistent ? "" : " (c varies between points)")
           << ", twice differentiated residual " << to_string(b.residual) << "\n";
    } else {
        const auto pack = load_pack(data_dir(o), c);
        for (const auto &g : suite_groups(pack, o.suite)) {
            add(verify_relations(c, g, blocks_of(pack.group(g)), points_or(o, 5), o.seed));
        }
    }
    out.json["curve"] = c.id.str();
    out.json["suite"] = o.suite;
    out.json["reports"] = reports;
    out.text = os.str();
    finish(out);
    return out;
}

outcome run_addition(const options &o)
{
    const auto c = loaded_curve(o);
    const auto pack = load_pack(data_dir(o), c);
    if (!pack.has("addition")) {
        throw usage_error("curve " + c.id.str() + " ships no addition polynomial");
    }
    sparse_poly f(c.reg);
    for (const auto &b : pack.group("addition").blocks) {
        f += b.value;
    }
    const auto rep = verify_addition(c, f, points_or(o, 10), o.seed);
    outcome out;
    out.json = header("addition");
    out.json["curve"] = c.id.str();
    out.json["seed"] = rep.seed;
    out.json["resampled"] = rep.resampled;
    std::ostringstream os;
    json list = json::array();
    std::size_t k = 0;
    for (const auto &ch : rep.checks) {
        json e;
        e["u"] = rational_list(ch.u);
        e["v"] = rational_list(ch.v);
        e["lhs"] = to_string(ch.lhs);
        e["rhs"] = to_string(ch.rhs);
        e["status"] = ch.passed ? "pass" : "fail";
        if (!ch.passed) {
            json bd = json::array();
            for (const auto &[mono, val] : ch.breakdown) {
                bd.push_back({{"monomial", mono}, {"value", to_string(val)}});
            }
            e["breakdown"] = bd;
        }
        list.push_back(e);
        os << "pair " << ++k << ": " << (ch.passed ? "exact equality" : "MISMATCH") << "\n";
        for (const auto &[mono, val] : ch.breakdown) {
            os << "  " << mono << " -> " << to_string(val) << "\n";
        }
    }
    out.passed = rep.passed();
    out.json["pairs"] = list;
    os << rep.checks.size() << " pairs, " << (out.passed ? "all equal" : "failures present") << "\n";
    out.text = os.str();
    finish(out);
    return out;
}

outcome run_candidates(const options &o)
{
    const auto id = resolve_curve(o);
    const auto c = make_curve(id);
    const auto mons = candidate_monomials(c, o.weight);
    outcome out;
    out.json = header("candidates");
    out.json["curve"] = id.str();
    out.json["weight"] = o.weight;
    out.json["sigma_parity"] = parity_name(c.weights.sigma_parity);
    json list = json::array();
    std::ostringstream os;
    for (const auto &m : mons) {
        const auto s = to_string(sparse_poly::from_terms(c.reg, {{m, rational(1)}}));
        list.push_back(s);
        os << s << "\n";
    }
    out.json["count"] = mons.size();
    out.json["monomials"] = list;
    os << "# " << mons.size() << " monomials of weight " << o.weight << "\n";
    out.text = os.str();
    return out;
}

outcome run_rank(const options &o)
{
    const auto c = loaded_curve(o);
    const auto pack = load_pack(data_dir(o), c);
    if (!pack.has("basis")) {
        throw usage_error("curve " + c.id.str() + " ships no basis list");
    }
    const auto rep = basis_rank(c, blocks_of(pack.group("basis")), points_or(o, 80), o.seed);
    outcome out;
    out.json = header("rank");
    out.json["curve"] = c.id.str();
    out.json["seed"] = o.seed;
    out.json["entries"] = rep.entries;
    out.json["distinct"] = rep.distinct;
    out.json["duplicates"] = rep.duplicates;
    out.json["points"] = rep.points;
    out.json["rank"] = rep.rank;
    std::ostringstream os;
    os << rep.entries << " listed functions, " << rep.distinct << " distinct";
    if (!rep.duplicates.empty()) {
        os << " (repeated:";
        for (const auto &d : rep.duplicates) {
            os << " " << d;
        }
        os << ")";
    }
    os << "\nrank " << rep.rank << " at lam = 0 over " << rep.points << " points\n";
    out.text = os.str();
    return out;
}

outcome run_validate_data(const options &o)
{
    const auto dir = data_dir(o);
    if (!fs::is_directory(dir)) {
        throw usage_error("data directory " + dir.string() + " does not exist");
    }
    outcome out;
    out.json = header("validate-data");
    std::ostringstream os;
    if (o.write_manifest) {
        std::ofstream(dir / "MANIFEST", std::ios::binary) << build_manifest(dir);
        os << "wrote " << (dir / "MANIFEST").string() << "\n";
    }
    std::vector<curve_id> ids;
    for (const auto &e : fs::directory_iterator(dir)) {
        const auto name = e.path().filename().string();
        if (e.is_directory() && name.rfind("curve-", 0) == 0) {
            ids.push_back(parse_curve_id(name.substr(6)));
        }
    }
    std::sort(ids.begin(), ids.end(), [](auto a, auto b) { return std::pair(a.n, a.s) < std::pair(b.n, b.s); });
    json curves = json::array();
    for (const auto id : ids) {
        const auto c = load_curve(dir, id);
        const auto pack = load_pack(dir, c);
        const auto checks = validate_pack(c, pack);
        std::size_t failed = 0;
        json fails = json::array();
        for (const auto &r : checks) {
            if (!r.passed) {
                ++failed;
                fails.push_back({{"group", r.group}, {"name", r.name}, {"check", r.check}, {"detail", r.detail}});
                os << "FAIL " << id.str() << " " << r.group << "/" << r.name << " " << r.check << ": " << r.detail << "\n";
            }
        }
        std::size_t formulas = 0;
        for (const auto &[name, g] : pack.groups) {
            formulas += g.blocks.size();
        }
        curves.push_back({{"curve", id.str()}, {"files", pack.groups.size()}, {"formulas", formulas},
                          {"checks", checks.size()}, {"failures", fails}});
        os << "(" << id.str() << ") " << pack.groups.size() << " files, " << formulas << " formulas, "
           << checks.size() - failed << "/" << checks.size() << " checks pass\n";
        out.passed = out.passed && failed == 0;
    }
    out.json["curves"] = curves;
    json manifest = json::array();
    if (fs::exists(dir / "MANIFEST")) {
        std::size_t bad = 0;
        const auto entries = check_manifest(dir);
        for (const auto &e : entries) {
            const bool ok = e.actual && *e.actual == e.expected;
            if (!ok) {
                ++bad;
                os << "FAIL manifest " << e.path << (e.actual ? " checksum differs" : " missing") << "\n";
            }
            manifest.push_back({{"path", e.path}, {"status", ok ? "pass" : "fail"}});
        }
        os << "MANIFEST: " << entries.size() - bad << "/" << entries.size() << " files match\n";
        out.passed = out.passed && bad == 0;
        out.json["manifest"] = manifest;
    } else {
        os << "no MANIFEST\n";
        out.json["manifest"] = nullptr;
    }
    out.text = os.str();
    finish(out);
    return out;
}

} // namespace trigonal::cli
