#include <trigonal/kleinian.hpp>

#include <algorithm>
#include <functional>
#include <map>

#include <trigonal/errors.hpp>
#include <trigonal/resultant.hpp>

namespace trigonal
{

local_expansion local_expansions(const curve_model &c, int order)
{
    const int n = c.id.n, s = c.id.s;
    if (order < 1) {
        throw usage_error("expansion order must be positive");
    }
    const auto &reg = c.reg;
    const auto one = sparse_poly::constant(reg, 1);
    local_expansion e;
    e.x = laurent_series::monomial(reg, one, -n);
    const auto f = sparse_poly::var(reg, c.y_id()).pow(static_cast<unsigned>(n)) - c.equation;
    const auto fx = substitute_series(f, {{c.x_id(), e.x}});
    e.y = fx.truncated(-n * s + order).nth_root(static_cast<unsigned>(n));
    if (e.y.valuation() != -s || *e.y.coefficient(-s).constant_value() != 1) {
        throw internal_error("unexpected leading term of y(xi)");
    }
    // du_i / dxi = g_i(x, y) * (-n xi^(-n-1)) / (n y^(n-1))
    const auto inv = e.y.pow(static_cast<unsigned>(n - 1)).inverse().shifted(-n - 1) * rational(-1);
    const std::map<var_id, laurent_series> xy{{c.x_id(), e.x}, {c.y_id(), e.y}};
    for (const auto &gi : c.g) {
        e.u.push_back((substitute_series(gi, xy) * inv).integrate());
    }
    return e;
}

namespace
{

struct taylor_term {
    std::vector<int> alpha;
    laurent_series coeff;
};

// (-1)^|a| eps^a / a! for every multi-index a with eps^a below the truncation.
std::vector<taylor_term> taylor_table(const registry_ptr &reg, const std::vector<laurent_series> &eps,
                                      int truncation)
{
    std::vector<int> vals;
    for (const auto &e : eps) {
        const auto v = e.valuation();
        if (!v || *v <= 0) {
            throw usage_error("Taylor offsets need a positive valuation");
        }
        vals.push_back(*v);
    }
    std::vector<taylor_term> out;
    std::vector<int> alpha;
    const std::function<void(std::size_t, int, laurent_series)> rec = [&](std::size_t k, int weight,
                                                                          laurent_series acc) {
        if (k == eps.size()) {
            out.push_back({alpha, acc});
            return;
        }
        rec(k + 1, weight, acc);
        laurent_series pw = acc;
        int a = 0;
        while (weight + (a + 1) * vals[k] < truncation) {
            ++a;
            pw = (pw * eps[k]).truncated(truncation) * rational(-1, a);
            alpha.push_back(static_cast<int>(k) + 1);
            rec(k + 1, weight + a * vals[k], pw);
        }
        alpha.resize(alpha.size() - static_cast<std::size_t>(a));
    };
    rec(0, 0, laurent_series::constant(sparse_poly::constant(reg, 1), truncation));
    return out;
}

laurent_series apply_table(const registry_ptr &reg, const std::vector<int> &base,
                           const std::vector<taylor_term> &table, int truncation)
{
    laurent_series total(reg, truncation);
    for (const auto &t : table) {
        auto idx = base;
        idx.insert(idx.end(), t.alpha.begin(), t.alpha.end());
        const auto sym = sparse_poly::var(reg, make_wp(std::move(idx)));
        total += t.coeff * sym;
    }
    return base.size() % 2 ? -total : total;
}

} // namespace

laurent_series taylor_pfunction(const registry_ptr &reg, const std::vector<int> &base,
                                const std::vector<laurent_series> &eps, int truncation)
{
    return apply_table(reg, base, taylor_table(reg, eps, truncation), truncation);
}

sparse_poly reduce_on_curve(const curve_model &c, const sparse_poly &p)
{
    const auto n = static_cast<unsigned>(c.id.n);
    const auto w = c.w_id();
    if (p.degree_in(w) < n) {
        return p;
    }
    // w^n = f(z)
    const auto z = sparse_poly::var(c.reg, c.z_id());
    const auto y_pow = sparse_poly::var(c.reg, c.y_id()).pow(n);
    const auto fz = (y_pow - c.equation).substitute(c.x_id(), z);
    const auto coeffs = p.coefficients_in(w);
    sparse_poly out(c.reg);
    const auto wp = sparse_poly::var(c.reg, w);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) {
            continue;
        }
        out += coeffs[k] * fz.pow(static_cast<unsigned>(k / n)) * wp.pow(static_cast<unsigned>(k % n));
    }
    return out;
}

namespace
{

// (x - z)^2 * sum_ij p_ij(u + U(xi)) g_i(x, y) g_j(z, w) - F(x, y) along x = xi^-n.
laurent_series kleinian_series(const curve_model &c, int top)
{
    if (!c.F) {
        throw usage_error("curve (" + c.id.str() + ") has no fundamental polynomial F");
    }
    const int g = c.genus;
    const int n = c.id.n;
    const int pole = 2 * g - 2;
    const int trunc = top + 1;
    const int inner = trunc + 2 * n;
    const auto ex = local_expansions(c, inner + pole + 2);
    std::vector<laurent_series> eps;
    for (const auto &u : ex.u) {
        eps.push_back(-u);
    }
    const auto table = taylor_table(c.reg, eps, inner + pole);
    const std::map<var_id, laurent_series> xy{{c.x_id(), ex.x}, {c.y_id(), ex.y}};
    std::vector<laurent_series> gx;
    for (const auto &gi : c.g) {
        gx.push_back(substitute_series(gi, xy).truncated(inner));
    }
    std::map<std::pair<int, int>, laurent_series> t;
    for (int i = 1; i <= g; ++i) {
        for (int j = i; j <= g; ++j) {
            t.emplace(std::make_pair(i, j), apply_table(c.reg, {i, j}, table, inner + pole));
        }
    }
    laurent_series lhs(c.reg, inner);
    for (int j = 1; j <= g; ++j) {
        laurent_series sj(c.reg, inner);
        for (int i = 1; i <= g; ++i) {
            const auto &tij = t.at({std::min(i, j), std::max(i, j)});
            sj += gx[static_cast<std::size_t>(i - 1)] * tij;
        }
        // g_j(z, w)
        const auto gzw = c.g[static_cast<std::size_t>(j - 1)]
                             .substitute(c.x_id(), sparse_poly::var(c.reg, c.z_id()))
                             .substitute(c.y_id(), sparse_poly::var(c.reg, c.w_id()));
        lhs += sj * gzw;
    }
    const auto z = sparse_poly::var(c.reg, c.z_id());
    const auto diff = ex.x - laurent_series::constant(z);
    const auto rhs = substitute_series(*c.F, xy);
    auto k = (lhs.truncated(inner) * diff.pow(2) - rhs).truncated(trunc);
    if (k.truncation() < trunc) {
        throw internal_error("Kleinian expansion lost precision");
    }
    return k;
}

} // namespace

rho_expansion generate_rho(const curve_model &c, int count)
{
    if (count < 1) {
        throw usage_error("rho count must be positive");
    }
    const int pole = 2 * c.genus - 2 + 2 * c.id.n;
    int top = -pole + count + 2;
    for (;;) {
        const auto k = kleinian_series(c, top);
        rho_expansion r;
        r.valuation = k.valuation().value_or(top + 1);
        if (r.valuation < -pole) {
            throw internal_error("Kleinian expansion has a nonzero coefficient at xi^" + std::to_string(r.valuation)
                                 + " below the expected pole order");
        }
        for (int e = -pole; e <= top && static_cast<int>(r.rho.size()) < count; ++e) {
            auto coeff = k.coefficient(e);
            if (coeff.degree_in(c.w_id()) >= static_cast<unsigned>(c.id.n)) {
                coeff = reduce_on_curve(c, coeff);
                r.reduced_on_curve = true;
            }
            const bool repeat = std::any_of(r.rho.begin(), r.rho.end(), [&](const sparse_poly &p) {
                return proportionality(coeff, p).has_value();
            });
            if (coeff.is_zero() || repeat) {
                r.skipped.push_back(e);
                continue;
            }
            r.rho.push_back(std::move(coeff));
            r.exponents.push_back(e);
        }
        if (static_cast<int>(r.rho.size()) == count) {
            return r;
        }
        top += 4;
    }
}

elimination eliminate_w(const curve_model &c, const sparse_poly &a, const sparse_poly &b, const sparse_poly *printed)
{
    const auto w = c.w_id();
    if (a.degree_in(w) == 0 || b.degree_in(w) == 0) {
        throw usage_error("elimination of w needs both polynomials to depend on w");
    }
    auto r = resultant(a, b, w);
    if (r.is_zero()) {
        throw internal_error("resultant vanished identically");
    }
    r *= r.primitive_scale();
    if (printed && !printed->is_zero()) {
        if (auto ratio = proportionality(r, *printed); ratio && *ratio < 0) {
            r *= rational(-1);
        }
    }
    elimination e;
    e.terms = r.size();
    e.z_degree = r.degree_in(c.z_id());
    e.weight = homogeneous_weight(r);
    e.value = std::move(r);
    return e;
}

degree_reduction reduce_degree(const curve_model &c, const sparse_poly &target, const sparse_poly &pivot)
{
    const auto z = c.z_id();
    const auto g = static_cast<unsigned>(c.genus);
    if (pivot.degree_in(z) != g) {
        throw usage_error("pivot must have z-degree equal to the genus");
    }
    const auto lead = pivot.coefficients_in(z).back().constant_value();
    if (!lead || *lead == 0) {
        throw usage_error("pivot needs a constant leading z coefficient");
    }
    const auto zv = sparse_poly::var(c.reg, z);
    degree_reduction out;
    auto t = target;
    while (t.degree_in(z) >= g) {
        const auto d = t.degree_in(z);
        const auto top = t.coefficients_in(z).back();
        t -= top * zv.pow(d - g) * pivot * (1 / *lead);
        ++out.rounds;
    }
    auto coeffs = t.coefficients_in(z);
    coeffs.resize(g, sparse_poly(c.reg));
    out.relations = std::move(coeffs);
    return out;
}

inversion_pair jacobi_invert_symbolic(const curve_model &c, const sparse_poly &rho1, const sparse_poly &rho2)
{
    if (rho1.degree_in(c.w_id()) != 1) {
        throw internal_error("rho_1 must be linear in w");
    }
    auto e = eliminate_w(c, rho1, rho2);
    if (e.z_degree != static_cast<unsigned>(c.genus)) {
        throw internal_error("rho_{1,2} has z-degree " + std::to_string(e.z_degree) + ", expected the genus");
    }
    return {std::move(e.value), rho1};
}

} // namespace trigonal
