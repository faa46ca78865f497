#include <trigonal/abelian.hpp>

#include <algorithm>
#include <functional>

#include <trigonal/errors.hpp>
#include <trigonal/schur.hpp>
#include <trigonal/symbolic.hpp>

namespace trigonal
{

sigma_jet::sigma_jet(const sparse_poly &sigma, std::vector<var_id> u_ids, std::vector<rational> base, int order)
    : m_base(std::move(base)), m_order(order)
{
    if (u_ids.size() != m_base.size()) {
        throw usage_error("base point has " + std::to_string(m_base.size()) + " coordinates, expected "
                          + std::to_string(u_ids.size()));
    }
    std::vector<unsigned> max_exp(m_base.size(), 0);
    for (const auto &[m, c] : sigma.terms()) {
        term t{c, std::vector<unsigned>(m_base.size(), 0)};
        for (std::size_t i = 0; i < m.size(); ++i) {
            const auto it = std::find(u_ids.begin(), u_ids.end(), m.var_at(i));
            if (it == u_ids.end()) {
                throw usage_error("sigma contains '" + sigma.reg()->name(m.var_at(i)) + "', not a u variable");
            }
            const auto k = static_cast<std::size_t>(it - u_ids.begin());
            t.exps[k] = m.exp_at(i);
            max_exp[k] = std::max(max_exp[k], t.exps[k]);
        }
        m_terms.push_back(std::move(t));
    }
    m_powers.resize(m_base.size());
    for (std::size_t i = 0; i < m_base.size(); ++i) {
        m_powers[i].push_back(1);
        for (unsigned k = 1; k <= max_exp[i]; ++k) {
            m_powers[i].push_back(m_powers[i].back() * m_base[i]);
        }
    }
}

const rational &sigma_jet::derivative(std::vector<int> indices) const
{
    if (static_cast<int>(indices.size()) > m_order) {
        throw usage_error("derivative of order " + std::to_string(indices.size()) + " exceeds the jet order "
                          + std::to_string(m_order));
    }
    std::sort(indices.begin(), indices.end());
    if (auto it = m_cache.find(indices); it != m_cache.end()) {
        return it->second;
    }
    std::vector<unsigned> alpha(m_base.size(), 0);
    for (int i : indices) {
        if (i < 1 || i > static_cast<int>(m_base.size())) {
            throw usage_error("u index " + std::to_string(i) + " out of range");
        }
        ++alpha[static_cast<std::size_t>(i - 1)];
    }
    rational total = 0;
    for (const auto &t : m_terms) {
        rational v = t.coeff;
        for (std::size_t i = 0; i < alpha.size() && v != 0; ++i) {
            const unsigned e = t.exps[i], a = alpha[i];
            if (a > e) {
                v = 0;
                break;
            }
            for (unsigned k = 0; k < a; ++k) {
                v *= e - k;
            }
            v *= m_powers[i][e - a];
        }
        total += v;
    }
    return m_cache.emplace(std::move(indices), total).first->second;
}

rational sigma_jet::coefficient(const std::vector<unsigned> &alpha) const
{
    if (alpha.size() != m_base.size()) {
        throw usage_error("multi-index length differs from the genus");
    }
    std::vector<int> idx;
    integer fact = 1;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        for (unsigned k = 1; k <= alpha[i]; ++k) {
            idx.push_back(static_cast<int>(i) + 1);
            fact *= k;
        }
    }
    return derivative(std::move(idx)) / rational(fact);
}

abelian_point::abelian_point(sigma_jet jet) : m_jet(std::move(jet))
{
    if (m_jet.value() == 0) {
        throw divisor_error("sigma vanishes at the point");
    }
}

const rational &abelian_point::log_derivative(const std::vector<int> &s) const
{
    if (auto it = m_log.find(s); it != m_log.end()) {
        return it->second;
    }
    // d_S sigma = sum over T in rest of L_{s0 + T} * d_{rest - T} sigma
    const std::size_t r = s.size() - 1;
    rational acc = m_jet.derivative(s);
    const std::uint32_t full = (1u << r) - 1;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        std::vector<int> with{s[0]}, without;
        for (std::size_t k = 0; k < r; ++k) {
            (mask >> k & 1u ? with : without).push_back(s[k + 1]);
        }
        std::sort(with.begin(), with.end());
        acc -= log_derivative(with) * m_jet.derivative(without);
    }
    acc /= m_jet.value();
    return m_log.emplace(s, acc).first->second;
}

rational abelian_point::wp(std::vector<int> indices) const
{
    if (indices.size() < 2) {
        throw usage_error("p-functions need at least two indices");
    }
    std::sort(indices.begin(), indices.end());
    return -log_derivative(indices);
}

rational abelian_point::q(std::vector<int> indices) const
{
    if (indices.size() < 2) {
        throw usage_error("Q-functions need at least two indices");
    }
    if (indices.size() % 2) {
        return 0;
    }
    std::sort(indices.begin(), indices.end());
    if (auto it = m_q.find(indices); it != m_q.end()) {
        return it->second;
    }
    const std::size_t n = indices.size();
    rational sum = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> a, b;
        for (std::size_t k = 0; k < n; ++k) {
            (mask >> k & 1u ? a : b).push_back(indices[k]);
        }
        const rational prod = m_jet.derivative(a) * m_jet.derivative(b);
        if (b.size() % 2) {
            sum -= prod;
        } else {
            sum += prod;
        }
    }
    const rational sig = m_jet.value();
    rational value = -sum / (2 * sig * sig);
    return m_q.emplace(std::move(indices), value).first->second;
}

rational evaluate_symbols(const sparse_poly &p, const abelian_point &at_u, const abelian_point *at_v)
{
    const auto &reg = p.reg();
    const auto q = drop_lambda(p);
    std::map<var_id, rational> cache;
    return q.evaluate([&](var_id id) {
        if (auto it = cache.find(id); it != cache.end()) {
            return it->second;
        }
        const auto &v = reg->var(id);
        const abelian_point *pt = &at_u;
        if (v.point == eval_point::v) {
            if (!at_v) {
                throw usage_error("symbol '" + to_string(v) + "' needs a second point");
            }
            pt = at_v;
        }
        rational value;
        if (v.kind == var_kind::wp) {
            value = pt->wp(v.indices);
        } else if (v.kind == var_kind::q) {
            value = pt->q(v.indices);
        } else {
            throw usage_error("cannot evaluate '" + to_string(v) + "' from sigma values");
        }
        cache.emplace(id, value);
        return value;
    });
}

sparse_poly lambda_free_sigma(const curve_model &curve)
{
    return schur_weierstrass(curve).sw;
}

namespace
{

std::vector<var_id> u_ids(const curve_model &c)
{
    std::vector<var_id> out;
    for (int i = 1; i <= c.genus; ++i) {
        out.push_back(c.u_id(i));
    }
    return out;
}

} // namespace

point_sampler::point_sampler(const curve_model &curve, std::uint64_t seed, int jet_order)
    : m_sigma(lambda_free_sigma(curve)), m_u(u_ids(curve)), m_rng(seed), m_order(jet_order)
{
}

std::vector<rational> point_sampler::draw_coordinates()
{
    std::uniform_int_distribution<int> num(-40, 40), den(1, 40);
    std::vector<rational> out;
    for (std::size_t i = 0; i < m_u.size(); ++i) {
        const int a = num(m_rng);
        const int b = den(m_rng);
        out.push_back(make_rational(a, b));
    }
    return out;
}

abelian_point point_sampler::next()
{
    for (;;) {
        auto base = draw_coordinates();
        sigma_jet jet(m_sigma, m_u, std::move(base), m_order);
        if (jet.value() == 0) {
            ++m_resampled;
            continue;
        }
        return abelian_point(std::move(jet));
    }
}

abelian_point point_sampler::at(std::vector<rational> base) const
{
    return abelian_point(sigma_jet(m_sigma, m_u, std::move(base), m_order));
}

bool verification_report::passed() const
{
    return std::all_of(relations.begin(), relations.end(), [](const auto &r) { return r.passed; });
}

verification_report verify_relations(const curve_model &curve, const std::string &suite,
                                     const std::vector<std::pair<std::string, sparse_poly>> &relations, int points,
                                     std::uint64_t seed)
{
    if (points < 1) {
        throw usage_error("need at least one sample point");
    }
    point_sampler sampler(curve, seed);
    std::vector<abelian_point> pts;
    verification_report rep;
    rep.suite = suite;
    rep.curve = curve.id.str();
    rep.seed = seed;
    for (int k = 0; k < points; ++k) {
        pts.push_back(sampler.next());
        rep.points.push_back(pts.back().base());
    }
    rep.resampled = sampler.resampled();
    for (const auto &[id, rel] : relations) {
        relation_status st;
        st.id = id;
        st.weight = homogeneous_weight(rel);
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const auto v = evaluate_symbols(rel, pts[k]);
            if (v != 0) {
                st.passed = false;
                st.residual = to_string(v);
                st.point = k;
                break;
            }
        }
        rep.relations.push_back(std::move(st));
    }
    return rep;
}

namespace
{

void multisets(int g, std::size_t size, std::vector<int> &cur, std::vector<std::vector<int>> &out)
{
    if (cur.size() == size) {
        out.push_back(cur);
        return;
    }
    for (int i = cur.empty() ? 1 : cur.back(); i <= g; ++i) {
        cur.push_back(i);
        multisets(g, size, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> multisets(int g, std::size_t size)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    multisets(g, size, cur, out);
    return out;
}

} // namespace

verification_report verify_hirota(const curve_model &curve, int points, std::uint64_t seed, int six_index_sets)
{
    const int g = curve.genus;
    const auto &reg = curve.reg;
    std::vector<std::pair<std::string, sparse_poly>> rels;
    const auto add = [&](const std::vector<int> &s) {
        const auto q = sparse_poly::var(reg, make_q(s));
        rels.emplace_back(to_string(make_q(s)), q - q_expansion(reg, s));
    };
    for (const auto &s : multisets(g, 2)) {
        add(s);
    }
    for (const auto &s : multisets(g, 4)) {
        add(s);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> idx(1, g);
    std::vector<std::vector<int>> six;
    while (static_cast<int>(six.size()) < six_index_sets) {
        std::vector<int> s(6);
        for (auto &i : s) {
            i = idx(rng);
        }
        std::sort(s.begin(), s.end());
        if (std::find(six.begin(), six.end(), s) == six.end()) {
            six.push_back(s);
        }
    }
    std::sort(six.begin(), six.end());
    for (const auto &s : six) {
        add(s);
    }
    auto rep = verify_relations(curve, "hirota", rels, points, seed);

    point_sampler sampler(curve, seed);
    std::vector<abelian_point> pts;
    for (int k = 0; k < points; ++k) {
        pts.push_back(sampler.next());
    }
    for (const auto &s : multisets(g, 3)) {
        relation_status st;
        st.id = "Q[" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) + "]";
        st.weight = -(curve.weights.u[static_cast<std::size_t>(s[0] - 1)]
                      + curve.weights.u[static_cast<std::size_t>(s[1] - 1)]
                      + curve.weights.u[static_cast<std::size_t>(s[2] - 1)]);
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const auto v = pts[k].q(s);
            if (v != 0) {
                st.passed = false;
                st.residual = to_string(v);
                st.point = k;
                break;
            }
        }
        rep.relations.push_back(std::move(st));
    }
    return rep;
}

boussinesq_result boussinesq_check(const curve_model &curve, int points, std::uint64_t seed)
{
    const int g = curve.genus;
    point_sampler sampler(curve, seed);
    const auto &reg = curve.reg;
    const auto q4 = q_expansion(reg, {g, g, g, g});
    const auto p_low = sparse_poly::var(reg, make_wp({g - 1, g - 1}));
    boussinesq_result out;
    std::optional<rational> c;
    std::vector<abelian_point> pts;
    while (static_cast<int>(pts.size()) < points) {
        auto pt = sampler.next();
        const auto low = pt.wp({g - 1, g - 1});
        if (low == 0) {
            continue;
        }
        const rational ci = pt.q({g, g, g, g}) / low;
        if (!c) {
            c = ci;
        } else if (ci != *c) {
            out.consistent = false;
        }
        out.points.push_back(pt.base());
        pts.push_back(std::move(pt));
    }
    out.c = *c;
    const auto rel = q4 - out.c * p_low;
    const auto d2 = differentiate_symbols(differentiate_symbols(rel, g), g);
    out.residual = 0;
    for (const auto &pt : pts) {
        out.residual = std::max(out.residual, rational(abs(evaluate_symbols(d2, pt))));
    }
    return out;
}

bool addition_report::passed() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.passed; });
}

addition_check check_addition(const curve_model &curve, const sparse_poly &f, const abelian_point &u,
                              const abelian_point &v)
{
    const auto sigma = lambda_free_sigma(curve);
    const auto ids = u_ids(curve);
    const auto sigma_at = [&](const std::vector<rational> &pt) {
        return sigma.evaluate([&](var_id id) {
            const auto it = std::find(ids.begin(), ids.end(), id);
            return pt[static_cast<std::size_t>(it - ids.begin())];
        });
    };
    addition_check out;
    out.u = u.base();
    out.v = v.base();
    std::vector<rational> sum, diff;
    for (std::size_t i = 0; i < out.u.size(); ++i) {
        sum.push_back(out.u[i] + out.v[i]);
        diff.push_back(out.u[i] - out.v[i]);
    }
    const auto su = u.jet().value(), sv = v.jet().value();
    out.lhs = -sigma_at(sum) * sigma_at(diff) / (su * su * sv * sv);
    out.rhs = evaluate_symbols(f, u, &v) + evaluate_symbols(f, v, &u);
    out.passed = out.lhs == out.rhs;
    if (!out.passed) {
        const auto g = drop_lambda(f);
        for (const auto *t : g.canonical_terms()) {
            const auto one = sparse_poly::from_terms(g.reg(), {*t});
            out.breakdown.emplace_back(to_string(one), evaluate_symbols(one, u, &v) + evaluate_symbols(one, v, &u));
        }
    }
    return out;
}

addition_report verify_addition(const curve_model &curve, const sparse_poly &f, int pairs, std::uint64_t seed)
{
    point_sampler sampler(curve, seed);
    addition_report rep;
    rep.seed = seed;
    for (int k = 0; k < pairs; ++k) {
        const auto u = sampler.next();
        const auto v = sampler.next();
        rep.checks.push_back(check_addition(curve, f, u, v));
    }
    rep.resampled = sampler.resampled();
    return rep;
}

namespace
{

mp_complex horner(const std::vector<rational> &coeffs, const mp_complex &z)
{
    mp_complex acc{0, 0};
    for (auto k = coeffs.size(); k-- > 0;) {
        acc = acc * z + mp_complex{to_mp(coeffs[k]), 0};
    }
    return acc;
}

mp_complex ipow(const mp_complex &z, int e)
{
    mp_complex acc{1, 0};
    for (int k = 0; k < e; ++k) {
        acc = acc * z;
    }
    return acc;
}

// Coefficients in z of a polynomial in z and Abelian symbols, evaluated at a point.
std::vector<rational> z_coefficients(const sparse_poly &p, var_id z, const abelian_point &at)
{
    std::vector<rational> out;
    for (const auto &c : p.coefficients_in(z)) {
        out.push_back(c.is_zero() ? rational(0) : evaluate_symbols(c, at));
    }
    return out;
}

} // namespace

inversion_result jacobi_invert_numeric(const curve_model &curve, const sparse_poly &rho12, const sparse_poly &rho1,
                                       const abelian_point &at, unsigned digits)
{
    const auto z = curve.z_id(), w = curve.w_id();
    const auto g = static_cast<std::size_t>(curve.genus);
    if (rho12.degree_in(w) != 0 || rho12.degree_in(z) != g) {
        throw usage_error("rho_12 must be free of w and of degree g in z");
    }
    if (rho1.degree_in(w) != 1) {
        throw usage_error("rho_1 must be linear in w");
    }
    precision_scope prec(digits);
    inversion_result out;
    out.u = at.base();
    const auto a = z_coefficients(rho12, z, at);
    out.vieta_sum = -a[g - 1] / a[g];
    const auto roots = polynomial_roots(a);

    const auto wc = rho1.coefficients_in(w);
    const auto b0 = z_coefficients(wc[0], z, at);
    const auto b1 = z_coefficients(wc[1], z, at);
    const mp_real tiny = boost::multiprecision::pow(mp_real(10), -static_cast<int>(digits / 2));
    mp_complex total{0, 0};
    out.max_residual = 0;
    for (const auto &zi : roots.roots) {
        const auto lead = horner(b1, zi);
        if (abs(lead) < tiny) {
            throw divisor_error("w coefficient of rho_1 vanishes at a root");
        }
        divisor_point dp;
        dp.z = zi;
        dp.w = mp_complex{0, 0} - horner(b0, zi) / lead;
        const auto zs = ipow(zi, curve.id.s);
        dp.residual = abs(ipow(dp.w, curve.id.n) - zs) / std::max(mp_real(1), abs(zs));
        out.max_residual = std::max(out.max_residual, dp.residual);
        total = total + zi;
        out.points.push_back(std::move(dp));
    }
    out.vieta_error = abs(total - mp_complex{to_mp(out.vieta_sum), 0});
    return out;
}

std::vector<monomial> candidate_monomials(const curve_model &curve, int k)
{
    const auto &wts = curve.weights;
    if (((k - wts.sigma) % curve.id.n + curve.id.n) % curve.id.n != 0) {
        throw usage_error("weight " + std::to_string(k) + " is not congruent to the sigma weight "
                          + std::to_string(wts.sigma) + " mod " + std::to_string(curve.id.n));
    }
    const int g = curve.genus;
    std::vector<sparse_poly::term> terms;
    std::vector<unsigned> exps(static_cast<std::size_t>(g), 0);
    const std::function<void(int, int, unsigned)> rec = [&](int i, int left, unsigned degree) {
        if (i == g) {
            if (left != 0) {
                return;
            }
            const bool even = degree % 2 == 0;
            if (even != (wts.sigma_parity == parity::even)) {
                return;
            }
            monomial m;
            for (int j = 0; j < g; ++j) {
                if (exps[static_cast<std::size_t>(j)]) {
                    m = m * monomial::of(curve.u_id(j + 1), exps[static_cast<std::size_t>(j)]);
                }
            }
            terms.emplace_back(std::move(m), rational(1));
            return;
        }
        const int wi = wts.u[static_cast<std::size_t>(i)];
        for (unsigned e = 0; static_cast<int>(e) * wi <= left; ++e) {
            exps[static_cast<std::size_t>(i)] = e;
            rec(i + 1, left - static_cast<int>(e) * wi, degree + e);
        }
        exps[static_cast<std::size_t>(i)] = 0;
    };
    if (k >= 0) {
        rec(0, k, 0);
    }
    const auto all = sparse_poly::from_terms(curve.reg, std::move(terms));
    std::vector<monomial> out;
    for (const auto *t : all.canonical_terms()) {
        out.push_back(t->first);
    }
    return out;
}

std::size_t matrix_rank(std::vector<std::vector<rational>> rows)
{
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows.front().size();
    std::vector<std::vector<integer>> a;
    for (const auto &r : rows) {
        if (r.size() != cols) {
            throw usage_error("ragged matrix");
        }
        integer l = 1;
        for (const auto &x : r) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        }
        std::vector<integer> ir;
        for (const auto &x : r) {
            ir.push_back(x.get_num() * (l / x.get_den()));
        }
        a.push_back(std::move(ir));
    }
    std::size_t rank = 0;
    integer prev = 1;
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][c] == 0) {
            ++piv;
        }
        if (piv == a.size()) {
            continue;
        }
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                integer v = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

rank_report basis_rank(const curve_model &curve, const std::vector<std::pair<std::string, sparse_poly>> &basis,
                       int points, std::uint64_t seed)
{
    rank_report rep;
    rep.entries = basis.size();
    std::vector<const sparse_poly *> distinct;
    for (const auto &[name, f] : basis) {
        const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const auto *d) { return *d == f; });
        if (seen) {
            rep.duplicates.push_back(name);
        } else {
            distinct.push_back(&f);
        }
    }
    rep.distinct = distinct.size();
    point_sampler sampler(curve, seed);
    std::vector<std::vector<rational>> rows;
    for (int k = 0; k < points; ++k) {
        const auto pt = sampler.next();
        std::vector<rational> row;
        for (const auto *f : distinct) {
            row.push_back(evaluate_symbols(*f, pt));
        }
        rows.push_back(std::move(row));
    }
    rep.points = rows.size();
    rep.rank = matrix_rank(std::move(rows));
    return rep;
}

} // namespace trigonal
