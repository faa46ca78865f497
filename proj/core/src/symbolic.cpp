#include <trigonal/symbolic.hpp>

#include <algorithm>

#include <trigonal/errors.hpp>

namespace trigonal
{

sparse_poly differentiate_symbols(const sparse_poly &p, int k)
{
    const auto &reg = p.reg();
    std::vector<sparse_poly::term> out;
    for (const auto &[m, c] : p.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            const auto v = m.var_at(i);
            const auto &var = reg->var(v);
            if (var.kind == var_kind::q || var.kind == var_kind::u) {
                throw usage_error("cannot differentiate '" + to_string(var) + "' symbolically");
            }
            if (var.kind != var_kind::wp) {
                continue;
            }
            auto idx = var.indices;
            idx.push_back(k);
            const auto d = reg->intern(make_wp(std::move(idx), var.point));
            const auto e = m.exp_at(i);
            auto nm = m.with_exponent(v, e - 1) * monomial::of(d);
            out.emplace_back(std::move(nm), c * e);
        }
    }
    return sparse_poly::from_terms(reg, std::move(out));
}

sparse_poly cross_differentiate(const sparse_poly &a, const sparse_poly &b, int i, int j)
{
    return differentiate_symbols(a, i) - differentiate_symbols(b, j);
}

sparse_poly drop_lambda(const sparse_poly &p)
{
    const auto &reg = p.reg();
    return p.drop_terms_with([&](var_id v) { return reg->var(v).kind == var_kind::lam; });
}

std::pair<sparse_poly, sparse_poly> parity_split(const sparse_poly &p)
{
    const auto &reg = *p.reg();
    for (const auto &t : p.terms()) {
        if (parity_of(reg, t.first) == parity::none) {
            throw usage_error("term " + monomial_to_string(reg, t.first) + " has no parity");
        }
    }
    auto even = p.filter([&](const auto &t) { return parity_of(reg, t.first) == parity::even; });
    auto odd = p.filter([&](const auto &t) { return parity_of(reg, t.first) == parity::odd; });
    return {std::move(even), std::move(odd)};
}

namespace
{

sparse_poly wp(const registry_ptr &reg, std::vector<int> idx, eval_point pt)
{
    return sparse_poly::var(reg, make_wp(std::move(idx), pt));
}

} // namespace

sparse_poly q_expansion(const registry_ptr &reg, const std::vector<int> &s, eval_point pt)
{
    if (s.size() == 2) {
        return wp(reg, s, pt);
    }
    if (s.size() == 4) {
        const int i = s[0], j = s[1], k = s[2], l = s[3];
        return wp(reg, s, pt)
               - rational(2)
                     * (wp(reg, {i, j}, pt) * wp(reg, {k, l}, pt) + wp(reg, {i, k}, pt) * wp(reg, {j, l}, pt)
                        + wp(reg, {i, l}, pt) * wp(reg, {j, k}, pt));
    }
    if (s.size() != 6) {
        throw usage_error("Q expansions are available for 2, 4 and 6 indices");
    }
    // -2 * (all pair x complementary quadruple) + 4 * (all perfect matchings)
    sparse_poly pairs(reg), matchings(reg);
    for (std::size_t a = 0; a < 6; ++a) {
        for (std::size_t b = a + 1; b < 6; ++b) {
            std::vector<int> rest;
            for (std::size_t c = 0; c < 6; ++c) {
                if (c != a && c != b) {
                    rest.push_back(s[c]);
                }
            }
            pairs += wp(reg, {s[a], s[b]}, pt) * wp(reg, rest, pt);
        }
    }
    for (std::size_t b = 1; b < 6; ++b) {
        std::vector<std::size_t> rest;
        for (std::size_t c = 1; c < 6; ++c) {
            if (c != b) {
                rest.push_back(c);
            }
        }
        const auto first = wp(reg, {s[0], s[b]}, pt);
        const auto pick = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t w) {
            return wp(reg, {s[x], s[y]}, pt) * wp(reg, {s[z], s[w]}, pt);
        };
        matchings += first
                     * (pick(rest[0], rest[1], rest[2], rest[3]) + pick(rest[0], rest[2], rest[1], rest[3])
                        + pick(rest[0], rest[3], rest[1], rest[2]));
    }
    return wp(reg, s, pt) - rational(2) * pairs + rational(4) * matchings;
}

std::vector<var_id> abelian_symbols(const sparse_poly &p)
{
    std::vector<var_id> out;
    for (auto v : p.variables()) {
        if (p.reg()->var(v).is_abelian()) {
            out.push_back(v);
        }
    }
    return out;
}

std::size_t max_symbol_order(const sparse_poly &p)
{
    std::size_t best = 0;
    for (auto v : abelian_symbols(p)) {
        best = std::max(best, p.reg()->var(v).indices.size());
    }
    return best;
}

} // namespace trigonal
