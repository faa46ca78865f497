#include <trigonal/curve.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>

#include <trigonal/errors.hpp>

namespace trigonal
{

std::string curve_id::str() const
{
    return std::to_string(n) + "," + std::to_string(s);
}

curve_id parse_curve_id(std::string_view text)
{
    const auto sep = text.find_first_of(",-");
    curve_id id{0, 0};
    const auto parse = [&](std::string_view piece, int &out) {
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), out);
        if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
            throw usage_error("malformed curve '" + std::string(text) + "', expected n,s");
        }
    };
    if (sep == std::string_view::npos) {
        throw usage_error("malformed curve '" + std::string(text) + "', expected n,s");
    }
    parse(text.substr(0, sep), id.n);
    parse(text.substr(sep + 1), id.s);
    check_curve_id(id);
    return id;
}

void check_curve_id(curve_id id)
{
    if (id.n < 2 || id.s <= id.n) {
        throw usage_error("curve (" + id.str() + ") needs s > n >= 2");
    }
    if (std::gcd(id.n, id.s) != 1) {
        throw usage_error("curve (" + id.str() + ") needs coprime n and s");
    }
    if (id.n > 10 || id.s > 40) {
        throw usage_error("curve (" + id.str() + ") is outside the supported range");
    }
}

int curve_genus(curve_id id)
{
    return (id.n - 1) * (id.s - 1) / 2;
}

std::vector<int> gap_sequence(int n, int s)
{
    check_curve_id({n, s});
    // Every integer >= (n-1)(s-1) is representable.
    const int bound = (n - 1) * (s - 1);
    std::vector<bool> rep(static_cast<std::size_t>(bound + 1), false);
    for (int a = 0; a * n <= bound; ++a) {
        for (int b = 0; a * n + b * s <= bound; ++b) {
            rep[static_cast<std::size_t>(a * n + b * s)] = true;
        }
    }
    std::vector<int> gaps;
    for (int k = 1; k <= bound; ++k) {
        if (!rep[static_cast<std::size_t>(k)]) {
            gaps.push_back(k);
        }
    }
    return gaps;
}

sato_weights compute_sato_weights(curve_id id)
{
    sato_weights w;
    const auto gaps = gap_sequence(id.n, id.s);
    w.u.assign(gaps.rbegin(), gaps.rend());
    for (int j = 0; j < id.s; ++j) {
        w.lambda.push_back(-id.n * (id.s - j));
    }
    w.x = -id.n;
    w.y = -id.s;
    w.sigma = (id.n * id.n - 1) * (id.s * id.s - 1) / 24;
    w.sigma_parity = w.sigma % 2 ? parity::odd : parity::even;
    return w;
}

registry_ptr make_curve_registry(curve_id id)
{
    const auto w = compute_sato_weights(id);
    weight_table t;
    t.genus = curve_genus(id);
    t.u_weights = w.u;
    t.lambda_weights = w.lambda;
    t.x_weight = w.x;
    t.y_weight = w.y;
    t.strict = true;
    auto reg = make_registry(t);
    // Fixed interning order keeps internal ids identical across runs.
    for (auto k : {var_kind::z, var_kind::w, var_kind::x, var_kind::y}) {
        reg->intern(make_plain(k));
    }
    for (int i = 1; i <= t.genus; ++i) {
        reg->intern(make_u(i));
    }
    for (int j = 0; j < id.s; ++j) {
        reg->intern(make_lambda(j));
    }
    return reg;
}

curve_model make_curve(curve_id id)
{
    check_curve_id(id);
    curve_model c;
    c.id = id;
    c.genus = curve_genus(id);
    c.gaps = gap_sequence(id.n, id.s);
    c.weights = compute_sato_weights(id);
    c.reg = make_curve_registry(id);

    const auto x = sparse_poly::var(c.reg, c.x_id());
    const auto y = sparse_poly::var(c.reg, c.y_id());
    sparse_poly rhs = x.pow(static_cast<unsigned>(id.s));
    for (int j = 0; j < id.s; ++j) {
        rhs += sparse_poly::var(c.reg, c.lambda_id(j)) * x.pow(static_cast<unsigned>(j));
    }
    c.equation = y.pow(static_cast<unsigned>(id.n)) - rhs;

    // Holomorphic numerators x^a y^b (b <= n-2) of pole order na + sb <= 2g-2, by ascending pole order.
    std::vector<std::pair<int, std::pair<int, int>>> monos;
    for (int b = 0; b <= id.n - 2; ++b) {
        for (int a = 0; id.n * a + id.s * b <= 2 * c.genus - 2; ++a) {
            monos.push_back({id.n * a + id.s * b, {a, b}});
        }
    }
    std::sort(monos.begin(), monos.end());
    if (static_cast<int>(monos.size()) != c.genus) {
        throw internal_error("holomorphic basis size differs from the genus");
    }
    for (std::size_t i = 0; i < monos.size(); ++i) {
        const auto [a, b] = monos[i].second;
        c.g.push_back(x.pow(static_cast<unsigned>(a)) * y.pow(static_cast<unsigned>(b)));
        if (2 * c.genus - 1 - monos[i].first != c.weights.u[i]) {
            throw internal_error("holomorphic numerator order disagrees with the gap sequence");
        }
    }
    return c;
}

var_id curve_model::x_id() const
{
    return *reg->find(make_plain(var_kind::x));
}
var_id curve_model::y_id() const
{
    return *reg->find(make_plain(var_kind::y));
}
var_id curve_model::z_id() const
{
    return *reg->find(make_plain(var_kind::z));
}
var_id curve_model::w_id() const
{
    return *reg->find(make_plain(var_kind::w));
}
var_id curve_model::u_id(int i) const
{
    return reg->intern(make_u(i));
}
var_id curve_model::lambda_id(int j) const
{
    return reg->intern(make_lambda(j));
}

sparse_poly swap_points(const curve_model &c, const sparse_poly &p)
{
    const auto x = c.x_id(), y = c.y_id(), z = c.z_id(), w = c.w_id();
    std::vector<sparse_poly::term> out;
    out.reserve(p.size());
    for (const auto &[m, coef] : p.terms()) {
        monomial nm;
        for (std::size_t i = 0; i < m.size(); ++i) {
            auto v = m.var_at(i);
            v = v == x ? z : v == z ? x : v == y ? w : v == w ? y : v;
            nm = nm * monomial::of(v, m.exp_at(i));
        }
        out.emplace_back(std::move(nm), coef);
    }
    return sparse_poly::from_terms(c.reg, std::move(out));
}

} // namespace trigonal
