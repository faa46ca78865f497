#include <trigonal/laurent_series.hpp>

#include <algorithm>
#include <vector>

#include <trigonal/errors.hpp>

namespace trigonal
{

namespace
{

int add_exp(int a, int b)
{
    if (a == laurent_series::exact || b == laurent_series::exact) {
        return laurent_series::exact;
    }
    return a + b;
}

// Product of two series keeping only exponents below limit; truncations of the inputs are ignored.
std::map<int, sparse_poly> raw_product(const std::map<int, sparse_poly> &a, const std::map<int, sparse_poly> &b,
                                       int limit)
{
    std::map<int, sparse_poly> out;
    for (const auto &[ka, ca] : a) {
        for (const auto &[kb, cb] : b) {
            const int k = ka + kb;
            if (limit != laurent_series::exact && k >= limit) {
                break;
            }
            auto prod = ca * cb;
            auto [it, inserted] = out.try_emplace(k, prod);
            if (!inserted) {
                it->second += prod;
            }
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
    return out;
}

std::map<int, sparse_poly> raw_truncate(std::map<int, sparse_poly> m, int limit)
{
    m.erase(m.lower_bound(limit), m.end());
    return m;
}

integer exact_root(const integer &x, unsigned n)
{
    integer r;
    if (x < 0) {
        if (n % 2 == 0) {
            throw usage_error("even root of a negative leading coefficient");
        }
        integer pos = -x;
        if (!mpz_root(r.get_mpz_t(), pos.get_mpz_t(), n)) {
            throw usage_error("leading coefficient has no rational root");
        }
        return -r;
    }
    if (!mpz_root(r.get_mpz_t(), x.get_mpz_t(), n)) {
        throw usage_error("leading coefficient has no rational root");
    }
    return r;
}

} // namespace

laurent_series::laurent_series(registry_ptr reg, int truncation) : m_reg(std::move(reg)), m_trunc(truncation) {}

laurent_series laurent_series::monomial(registry_ptr reg, const sparse_poly &c, int exponent, int truncation)
{
    laurent_series s(std::move(reg), truncation);
    s.set(exponent, c);
    return s;
}

laurent_series laurent_series::constant(const sparse_poly &c, int truncation)
{
    return monomial(c.reg(), c, 0, truncation);
}

std::optional<int> laurent_series::valuation() const
{
    if (m_coeffs.empty()) {
        return std::nullopt;
    }
    return m_coeffs.begin()->first;
}

sparse_poly laurent_series::coefficient(int k) const
{
    if (k >= m_trunc) {
        throw usage_error("coefficient of xi^" + std::to_string(k) + " lies beyond the truncation order");
    }
    if (auto it = m_coeffs.find(k); it != m_coeffs.end()) {
        return it->second;
    }
    return sparse_poly(m_reg);
}

void laurent_series::set(int k, sparse_poly c)
{
    if (k >= m_trunc) {
        return;
    }
    if (c.is_zero()) {
        m_coeffs.erase(k);
    } else {
        m_coeffs.insert_or_assign(k, std::move(c));
    }
}

laurent_series laurent_series::truncated(int truncation) const
{
    laurent_series r(m_reg, std::min(truncation, m_trunc));
    r.m_coeffs = raw_truncate(m_coeffs, r.m_trunc);
    return r;
}

void laurent_series::check_same_registry(const laurent_series &o) const
{
    if (m_reg && o.m_reg && m_reg != o.m_reg) {
        throw internal_error("series from different variable registries");
    }
}

laurent_series laurent_series::operator-() const
{
    return map([](const sparse_poly &c) { return -c; });
}

laurent_series &laurent_series::operator+=(const laurent_series &o)
{
    check_same_registry(o);
    if (!m_reg) {
        m_reg = o.m_reg;
    }
    m_trunc = std::min(m_trunc, o.m_trunc);
    m_coeffs = raw_truncate(std::move(m_coeffs), m_trunc);
    for (const auto &[k, c] : o.m_coeffs) {
        if (k >= m_trunc) {
            break;
        }
        auto [it, inserted] = m_coeffs.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                m_coeffs.erase(it);
            }
        }
    }
    return *this;
}

laurent_series &laurent_series::operator-=(const laurent_series &o)
{
    return *this += -o;
}

laurent_series operator*(const laurent_series &a, const laurent_series &b)
{
    a.check_same_registry(b);
    const auto reg = a.m_reg ? a.m_reg : b.m_reg;
    const int va = a.valuation().value_or(a.m_trunc);
    const int vb = b.valuation().value_or(b.m_trunc);
    int trunc = std::min(add_exp(va, b.m_trunc), add_exp(vb, a.m_trunc));
    laurent_series r(reg, trunc);
    r.m_coeffs = raw_product(a.m_coeffs, b.m_coeffs, trunc);
    return r;
}

laurent_series operator*(laurent_series a, const sparse_poly &c)
{
    if (c.is_zero()) {
        a.m_coeffs.clear();
        return a;
    }
    for (auto it = a.m_coeffs.begin(); it != a.m_coeffs.end();) {
        it->second = it->second * c;
        it = it->second.is_zero() ? a.m_coeffs.erase(it) : std::next(it);
    }
    return a;
}

laurent_series operator*(laurent_series a, const rational &c)
{
    if (c == 0) {
        a.m_coeffs.clear();
        return a;
    }
    for (auto &[k, v] : a.m_coeffs) {
        v *= c;
    }
    return a;
}

laurent_series laurent_series::shifted(int k) const
{
    laurent_series r(m_reg, add_exp(m_trunc, k));
    for (const auto &[e, c] : m_coeffs) {
        r.m_coeffs.emplace(e + k, c);
    }
    return r;
}

laurent_series laurent_series::pow(unsigned e) const
{
    laurent_series result = constant(sparse_poly::constant(m_reg, 1));
    laurent_series base = *this;
    while (e) {
        if (e & 1u) {
            result = result * base;
        }
        e >>= 1;
        if (e) {
            base = base * base;
        }
    }
    return result;
}

namespace
{

// Leading coefficient as a rational, with the remaining series normalized to start 1 + O(xi).
struct unit_split {
    int valuation;
    rational lead;
    std::map<int, sparse_poly> unit;
    int precision;
};

unit_split split_unit(const laurent_series &s, const char *what)
{
    const auto v = s.valuation();
    if (!v) {
        throw usage_error(std::string(what) + " of a series with no known nonzero term");
    }
    if (s.is_exact()) {
        throw usage_error(std::string(what) + " of an exact series needs a truncation order");
    }
    const auto lead = s.coefficient(*v).constant_value();
    if (!lead) {
        throw usage_error(std::string(what) + " needs a rational leading coefficient");
    }
    unit_split out{*v, *lead, {}, s.truncation() - *v};
    const rational inv = 1 / *lead;
    for (const auto &[k, c] : s.coefficients()) {
        out.unit.emplace(k - *v, c * inv);
    }
    return out;
}

// Newton iteration for A^(-1/n) where A = 1 + O(xi), to the given precision.
std::map<int, sparse_poly> inverse_root(const registry_ptr &reg, const std::map<int, sparse_poly> &a, unsigned n,
                                        int precision)
{
    std::map<int, sparse_poly> y;
    y.emplace(0, sparse_poly::constant(reg, 1));
    const rational inv_n(1, n);
    int prec = 1;
    while (prec < precision) {
        prec = std::min(2 * prec, precision);
        auto yn = y;
        for (unsigned i = 1; i < n; ++i) {
            yn = raw_product(yn, y, prec);
        }
        auto ayn = raw_product(raw_truncate(a, prec), yn, prec);
        // y <- y + y (1 - A y^n) / n
        std::map<int, sparse_poly> err;
        for (auto &[k, c] : ayn) {
            if (k == 0) {
                c -= sparse_poly::constant(reg, 1);
            }
            if (!c.is_zero()) {
                err.emplace(k, -c * inv_n);
            }
        }
        auto corr = raw_product(y, err, prec);
        for (auto &[k, c] : corr) {
            auto [it, inserted] = y.try_emplace(k, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) {
                    y.erase(it);
                }
            }
        }
    }
    return raw_truncate(std::move(y), precision);
}

} // namespace

laurent_series laurent_series::inverse() const
{
    const auto u = split_unit(*this, "inverse");
    auto y = inverse_root(m_reg, u.unit, 1, u.precision);
    laurent_series r(m_reg, u.precision);
    const rational inv = 1 / u.lead;
    for (auto &[k, c] : y) {
        r.m_coeffs.emplace(k, c * inv);
    }
    return r.shifted(-u.valuation);
}

laurent_series laurent_series::nth_root(unsigned n) const
{
    if (n == 0) {
        throw usage_error("zeroth root");
    }
    const auto u = split_unit(*this, "root");
    if (u.valuation % static_cast<int>(n) != 0) {
        throw usage_error("root of a series whose valuation is not divisible by the root order");
    }
    const rational lead_root(exact_root(u.lead.get_num(), n), exact_root(u.lead.get_den(), n));
    // A^(1/n) = A * A^(-1/n)^(n-1)
    auto s = inverse_root(m_reg, u.unit, n, u.precision);
    auto r = raw_truncate(u.unit, u.precision);
    for (unsigned i = 1; i < n; ++i) {
        r = raw_product(r, s, u.precision);
    }
    laurent_series out(m_reg, u.precision);
    for (auto &[k, c] : r) {
        out.m_coeffs.emplace(k, c * lead_root);
    }
    return out.shifted(u.valuation / static_cast<int>(n));
}

laurent_series laurent_series::integrate() const
{
    laurent_series r(m_reg, add_exp(m_trunc, 1));
    for (const auto &[k, c] : m_coeffs) {
        if (k == -1) {
            throw usage_error("integrating a xi^-1 term leaves the series ring");
        }
        r.m_coeffs.emplace(k + 1, c * rational(1, k + 1));
    }
    return r;
}

laurent_series laurent_series::derivative() const
{
    laurent_series r(m_reg, add_exp(m_trunc, -1));
    for (const auto &[k, c] : m_coeffs) {
        if (k != 0) {
            r.m_coeffs.emplace(k - 1, c * rational(k));
        }
    }
    return r;
}

laurent_series substitute_series(const sparse_poly &p, const std::map<var_id, laurent_series> &values)
{
    const auto &reg = p.reg();
    std::map<std::pair<var_id, unsigned>, laurent_series> powers;
    const auto power = [&](var_id v, unsigned e) -> const laurent_series & {
        auto key = std::make_pair(v, e);
        if (auto it = powers.find(key); it != powers.end()) {
            return it->second;
        }
        const auto &base = values.at(v);
        laurent_series value = e == 1 ? base : base * powers.find({v, e - 1}) ->second;
        return powers.emplace(key, std::move(value)).first->second;
    };
    laurent_series total(reg, laurent_series::exact);
    for (const auto &[m, c] : p.terms()) {
        trigonal::monomial rest;
        laurent_series term = laurent_series::constant(sparse_poly::constant(reg, c));
        for (std::size_t i = 0; i < m.size(); ++i) {
            const auto v = m.var_at(i);
            const auto e = m.exp_at(i);
            if (values.count(v)) {
                for (unsigned k = 1; k <= e; ++k) {
                    power(v, k);
                }
                term = term * power(v, e);
            } else {
                rest = rest * trigonal::monomial::of(v, e);
            }
        }
        if (!rest.is_one()) {
            term = term * sparse_poly::from_terms(reg, {{rest, rational(1)}});
        }
        total += term;
    }
    return total;
}

std::string to_string(const laurent_series &s)
{
    std::string out;
    for (const auto &[k, c] : s.coefficients()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + to_string(c) + ")*xi^" + std::to_string(k);
    }
    if (!s.is_exact()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "O(xi^" + std::to_string(s.truncation()) + ")";
    }
    return out.empty() ? "0" : out;
}

} // namespace trigonal
