#include <trigonal/sparse_poly.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include <trigonal/errors.hpp>

namespace trigonal
{

monomial monomial::of(var_id v, unsigned exp)
{
    monomial m;
    if (exp == 0) {
        return m;
    }
    if (exp > max_exponent) {
        throw std::overflow_error("monomial exponent overflow");
    }
    m.m_packed.push_back((v << 16) | exp);
    return m;
}

unsigned monomial::exponent(var_id v) const noexcept
{
    for (auto p : m_packed) {
        if ((p >> 16) == v) {
            return p & 0xFFFFu;
        }
    }
    return 0;
}

unsigned monomial::total_degree() const noexcept
{
    unsigned d = 0;
    for (auto p : m_packed) {
        d += p & 0xFFFFu;
    }
    return d;
}

monomial monomial::operator*(const monomial &other) const
{
    monomial r;
    r.m_packed.reserve(m_packed.size() + other.m_packed.size());
    std::size_t i = 0, j = 0;
    while (i < m_packed.size() && j < other.m_packed.size()) {
        const auto a = m_packed[i] >> 16, b = other.m_packed[j] >> 16;
        if (a < b) {
            r.m_packed.push_back(m_packed[i++]);
        } else if (b < a) {
            r.m_packed.push_back(other.m_packed[j++]);
        } else {
            const unsigned e = (m_packed[i] & 0xFFFFu) + (other.m_packed[j] & 0xFFFFu);
            if (e > max_exponent) {
                throw std::overflow_error("monomial exponent overflow");
            }
            r.m_packed.push_back((a << 16) | e);
            ++i;
            ++j;
        }
    }
    r.m_packed.insert(r.m_packed.end(), m_packed.begin() + static_cast<std::ptrdiff_t>(i), m_packed.end());
    r.m_packed.insert(r.m_packed.end(), other.m_packed.begin() + static_cast<std::ptrdiff_t>(j),
                      other.m_packed.end());
    return r;
}

monomial monomial::with_exponent(var_id v, unsigned exp) const
{
    if (exp > max_exponent) {
        throw std::overflow_error("monomial exponent overflow");
    }
    monomial r;
    bool placed = false;
    for (auto p : m_packed) {
        const auto id = p >> 16;
        if (!placed && id >= v) {
            placed = true;
            if (exp) {
                r.m_packed.push_back((v << 16) | exp);
            }
            if (id == v) {
                continue;
            }
        }
        r.m_packed.push_back(p);
    }
    if (!placed && exp) {
        r.m_packed.push_back((v << 16) | exp);
    }
    return r;
}

monomial monomial::without(var_id v) const
{
    return with_exponent(v, 0);
}

std::size_t monomial::hash() const noexcept
{
    return boost::hash_range(m_packed.begin(), m_packed.end());
}

sparse_poly::sparse_poly(registry_ptr reg) : m_reg(std::move(reg)) {}

sparse_poly sparse_poly::constant(registry_ptr reg, const rational &c)
{
    sparse_poly p(std::move(reg));
    if (c != 0) {
        p.m_terms.emplace_back(monomial{}, c);
    }
    return p;
}

sparse_poly sparse_poly::var(registry_ptr reg, var_id v, unsigned exp)
{
    sparse_poly p(std::move(reg));
    p.m_terms.emplace_back(monomial::of(v, exp), rational(1));
    return p;
}

sparse_poly sparse_poly::var(registry_ptr reg, const variable &v, unsigned exp)
{
    const auto id = reg->intern(v);
    return var(std::move(reg), id, exp);
}

sparse_poly sparse_poly::from_terms(registry_ptr reg, std::vector<term> terms)
{
    sparse_poly p(std::move(reg));
    p.m_terms = std::move(terms);
    p.normalize();
    return p;
}

void sparse_poly::normalize()
{
    std::sort(m_terms.begin(), m_terms.end(), [](const term &a, const term &b) { return a.first < b.first; });
    std::vector<term> merged;
    merged.reserve(m_terms.size());
    for (auto &t : m_terms) {
        if (!merged.empty() && merged.back().first == t.first) {
            merged.back().second += t.second;
        } else {
            if (!merged.empty() && merged.back().second == 0) {
                merged.pop_back();
            }
            merged.push_back(std::move(t));
        }
    }
    if (!merged.empty() && merged.back().second == 0) {
        merged.pop_back();
    }
    m_terms = std::move(merged);
}

void sparse_poly::check_same_registry(const sparse_poly &o) const
{
    if (m_reg && o.m_reg && m_reg != o.m_reg) {
        throw internal_error("polynomials from different variable registries");
    }
}

std::optional<rational> sparse_poly::constant_value() const
{
    if (m_terms.empty()) {
        return rational(0);
    }
    if (m_terms.size() == 1 && m_terms[0].first.is_one()) {
        return m_terms[0].second;
    }
    return std::nullopt;
}

rational sparse_poly::coefficient(const monomial &m) const
{
    auto it = std::lower_bound(m_terms.begin(), m_terms.end(), m,
                               [](const term &t, const monomial &k) { return t.first < k; });
    if (it != m_terms.end() && it->first == m) {
        return it->second;
    }
    return 0;
}

sparse_poly sparse_poly::operator-() const
{
    sparse_poly r = *this;
    for (auto &t : r.m_terms) {
        t.second = -t.second;
    }
    return r;
}

namespace
{

template <class Op>
std::vector<sparse_poly::term> merge_terms(const std::vector<sparse_poly::term> &a,
                                           const std::vector<sparse_poly::term> &b, Op op)
{
    std::vector<sparse_poly::term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, op(rational(0), b[j].second));
            ++j;
        } else {
            rational c = op(a[i].second, b[j].second);
            if (c != 0) {
                out.emplace_back(a[i].first, std::move(c));
            }
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

sparse_poly &sparse_poly::operator+=(const sparse_poly &o)
{
    check_same_registry(o);
    if (!m_reg) {
        m_reg = o.m_reg;
    }
    m_terms = merge_terms(m_terms, o.m_terms, [](const rational &x, const rational &y) { return rational(x + y); });
    return *this;
}

sparse_poly &sparse_poly::operator-=(const sparse_poly &o)
{
    check_same_registry(o);
    if (!m_reg) {
        m_reg = o.m_reg;
    }
    m_terms = merge_terms(m_terms, o.m_terms, [](const rational &x, const rational &y) { return rational(x - y); });
    return *this;
}

sparse_poly &sparse_poly::operator*=(const sparse_poly &o)
{
    *this = *this * o;
    return *this;
}

sparse_poly &sparse_poly::operator*=(const rational &c)
{
    if (c == 0) {
        m_terms.clear();
        return *this;
    }
    for (auto &t : m_terms) {
        t.second *= c;
    }
    return *this;
}

sparse_poly operator*(const sparse_poly &a, const sparse_poly &b)
{
    a.check_same_registry(b);
    sparse_poly r(a.m_reg ? a.m_reg : b.m_reg);
    if (a.is_zero() || b.is_zero()) {
        return r;
    }
    if (a.size() == 1) {
        return b.mul_monomial(a.m_terms[0].first, a.m_terms[0].second);
    }
    if (b.size() == 1) {
        return a.mul_monomial(b.m_terms[0].first, b.m_terms[0].second);
    }
    std::unordered_map<monomial, rational, monomial_hash> acc;
    acc.reserve(a.size() * b.size());
    rational prod;
    for (const auto &[ma, ca] : a.m_terms) {
        for (const auto &[mb, cb] : b.m_terms) {
            prod = ca * cb;
            auto [it, inserted] = acc.try_emplace(ma * mb, prod);
            if (!inserted) {
                it->second += prod;
            }
        }
    }
    r.m_terms.reserve(acc.size());
    for (auto &[m, c] : acc) {
        if (c != 0) {
            r.m_terms.emplace_back(m, std::move(c));
        }
    }
    std::sort(r.m_terms.begin(), r.m_terms.end(),
              [](const sparse_poly::term &x, const sparse_poly::term &y) { return x.first < y.first; });
    return r;
}

bool operator==(const sparse_poly &a, const sparse_poly &b)
{
    return a.m_terms == b.m_terms;
}

sparse_poly sparse_poly::pow(unsigned e) const
{
    sparse_poly result = constant(m_reg, 1);
    sparse_poly base = *this;
    while (e) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1;
        if (e) {
            base = base * base;
        }
    }
    return result;
}

sparse_poly sparse_poly::mul_monomial(const monomial &m, const rational &c) const
{
    sparse_poly r(m_reg);
    if (c == 0) {
        return r;
    }
    r.m_terms.reserve(m_terms.size());
    for (const auto &[mm, cc] : m_terms) {
        r.m_terms.emplace_back(mm * m, cc * c);
    }
    if (!m.is_one()) {
        std::sort(r.m_terms.begin(), r.m_terms.end(),
                  [](const term &x, const term &y) { return x.first < y.first; });
    }
    return r;
}

bool sparse_poly::depends_on(var_id v) const
{
    return std::any_of(m_terms.begin(), m_terms.end(), [&](const term &t) { return t.first.exponent(v) > 0; });
}

unsigned sparse_poly::degree_in(var_id v) const
{
    unsigned d = 0;
    for (const auto &t : m_terms) {
        d = std::max(d, t.first.exponent(v));
    }
    return d;
}

std::vector<sparse_poly> sparse_poly::coefficients_in(var_id v) const
{
    std::vector<std::vector<term>> buckets(degree_in(v) + 1);
    for (const auto &[m, c] : m_terms) {
        const auto e = m.exponent(v);
        buckets[e].emplace_back(e ? m.without(v) : m, c);
    }
    std::vector<sparse_poly> out;
    out.reserve(buckets.size());
    for (auto &b : buckets) {
        out.push_back(from_terms(m_reg, std::move(b)));
    }
    return out;
}

sparse_poly sparse_poly::differentiate(var_id v) const
{
    std::vector<term> out;
    for (const auto &[m, c] : m_terms) {
        const auto e = m.exponent(v);
        if (e) {
            out.emplace_back(m.with_exponent(v, e - 1), c * e);
        }
    }
    return from_terms(m_reg, std::move(out));
}

sparse_poly sparse_poly::substitute(var_id v, const sparse_poly &value) const
{
    check_same_registry(value);
    const auto coeffs = coefficients_in(v);
    // Horner in v.
    sparse_poly r(m_reg);
    for (auto k = coeffs.size(); k-- > 0;) {
        r = r * value;
        r += coeffs[k];
    }
    return r;
}

sparse_poly sparse_poly::drop_terms_with(const std::function<bool(var_id)> &pred) const
{
    return filter([&](const term &t) {
        for (std::size_t i = 0; i < t.first.size(); ++i) {
            if (pred(t.first.var_at(i))) {
                return false;
            }
        }
        return true;
    });
}

sparse_poly sparse_poly::filter(const std::function<bool(const term &)> &pred) const
{
    sparse_poly r(m_reg);
    for (const auto &t : m_terms) {
        if (pred(t)) {
            r.m_terms.push_back(t);
        }
    }
    return r;
}

rational sparse_poly::evaluate(const std::function<rational(var_id)> &value) const
{
    std::unordered_map<var_id, rational> cache;
    const auto get = [&](var_id v) -> const rational & {
        auto it = cache.find(v);
        if (it == cache.end()) {
            it = cache.emplace(v, value(v)).first;
        }
        return it->second;
    };
    rational total = 0;
    rational term_value;
    mpz_class num, den;
    for (const auto &[m, c] : m_terms) {
        term_value = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const auto &x = get(m.var_at(i));
            const auto e = m.exp_at(i);
            mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), e);
            mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), e);
            term_value *= rational(num, den);
        }
        total += term_value;
    }
    return total;
}

std::vector<var_id> sparse_poly::variables() const
{
    std::set<var_id> vs;
    for (const auto &t : m_terms) {
        for (std::size_t i = 0; i < t.first.size(); ++i) {
            vs.insert(t.first.var_at(i));
        }
    }
    return {vs.begin(), vs.end()};
}

unsigned sparse_poly::total_degree() const
{
    unsigned d = 0;
    for (const auto &t : m_terms) {
        d = std::max(d, t.first.total_degree());
    }
    return d;
}

std::vector<const sparse_poly::term *> sparse_poly::canonical_terms() const
{
    std::vector<const term *> out;
    out.reserve(m_terms.size());
    for (const auto &t : m_terms) {
        out.push_back(&t);
    }
    if (!m_reg) {
        return out;
    }
    const auto ranks = m_reg->canonical_ranks();
    // Exponent vector in canonical variable order, compared lexicographically.
    const auto key = [&](const monomial &m) {
        std::vector<std::pair<std::uint32_t, unsigned>> k;
        k.reserve(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            k.emplace_back(ranks[m.var_at(i)], m.exp_at(i));
        }
        std::sort(k.begin(), k.end());
        return k;
    };
    std::vector<std::pair<std::vector<std::pair<std::uint32_t, unsigned>>, const term *>> keyed;
    keyed.reserve(out.size());
    for (auto *t : out) {
        keyed.emplace_back(key(t->first), t);
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) {
        const auto da = a.second->first.total_degree(), db = b.second->first.total_degree();
        if (da != db) {
            return da > db;
        }
        // Lex: the monomial with the larger exponent on the earliest differing variable first.
        const auto &ka = a.first, &kb = b.first;
        std::size_t i = 0;
        for (; i < ka.size() && i < kb.size(); ++i) {
            if (ka[i].first != kb[i].first) {
                return ka[i].first < kb[i].first;
            }
            if (ka[i].second != kb[i].second) {
                return ka[i].second > kb[i].second;
            }
        }
        return i < ka.size() && i == kb.size();
    });
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        out[i] = keyed[i].second;
    }
    return out;
}

rational sparse_poly::primitive_scale() const
{
    if (m_terms.empty()) {
        return 1;
    }
    mpz_class g = 0, l = 1;
    for (const auto &[m, c] : m_terms) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    rational s = make_rational(l, abs(g));
    if (canonical_terms().front()->second < 0) {
        s = -s;
    }
    return s;
}

int weight_of(const registry &reg, const monomial &m)
{
    int w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        w += reg.weight(m.var_at(i)) * static_cast<int>(m.exp_at(i));
    }
    return w;
}

std::optional<int> homogeneous_weight(const sparse_poly &p)
{
    if (p.is_zero()) {
        return std::nullopt;
    }
    const auto &reg = *p.reg();
    const int w = weight_of(reg, p.terms().front().first);
    for (const auto &t : p.terms()) {
        if (weight_of(reg, t.first) != w) {
            return std::nullopt;
        }
    }
    return w;
}

std::vector<const sparse_poly::term *> weight_violations(const sparse_poly &p, int expected)
{
    std::vector<const sparse_poly::term *> bad;
    for (const auto *t : p.canonical_terms()) {
        if (weight_of(*p.reg(), t->first) != expected) {
            bad.push_back(t);
        }
    }
    return bad;
}

parity parity_of(const registry &reg, const monomial &m)
{
    unsigned odd = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        switch (reg.parity_of(m.var_at(i))) {
            case parity::none:
                return parity::none;
            case parity::odd:
                odd += m.exp_at(i);
                break;
            case parity::even:
                break;
        }
    }
    return odd % 2 ? parity::odd : parity::even;
}

sparse_poly transfer(const sparse_poly &p, const registry_ptr &target)
{
    if (p.reg() == target) {
        return p;
    }
    std::unordered_map<var_id, var_id> map;
    std::vector<sparse_poly::term> out;
    out.reserve(p.size());
    for (const auto &[m, c] : p.terms()) {
        monomial nm;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const auto v = m.var_at(i);
            auto it = map.find(v);
            if (it == map.end()) {
                it = map.emplace(v, target->intern(p.reg()->var(v))).first;
            }
            nm = nm * monomial::of(it->second, m.exp_at(i));
        }
        out.emplace_back(std::move(nm), c);
    }
    return sparse_poly::from_terms(target, std::move(out));
}

std::string monomial_to_string(const registry &reg, const monomial &m)
{
    if (m.is_one()) {
        return "1";
    }
    std::vector<std::pair<variable, unsigned>> factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
        factors.emplace_back(reg.var(m.var_at(i)), m.exp_at(i));
    }
    std::sort(factors.begin(), factors.end(),
              [](const auto &a, const auto &b) { return canonical_compare(a.first, b.first) < 0; });
    std::string out;
    for (const auto &[v, e] : factors) {
        if (!out.empty()) {
            out += '*';
        }
        out += to_string(v);
        if (e != 1) {
            out += '^' + std::to_string(e);
        }
    }
    return out;
}

std::string to_string(const sparse_poly &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto *t : p.canonical_terms()) {
        const auto &[m, c] = *t;
        rational mag = abs(c);
        if (first) {
            if (c < 0) {
                out += '-';
            }
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += monomial_to_string(*p.reg(), m);
        } else {
            out += to_string(mag) + '*' + monomial_to_string(*p.reg(), m);
        }
    }
    return out;
}

std::optional<rational> proportionality(const sparse_poly &p, const sparse_poly &q)
{
    if (p.is_zero() || q.is_zero() || p.size() != q.size()) {
        return std::nullopt;
    }
    const rational c = p.terms().front().second / q.terms().front().second;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(p.terms()[i].first == q.terms()[i].first) || p.terms()[i].second != c * q.terms()[i].second) {
            return std::nullopt;
        }
    }
    return c;
}

} // namespace trigonal
