#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include <trigonal/rational.hpp>
#include <trigonal/variables.hpp>

namespace trigonal
{

// Product of variables with 16-bit exponents, stored sparsely and sorted by variable id.
class monomial
{
public:
    static constexpr unsigned max_exponent = 0xFFFFu;

    monomial() = default;
    static monomial of(var_id v, unsigned exp = 1);

    unsigned exponent(var_id v) const noexcept;
    unsigned total_degree() const noexcept;
    bool is_one() const noexcept
    {
        return m_packed.empty();
    }
    std::size_t size() const noexcept
    {
        return m_packed.size();
    }

    var_id var_at(std::size_t i) const noexcept
    {
        return m_packed[i] >> 16;
    }
    unsigned exp_at(std::size_t i) const noexcept
    {
        return m_packed[i] & 0xFFFFu;
    }

    // Throws std::overflow_error when an exponent exceeds max_exponent.
    monomial operator*(const monomial &other) const;
    monomial with_exponent(var_id v, unsigned exp) const;
    monomial without(var_id v) const;

    std::size_t hash() const noexcept;

    friend bool operator==(const monomial &, const monomial &) = default;
    // Internal storage order only (lexicographic on packed entries).
    friend bool operator<(const monomial &a, const monomial &b) noexcept
    {
        return a.m_packed < b.m_packed;
    }

private:
    boost::container::small_vector<std::uint32_t, 6> m_packed;
};

struct monomial_hash {
    std::size_t operator()(const monomial &m) const noexcept
    {
        return m.hash();
    }
};

// Exact sparse multivariate polynomial over the rationals. Terms carry no zero coefficients
// and are kept sorted by the internal monomial order; canonical (graded lex) order is applied
// on output.
class sparse_poly
{
public:
    using term = std::pair<monomial, rational>;

    sparse_poly() = default;
    explicit sparse_poly(registry_ptr reg);

    static sparse_poly constant(registry_ptr reg, const rational &c);
    static sparse_poly var(registry_ptr reg, var_id v, unsigned exp = 1);
    static sparse_poly var(registry_ptr reg, const variable &v, unsigned exp = 1);
    // Takes ownership of arbitrary terms; merges duplicates and drops zeros.
    static sparse_poly from_terms(registry_ptr reg, std::vector<term> terms);

    const registry_ptr &reg() const noexcept
    {
        return m_reg;
    }
    const std::vector<term> &terms() const noexcept
    {
        return m_terms;
    }
    std::size_t size() const noexcept
    {
        return m_terms.size();
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    std::optional<rational> constant_value() const;
    rational coefficient(const monomial &m) const;

    sparse_poly operator-() const;
    sparse_poly &operator+=(const sparse_poly &o);
    sparse_poly &operator-=(const sparse_poly &o);
    sparse_poly &operator*=(const sparse_poly &o);
    sparse_poly &operator*=(const rational &c);

    friend sparse_poly operator+(sparse_poly a, const sparse_poly &b)
    {
        return a += b;
    }
    friend sparse_poly operator-(sparse_poly a, const sparse_poly &b)
    {
        return a -= b;
    }
    friend sparse_poly operator*(const sparse_poly &a, const sparse_poly &b);
    friend sparse_poly operator*(sparse_poly a, const rational &c)
    {
        return a *= c;
    }
    friend sparse_poly operator*(const rational &c, sparse_poly a)
    {
        return a *= c;
    }
    friend bool operator==(const sparse_poly &a, const sparse_poly &b);

    sparse_poly pow(unsigned e) const;
    sparse_poly mul_monomial(const monomial &m, const rational &c) const;

    bool depends_on(var_id v) const;
    unsigned degree_in(var_id v) const;
    // coefficients_in(v)[k] is the coefficient of v^k.
    std::vector<sparse_poly> coefficients_in(var_id v) const;
    sparse_poly differentiate(var_id v) const;
    sparse_poly substitute(var_id v, const sparse_poly &value) const;
    // Drops every term containing any variable for which the predicate holds.
    sparse_poly drop_terms_with(const std::function<bool(var_id)> &pred) const;
    // Keeps terms whose predicate is true.
    sparse_poly filter(const std::function<bool(const term &)> &pred) const;

    // Evaluates with a value for every variable present.
    rational evaluate(const std::function<rational(var_id)> &value) const;

    std::vector<var_id> variables() const;

    // Largest total degree in the listed variables.
    unsigned total_degree() const;

    // Terms in canonical graded lex order (higher total degree first, then lex by canonical
    // variable order).
    std::vector<const term *> canonical_terms() const;

    // Positive lcm of denominators over gcd of numerators, sign fixed so that the first
    // canonical term becomes positive. Multiplying by it yields a primitive integer polynomial.
    rational primitive_scale() const;

private:
    void check_same_registry(const sparse_poly &o) const;
    void normalize();

    registry_ptr m_reg;
    std::vector<term> m_terms;
};

// Sato weight of a monomial under the registry's weight table.
int weight_of(const registry &reg, const monomial &m);
// Common weight of all terms; nullopt when inhomogeneous. Zero polynomial yields nullopt.
std::optional<int> homogeneous_weight(const sparse_poly &p);
// Offending terms against an expected weight.
std::vector<const sparse_poly::term *> weight_violations(const sparse_poly &p, int expected);

// Parity of a monomial under u -> -u; none if any factor has undefined parity.
parity parity_of(const registry &reg, const monomial &m);

// Maps every variable of p into another registry by name. Throws usage_error for unknown ones.
sparse_poly transfer(const sparse_poly &p, const registry_ptr &target);

// Canonical text form in the formula grammar: "3/2*x^2*y - u1 + 1". Zero prints as "0".
std::string to_string(const sparse_poly &p);
// Factors of one monomial in canonical variable order, "1" for the empty monomial.
std::string monomial_to_string(const registry &reg, const monomial &m);

// Test whether p = c * q for some nonzero rational c. Returns c.
std::optional<rational> proportionality(const sparse_poly &p, const sparse_poly &q);

} // namespace trigonal
