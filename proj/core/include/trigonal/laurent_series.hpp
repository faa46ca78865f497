#pragma once

#include <climits>
#include <map>
#include <optional>
#include <string>

#include <trigonal/sparse_poly.hpp>

namespace trigonal
{

// Truncated Laurent series in xi with polynomial coefficients. Coefficients at exponents
// >= truncation() are unknown. An exact series (a finite Laurent polynomial) has
// truncation() == laurent_series::exact.
class laurent_series
{
public:
    static constexpr int exact = INT_MAX;

    laurent_series() = default;
    laurent_series(registry_ptr reg, int truncation);

    static laurent_series monomial(registry_ptr reg, const sparse_poly &c, int exponent, int truncation = exact);
    static laurent_series constant(const sparse_poly &c, int truncation = exact);

    const registry_ptr &reg() const noexcept
    {
        return m_reg;
    }
    int truncation() const noexcept
    {
        return m_trunc;
    }
    bool is_exact() const noexcept
    {
        return m_trunc == exact;
    }
    const std::map<int, sparse_poly> &coefficients() const noexcept
    {
        return m_coeffs;
    }
    // Lowest exponent with a nonzero coefficient; nullopt when no known coefficient is nonzero.
    std::optional<int> valuation() const;
    sparse_poly coefficient(int k) const;

    void set(int k, sparse_poly c);
    laurent_series truncated(int truncation) const;

    laurent_series operator-() const;
    laurent_series &operator+=(const laurent_series &o);
    laurent_series &operator-=(const laurent_series &o);
    friend laurent_series operator+(laurent_series a, const laurent_series &b)
    {
        return a += b;
    }
    friend laurent_series operator-(laurent_series a, const laurent_series &b)
    {
        return a -= b;
    }
    friend laurent_series operator*(const laurent_series &a, const laurent_series &b);
    friend laurent_series operator*(laurent_series a, const sparse_poly &c);
    friend laurent_series operator*(laurent_series a, const rational &c);

    // Multiplies by xi^k.
    laurent_series shifted(int k) const;
    laurent_series pow(unsigned e) const;

    // Requires a rational leading coefficient and a finite truncation.
    laurent_series inverse() const;
    // Requires a rational leading coefficient with an exact rational n-th root and a valuation
    // divisible by n.
    laurent_series nth_root(unsigned n) const;
    // Term-wise antiderivative with zero constant; a xi^-1 term is a usage error.
    laurent_series integrate() const;
    laurent_series derivative() const;

    // Applies a map to every coefficient.
    template <class F>
    laurent_series map(F f) const
    {
        laurent_series r(m_reg, m_trunc);
        for (const auto &[k, c] : m_coeffs) {
            r.set(k, f(c));
        }
        return r;
    }

private:
    void check_same_registry(const laurent_series &o) const;

    registry_ptr m_reg;
    std::map<int, sparse_poly> m_coeffs;
    int m_trunc = exact;
};

// Substitutes series for variables of a polynomial: p(x -> sx, ...).
laurent_series substitute_series(const sparse_poly &p, const std::map<var_id, laurent_series> &values);

// Text form "(c)*xi^k + ... + O(xi^t)".
std::string to_string(const laurent_series &s);

} // namespace trigonal
