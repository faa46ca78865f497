#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include <trigonal/rational.hpp>

namespace trigonal
{

using mp_real = boost::multiprecision::mpfr_float;

struct mp_complex {
    mp_real re;
    mp_real im;
};

mp_complex operator+(const mp_complex &a, const mp_complex &b);
mp_complex operator-(const mp_complex &a, const mp_complex &b);
mp_complex operator*(const mp_complex &a, const mp_complex &b);
mp_complex operator/(const mp_complex &a, const mp_complex &b);
mp_real abs(const mp_complex &z);

// Rounds to the current working precision.
mp_real to_mp(const rational &q);

// Sets the MPFR working precision in decimal digits for the lifetime of the object.
class precision_scope
{
public:
    explicit precision_scope(unsigned digits);
    ~precision_scope();
    precision_scope(const precision_scope &) = delete;
    precision_scope &operator=(const precision_scope &) = delete;

private:
    unsigned m_saved;
};

struct root_result {
    std::vector<mp_complex> roots;
    // Largest |p(r)| / sum |a_k| |r|^k over the roots.
    mp_real max_residual;
    unsigned iterations = 0;
};

// All complex roots of sum coeffs[k] z^k by simultaneous Aberth iteration at the current
// precision. Throws numeric_error if the iteration does not settle.
root_result polynomial_roots(const std::vector<rational> &coeffs, unsigned max_iterations = 2000);

std::string to_string(const mp_real &x, unsigned digits);

} // namespace trigonal
