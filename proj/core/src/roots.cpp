#include <trigonal/roots.hpp>

#include <algorithm>
#include <sstream>

#include <trigonal/errors.hpp>

namespace trigonal
{

mp_complex operator+(const mp_complex &a, const mp_complex &b)
{
    return {a.re + b.re, a.im + b.im};
}

mp_complex operator-(const mp_complex &a, const mp_complex &b)
{
    return {a.re - b.re, a.im - b.im};
}

mp_complex operator*(const mp_complex &a, const mp_complex &b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

mp_complex operator/(const mp_complex &a, const mp_complex &b)
{
    const mp_real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

mp_real abs(const mp_complex &z)
{
    return boost::multiprecision::hypot(z.re, z.im);
}

precision_scope::precision_scope(unsigned digits) : m_saved(mp_real::default_precision())
{
    mp_real::default_precision(digits);
}

precision_scope::~precision_scope()
{
    mp_real::default_precision(m_saved);
}

mp_real to_mp(const rational &q)
{
    return mp_real(q.get_num().get_str()) / mp_real(q.get_den().get_str());
}

root_result polynomial_roots(const std::vector<rational> &coeffs_in, unsigned max_iterations)
{
    std::vector<rational> coeffs = coeffs_in;
    while (!coeffs.empty() && coeffs.back() == 0) {
        coeffs.pop_back();
    }
    if (coeffs.size() < 2) {
        throw usage_error("root finding needs a polynomial of positive degree");
    }
    const std::size_t n = coeffs.size() - 1;
    std::vector<mp_real> a(coeffs.size());
    std::transform(coeffs.begin(), coeffs.end(), a.begin(), to_mp);
    std::vector<mp_real> da(n);
    for (std::size_t k = 1; k <= n; ++k) {
        da[k - 1] = a[k] * static_cast<unsigned>(k);
    }

    mp_real radius = 0;
    for (std::size_t k = 0; k < n; ++k) {
        radius = std::max(radius, mp_real(boost::multiprecision::abs(a[k] / a[n])));
    }
    radius += 1;
    const mp_real two_pi = 2 * boost::multiprecision::acos(mp_real(-1));
    const mp_real offset = mp_real(1) / boost::multiprecision::sqrt(mp_real(7));
    std::vector<mp_complex> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        const mp_real theta = two_pi * k / n + offset;
        z[k] = {radius * boost::multiprecision::cos(theta), radius * boost::multiprecision::sin(theta)};
    }

    const auto horner = [](const std::vector<mp_real> &c, const mp_complex &x) {
        mp_complex acc{0, 0};
        for (auto k = c.size(); k-- > 0;) {
            acc = acc * x + mp_complex{c[k], 0};
        }
        return acc;
    };

    const mp_real eps = boost::multiprecision::pow(mp_real(10), -static_cast<int>(mp_real::default_precision()) + 4);
    root_result out;
    bool settled = false;
    for (unsigned it = 0; it < max_iterations && !settled; ++it) {
        settled = true;
        for (std::size_t k = 0; k < n; ++k) {
            const auto pv = horner(a, z[k]);
            if (abs(pv) == 0) {
                continue;
            }
            const auto ratio = pv / horner(da, z[k]);
            mp_complex sum{0, 0};
            for (std::size_t j = 0; j < n; ++j) {
                if (j != k) {
                    sum = sum + mp_complex{1, 0} / (z[k] - z[j]);
                }
            }
            const auto step = ratio / (mp_complex{1, 0} - ratio * sum);
            z[k] = z[k] - step;
            if (abs(step) > eps * std::max(mp_real(1), abs(z[k]))) {
                settled = false;
            }
        }
        out.iterations = it + 1;
    }
    if (!settled) {
        throw numeric_error("root iteration did not converge");
    }

    out.max_residual = 0;
    for (const auto &r : z) {
        mp_real scale = 0, rk = 1;
        const mp_real ar = abs(r);
        for (std::size_t k = 0; k <= n; ++k) {
            scale += boost::multiprecision::abs(a[k]) * rk;
            rk *= ar;
        }
        out.max_residual = std::max(out.max_residual, mp_real(abs(horner(a, r)) / scale));
    }
    out.roots = std::move(z);
    return out;
}

std::string to_string(const mp_real &x, unsigned digits)
{
    std::ostringstream os;
    os.precision(static_cast<std::streamsize>(digits));
    os << std::scientific << x;
    return os.str();
}

} // namespace trigonal
