#pragma once

#include <optional>
#include <vector>

#include <trigonal/curve.hpp>
#include <trigonal/laurent_series.hpp>

namespace trigonal
{

struct local_expansion {
    laurent_series x;
    laurent_series y;
    // u[i-1] is u_i(xi), the integral of du_i from the point at infinity.
    std::vector<laurent_series> u;
};

// x = xi^-n, y the branch of the n-th root of the curve polynomial with leading xi^-s, and the
// u_i(xi). order is the relative precision (number of xi-powers kept beyond each leading term).
local_expansion local_expansions(const curve_model &curve, int order);

// p_S(eps - u) expanded around u: sum over multi-indices a of (-1)^(|S|+|a|) p[S+a] eps^a / a!,
// truncated at xi^truncation. Every eps component needs a positive valuation.
laurent_series taylor_pfunction(const registry_ptr &reg, const std::vector<int> &base,
                                const std::vector<laurent_series> &eps, int truncation);

struct rho_expansion {
    std::vector<sparse_poly> rho;
    // xi exponent of the coefficient each rho was read from.
    std::vector<int> exponents;
    // Exponents whose coefficient vanished or repeated an earlier rho.
    std::vector<int> skipped;
    // Exponent of the first nonzero coefficient (the pole order of the expansion).
    int valuation = 0;
    // Whether some coefficient had to be reduced with w^n = f(z).
    bool reduced_on_curve = false;
};

// Expands (x - z)^2 sum p_ij(u(xi) - u) g_i(x,y) g_j(z,w) - F(x,y) near infinity and returns the
// first count nonzero coefficients. Throws internal_error when a coefficient below the expected pole order
// survives (inconsistent curve data).
rho_expansion generate_rho(const curve_model &curve, int count);

struct elimination {
    sparse_poly value;
    std::size_t terms = 0;
    unsigned z_degree = 0;
    std::optional<int> weight;
};

// Resultant in w, scaled to primitive integer content. The sign follows the printed counterpart
// when one is given and makes the first canonical term positive otherwise.
elimination eliminate_w(const curve_model &curve, const sparse_poly &a, const sparse_poly &b,
                        const sparse_poly *printed = nullptr);

struct degree_reduction {
    // Coefficients of z^0 .. z^(g-1) after reduction.
    std::vector<sparse_poly> relations;
    unsigned rounds = 0;
};

// Repeatedly replaces z^g using pivot (whose z^g coefficient must be a nonzero rational) until
// the target has z-degree below g.
degree_reduction reduce_degree(const curve_model &curve, const sparse_poly &target, const sparse_poly &pivot);

struct inversion_pair {
    sparse_poly rho12;
    sparse_poly rho1;
};

// The pair used for the explicit Jacobi inversion: rho_{1,2} of z-degree g and rho_1 of
// w-degree 1. Throws internal_error on a degree mismatch.
inversion_pair jacobi_invert_symbolic(const curve_model &curve, const sparse_poly &rho1, const sparse_poly &rho2);

// Reduces powers w^k with k >= n using w^n = f(z).
sparse_poly reduce_on_curve(const curve_model &curve, const sparse_poly &p);

} // namespace trigonal
