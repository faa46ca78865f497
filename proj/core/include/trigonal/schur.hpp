#pragma once

#include <vector>

#include <trigonal/curve.hpp>
#include <trigonal/sparse_poly.hpp>

namespace trigonal
{

using partition = std::vector<int>;

// pi_k = w_{g-k+1} + k - g for ascending gaps w. Throws internal_error on a non-positive part.
partition weierstrass_partition(const std::vector<int> &gaps);
partition conjugate(const partition &p);
int partition_size(const partition &p);

// Registry of Newton power sums p1, p2, ... (weight k for p_k).
registry_ptr make_newton_registry();

// Elementary symmetric e_0 .. e_max in Newton power sums, by the Newton identities.
std::vector<sparse_poly> elementary_in_newton(const registry_ptr &reg, int max);
// e_k as (1/k!) times the determinant of the almost triangular Newton matrix.
sparse_poly elementary_by_determinant(const registry_ptr &reg, int k);
// Complete homogeneous h_0 .. h_max in Newton power sums.
std::vector<sparse_poly> complete_in_newton(const registry_ptr &reg, int max);

// det(e_{pi'_i - i + j}) over the conjugate partition pi'.
sparse_poly schur_from_partition(const registry_ptr &reg, const partition &p);
// Jacobi-Trudi det(h_{pi_i - i + j}), an independent route to the same polynomial.
sparse_poly schur_by_complete(const registry_ptr &reg, const partition &p);

struct schur_weierstrass_result {
    partition weierstrass;
    // Schur polynomial in Newton power sums before the change of variables.
    sparse_poly in_newton;
    // After p_{w_i} = w_i u_{g+1-i}, in the curve registry.
    sparse_poly sw;
};

// Throws internal_error if a p_k with k not a gap survives.
schur_weierstrass_result schur_weierstrass(const curve_model &curve);

} // namespace trigonal
