#pragma once

#include <vector>

#include <trigonal/sparse_poly.hpp>

namespace trigonal
{

// Resultant with respect to v, as the Sylvester determinant with the rows of p first.
// Res(w - a, w - b) = a - b. Throws usage_error if either input is zero.
sparse_poly resultant(const sparse_poly &p, const sparse_poly &q, var_id v);

// Determinant by Laplace expansion with memoized minors. Division free; entries may be any
// polynomials over a common registry.
sparse_poly determinant(const std::vector<std::vector<sparse_poly>> &m);

} // namespace trigonal
