#pragma once

#include <utility>
#include <vector>

#include <trigonal/sparse_poly.hpp>

namespace trigonal
{

// d/du_k acting on a polynomial in Abelian symbols: p[S] -> p[S+k] with the product rule.
// lam, z and w are constants. Throws usage_error on Q symbols or u variables.
sparse_poly differentiate_symbols(const sparse_poly &p, int k);

// d_i a - d_j b, the cross-derivative of two symbol relations.
sparse_poly cross_differentiate(const sparse_poly &a, const sparse_poly &b, int i, int j);

// Sets every lam_j to zero.
sparse_poly drop_lambda(const sparse_poly &p);

// Even and odd parts under u -> -u. Throws usage_error for a term without a defined parity.
std::pair<sparse_poly, sparse_poly> parity_split(const sparse_poly &p);

// Printed expansions of Q in 2-index and higher p symbols (4 or 6 indices).
sparse_poly q_expansion(const registry_ptr &reg, const std::vector<int> &indices, eval_point pt = eval_point::none);

// Abelian symbols occurring in p.
std::vector<var_id> abelian_symbols(const sparse_poly &p);

// Largest index count over the p symbols of p (0 if none).
std::size_t max_symbol_order(const sparse_poly &p);

} // namespace trigonal
