#pragma once

#include <optional>
#include <string>
#include <vector>

#include <trigonal/sparse_poly.hpp>

namespace trigonal
{

struct curve_id {
    int n = 3;
    int s = 7;

    // "3,7"
    std::string str() const;
    friend bool operator==(const curve_id &, const curve_id &) = default;
};

// Parses "3,7" or "3-7". Throws usage_error.
curve_id parse_curve_id(std::string_view text);

// Throws usage_error unless gcd(n,s) = 1 and s > n >= 2.
void check_curve_id(curve_id id);

int curve_genus(curve_id id);

// Ascending Weierstrass gaps: naturals not of the form a*n + b*s with a, b >= 0.
std::vector<int> gap_sequence(int n, int s);

struct sato_weights {
    // u[i-1] is the weight of u_i: the gaps in descending order.
    std::vector<int> u;
    // lambda[j] is the weight of lam_j, j = 0 .. s-1.
    std::vector<int> lambda;
    int x = 0;
    int y = 0;
    int sigma = 0;
    parity sigma_parity = parity::even;
};

sato_weights compute_sato_weights(curve_id id);

// Cyclic curve y^n = x^s + lam_{s-1} x^{s-1} + ... + lam_0 with its holomorphic differential
// numerators. The fundamental polynomial F and the second-kind numerators come from data.
struct curve_model {
    curve_id id;
    int genus = 0;
    std::vector<int> gaps;
    sato_weights weights;
    registry_ptr reg;
    // y^n - (x^s + sum lam_j x^j)
    sparse_poly equation;
    // g[i-1] is the numerator of du_i = g_i dx / (n y^(n-1)).
    std::vector<sparse_poly> g;
    std::vector<sparse_poly> h;
    std::optional<sparse_poly> F;

    var_id x_id() const;
    var_id y_id() const;
    var_id z_id() const;
    var_id w_id() const;
    var_id u_id(int i) const;
    var_id lambda_id(int j) const;
};

curve_model make_curve(curve_id id);

// Registry carrying the curve's Sato weights (strict index ranges).
registry_ptr make_curve_registry(curve_id id);

// F((x,y),(z,w)) with the two points exchanged.
sparse_poly swap_points(const curve_model &c, const sparse_poly &p);

} // namespace trigonal
