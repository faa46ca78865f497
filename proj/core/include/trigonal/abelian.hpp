#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <trigonal/curve.hpp>
#include <trigonal/roots.hpp>
#include <trigonal/sparse_poly.hpp>

namespace trigonal
{

// Exact derivatives of a polynomial sigma (the Schur-Weierstrass polynomial, i.e. sigma at
// lam = 0) at a rational point. Derivatives are computed on demand and cached.
class sigma_jet
{
public:
    sigma_jet(const sparse_poly &sigma, std::vector<var_id> u_ids, std::vector<rational> base, int order);

    const std::vector<rational> &base() const noexcept
    {
        return m_base;
    }
    int order() const noexcept
    {
        return m_order;
    }
    std::size_t genus() const noexcept
    {
        return m_base.size();
    }

    const rational &value() const
    {
        return derivative({});
    }
    // d/du_{i1} ... d/du_{ik} sigma at the base point; indices are 1-based, any order.
    // Throws usage_error beyond the jet order.
    const rational &derivative(std::vector<int> indices) const;
    // Taylor coefficient at the exponent vector alpha (length genus): derivative / alpha!.
    rational coefficient(const std::vector<unsigned> &alpha) const;

private:
    struct term {
        rational coeff;
        std::vector<unsigned> exps;
    };
    std::vector<term> m_terms;
    std::vector<rational> m_base;
    // m_powers[i][k] = base[i]^k
    std::vector<std::vector<rational>> m_powers;
    int m_order = 0;
    mutable std::map<std::vector<int>, rational> m_cache;
};

// Exact p- and Q-values at one point, from a sigma jet.
class abelian_point
{
public:
    // Throws divisor_error when sigma vanishes at the point.
    explicit abelian_point(sigma_jet jet);

    const sigma_jet &jet() const noexcept
    {
        return m_jet;
    }
    const std::vector<rational> &base() const noexcept
    {
        return m_jet.base();
    }

    // p_S = -d_S log sigma, |S| >= 2.
    rational wp(std::vector<int> indices) const;
    // Q_S from the Hirota operator; zero for an odd number of indices.
    rational q(std::vector<int> indices) const;

private:
    const rational &log_derivative(const std::vector<int> &sorted) const;

    sigma_jet m_jet;
    mutable std::map<std::vector<int>, rational> m_log;
    mutable std::map<std::vector<int>, rational> m_q;
};

// Evaluates a polynomial in Abelian symbols with all lam_j set to zero. Symbols tagged {v} use
// at_v, the others at_u. Throws usage_error on x, y, z, w, u or xi.
rational evaluate_symbols(const sparse_poly &p, const abelian_point &at_u, const abelian_point *at_v = nullptr);

// Sigma of the curve at lam = 0, in the curve registry.
sparse_poly lambda_free_sigma(const curve_model &curve);

// Seeded source of rational sample points with |numerator| <= 40 and 1 <= denominator <= 40.
class point_sampler
{
public:
    point_sampler(const curve_model &curve, std::uint64_t seed, int jet_order = 8);

    std::vector<rational> draw_coordinates();
    // Next point off the theta divisor; divisor hits are redrawn and counted.
    abelian_point next();
    abelian_point at(std::vector<rational> base) const;

    std::size_t resampled() const noexcept
    {
        return m_resampled;
    }
    const sparse_poly &sigma() const noexcept
    {
        return m_sigma;
    }

private:
    sparse_poly m_sigma;
    std::vector<var_id> m_u;
    std::mt19937_64 m_rng;
    int m_order;
    std::size_t m_resampled = 0;
};

struct relation_status {
    std::string id;
    std::optional<int> weight;
    bool passed = true;
    // First nonzero value met, as an exact rational; "0" when every point gave zero.
    std::string residual = "0";
    // Sample point that produced the residual.
    std::optional<std::size_t> point;
};

struct verification_report {
    std::string suite;
    std::string curve;
    std::uint64_t seed = 0;
    std::vector<std::vector<rational>> points;
    std::size_t resampled = 0;
    std::vector<relation_status> relations;

    bool passed() const;
};

// Each relation, with lam set to zero, must vanish exactly at every sampled point.
verification_report verify_relations(const curve_model &curve, const std::string &suite,
                                     const std::vector<std::pair<std::string, sparse_poly>> &relations, int points,
                                     std::uint64_t seed);

// Q_ij = p_ij for every pair, every 4-index Q against its expansion in p-functions, six_index_sets
// seeded 6-index multisets likewise, and Q with three indices equal to zero.
verification_report verify_hirota(const curve_model &curve, int points, std::uint64_t seed, int six_index_sets = 10);

struct boussinesq_result {
    // c in Q_gggg = c p_{g-1,g-1}, fitted at the first point.
    rational c;
    // The same c at every point.
    bool consistent = true;
    // p_gggg - 6 p_gg^2 - c p_{g-1,g-1}, differentiated twice in u_g: largest |value| over the points.
    rational residual;
    std::vector<std::vector<rational>> points;
};

boussinesq_result boussinesq_check(const curve_model &curve, int points, std::uint64_t seed);

struct addition_check {
    std::vector<rational> u;
    std::vector<rational> v;
    rational lhs;
    rational rhs;
    bool passed = false;
    // On failure: monomials of f(u,v) + f(v,u) with their values.
    std::vector<std::pair<std::string, rational>> breakdown;
};

struct addition_report {
    std::uint64_t seed = 0;
    std::size_t resampled = 0;
    std::vector<addition_check> checks;
    bool passed() const;
};

// -sigma(u+v) sigma(u-v) / (sigma(u)^2 sigma(v)^2) = f(u,v) + f(v,u) at lam = 0, with f the sum
// of the two-point polynomials.
addition_check check_addition(const curve_model &curve, const sparse_poly &f, const abelian_point &u,
                              const abelian_point &v);
addition_report verify_addition(const curve_model &curve, const sparse_poly &f, int pairs, std::uint64_t seed);

struct divisor_point {
    mp_complex z;
    mp_complex w;
    // |w^n - z^s| / max(1, |z|^s)
    mp_real residual;
};

struct inversion_result {
    std::vector<rational> u;
    std::vector<divisor_point> points;
    mp_real max_residual;
    // Sum of the z_i from the coefficients of rho_12, exact.
    rational vieta_sum;
    mp_real vieta_error;
};

// Numerical Jacobi inversion at lam = 0 from rho_12 (degree g in z) and rho_1 (linear in w).
// Throws divisor_error when the w coefficient of rho_1 vanishes at a root.
inversion_result jacobi_invert_numeric(const curve_model &curve, const sparse_poly &rho12, const sparse_poly &rho1,
                                       const abelian_point &at, unsigned digits);

// Monomials in u_1 .. u_g of Sato weight k with the parity of sigma. Throws usage_error unless
// k = weight(sigma) mod n.
std::vector<monomial> candidate_monomials(const curve_model &curve, int k);

struct rank_report {
    std::size_t entries = 0;
    std::size_t distinct = 0;
    std::vector<std::string> duplicates;
    std::size_t points = 0;
    std::size_t rank = 0;
};

// Rank over Q of the basis functions evaluated at lam = 0 sample points.
rank_report basis_rank(const curve_model &curve, const std::vector<std::pair<std::string, sparse_poly>> &basis,
                       int points, std::uint64_t seed);

// Rank of a rational matrix by fraction-free elimination.
std::size_t matrix_rank(std::vector<std::vector<rational>> rows);

} // namespace trigonal
