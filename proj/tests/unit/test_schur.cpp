#include <doctest.h>

#include <trigonal/curve.hpp>
#include <trigonal/pack.hpp>
#include <trigonal/schur.hpp>

using namespace trigonal;

namespace
{

rational coefficient_of(const curve_model &c, const sparse_poly &p, int u, unsigned e)
{
    return p.coefficient(monomial::of(c.u_id(u), e));
}

} // namespace

TEST_CASE("Weierstrass partitions")
{
    CHECK(weierstrass_partition(gap_sequence(3, 7)) == partition{6, 4, 2, 2, 1, 1});
    CHECK(weierstrass_partition(gap_sequence(2, 5)) == partition{2, 1});
    CHECK(conjugate(partition{6, 4, 2, 2, 1, 1}) == partition{6, 4, 2, 2, 1, 1});
    CHECK(conjugate(partition{3, 1}) == partition{2, 1, 1});
    CHECK(partition_size(partition{6, 4, 2, 2, 1, 1}) == 16);
}

TEST_CASE("Schur polynomials from two determinant routes agree")
{
    const auto reg = make_newton_registry();
    for (const auto &p : std::vector<partition>{{1}, {2}, {1, 1}, {2, 1}, {3, 1}, {2, 2}, {3, 2, 1}, {4, 2, 1, 1}, {6, 4, 2, 2, 1, 1}}) {
        INFO(p.size());
        CHECK(schur_from_partition(reg, p) == schur_by_complete(reg, p));
    }
}

TEST_CASE("elementary symmetric functions by Newton identities and by determinant")
{
    const auto reg = make_newton_registry();
    const auto e = elementary_in_newton(reg, 6);
    for (int k = 1; k <= 6; ++k) {
        CHECK(e[static_cast<std::size_t>(k)] == elementary_by_determinant(reg, k));
    }
}

TEST_CASE("genus one and two Schur-Weierstrass polynomials")
{
    // sigma of y^2 = x^3 at lam = 0 is u; genus two: u1 - u2^3/3 up to sign.
    const auto c1 = make_curve({2, 3});
    const auto sw1 = schur_weierstrass(c1).sw;
    CHECK(sw1 == sparse_poly::var(c1.reg, make_u(1)));

    const auto c2 = make_curve({2, 5});
    const auto sw2 = schur_weierstrass(c2).sw;
    const auto u1 = sparse_poly::var(c2.reg, make_u(1));
    const auto u2 = sparse_poly::var(c2.reg, make_u(2));
    CHECK(proportionality(sw2, u1 - rational(1, 3) * u2.pow(3)).has_value());
}

TEST_CASE("printed coefficients of SW for (3,7) and (3,8)")
{
    const auto c7 = make_curve({3, 7});
    const auto sw7 = schur_weierstrass(c7).sw;
    CHECK(coefficient_of(c7, sw7, 6, 16) == rational(1, 22528000));
    CHECK(coefficient_of(c7, sw7, 2, 2) == 1);
    CHECK(homogeneous_weight(sw7) == 16);
    CHECK(uniform_parity(sw7) == parity::even);

    const auto c8 = make_curve({3, 8});
    const auto sw8 = schur_weierstrass(c8).sw;
    CHECK(coefficient_of(c8, sw8, 7, 21) == rational(1, 45660160000));
    CHECK(homogeneous_weight(sw8) == 21);
    CHECK(uniform_parity(sw8) == parity::odd);
}

TEST_CASE("generated SW equals the shipped polynomials term for term")
{
    for (int s : {7, 8}) {
        const auto c = load_curve(TRIGONAL_TEST_DATA_DIR, {3, s});
        const auto pack = load_pack(TRIGONAL_TEST_DATA_DIR, c);
        const auto sw = schur_weierstrass(c).sw;
        CHECK(sw == pack.group("sigma").at("sw").value);
    }
}
