#include <doctest.h>

#include <trigonal/abelian.hpp>
#include <trigonal/errors.hpp>
#include <trigonal/formula.hpp>
#include <trigonal/kleinian.hpp>
#include <trigonal/pack.hpp>
#include <trigonal/symbolic.hpp>

using namespace trigonal;

namespace
{

const curve_model &curve37()
{
    static const auto c = load_curve(TRIGONAL_TEST_DATA_DIR, {3, 7});
    return c;
}

const rho_expansion &rho37()
{
    static const auto r = generate_rho(curve37(), 9);
    return r;
}

sparse_poly P(const curve_model &c, std::string_view text)
{
    return parse_formula(text, c.reg);
}

laurent_series xi_power(const curve_model &c, int e, int trunc)
{
    return laurent_series::monomial(c.reg, sparse_poly::constant(c.reg, 1), e, trunc);
}

} // namespace

TEST_CASE("Taylor expansion of p_ij about u")
{
    const auto &c = curve37();
    std::vector<laurent_series> eps(static_cast<std::size_t>(c.genus), xi_power(c, 3, 6));
    eps[2] = xi_power(c, 1, 6);
    const auto t = taylor_pfunction(c.reg, {1, 2}, eps, 3);
    CHECK(t.coefficient(0) == P(c, "p[1,2]"));
    CHECK(t.coefficient(1) == P(c, "-p[1,2,3]"));
    CHECK(t.coefficient(2) == P(c, "1/2*p[1,2,3,3]"));

    std::vector<laurent_series> two(static_cast<std::size_t>(c.genus), xi_power(c, 3, 6));
    two[2] = xi_power(c, 1, 6);
    two[4] = xi_power(c, 1, 6) * rational(5);
    const auto m = taylor_pfunction(c.reg, {6, 6}, two, 3).coefficient(2);
    CHECK(m.coefficient(monomial::of(c.reg->intern(make_wp({3, 5, 6, 6})))) == 5);

    std::vector<laurent_series> bad(static_cast<std::size_t>(c.genus), xi_power(c, 3, 6));
    bad[0] = xi_power(c, 0, 6);
    CHECK_THROWS_AS(taylor_pfunction(c.reg, {1, 1}, bad, 3), usage_error);
}

TEST_CASE("generated rho_1 and rho_3 of the (3,7) curve")
{
    const auto &c = curve37();
    const auto &r = rho37();
    CHECK(proportionality(r.rho[0], P(c, "-z^4 + p[5,6]*z^3 + p[3,6]*z^2 + (p[6,6]*w + p[2,6])*z + p[4,6]*w + p[1,6]")).has_value());
    const auto z3 = r.rho[2].coefficients_in(c.z_id())[3].coefficients_in(c.w_id())[0];
    const auto a = z3.coefficient(monomial::of(c.reg->intern(make_wp({5, 6, 6, 6}))));
    const auto b = z3.coefficient(monomial::of(c.reg->intern(make_wp({5, 5, 6}))));
    CHECK(a != 0);
    CHECK(b / a == -3);
    const auto w2 = r.rho[2].coefficient(monomial::of(c.w_id(), 2));
    CHECK(w2 / a == -6);
}

TEST_CASE("generated rho_1 to rho_3 equal the shipped ones up to a constant")
{
    for (int s : {7, 8}) {
        const auto c = load_curve(TRIGONAL_TEST_DATA_DIR, {3, s});
        const auto pack = load_pack(TRIGONAL_TEST_DATA_DIR, c);
        const auto r = generate_rho(c, 3);
        for (int k = 1; k <= 3; ++k) {
            INFO(s << " rho" << k);
            const auto &shipped = pack.group("rho").at("rho" + std::to_string(k)).value;
            CHECK(proportionality(r.rho[static_cast<std::size_t>(k - 1)], shipped).has_value());
        }
    }
}

TEST_CASE("every generated rho is weight homogeneous")
{
    for (const auto &r : rho37().rho) {
        CHECK(homogeneous_weight(r).has_value());
    }
}

TEST_CASE("resultants of the (3,7) rho polynomials")
{
    const auto &c = curve37();
    const auto &r = rho37();
    const auto e12 = eliminate_w(c, r.rho[0], r.rho[1]);
    CHECK(e12.terms == 40);
    CHECK(e12.z_degree == 6);
    const auto e14 = eliminate_w(c, r.rho[0], r.rho[3]);
    CHECK(e14.terms == 77);
    CHECK(e14.z_degree == 6);
    const auto e25 = eliminate_w(c, r.rho[1], r.rho[4]);
    CHECK(e25.terms == 226);
    CHECK(e25.z_degree == 6);
    CHECK_THROWS_AS(eliminate_w(c, P(c, "z + p[1,1]"), r.rho[0]), usage_error);

    const auto pack = load_pack(TRIGONAL_TEST_DATA_DIR, c);
    CHECK(proportionality(e12.value, pack.group("rho").at("rho12").value).has_value());
}

TEST_CASE("degree reduction of rho_{1,4} gives six relations vanishing at lam = 0")
{
    const auto &c = curve37();
    const auto &r = rho37();
    const auto pivot = eliminate_w(c, r.rho[0], r.rho[1]).value;
    const auto target = eliminate_w(c, r.rho[0], r.rho[3]).value;
    const auto red = reduce_degree(c, target, pivot);
    CHECK(red.rounds == 1);
    REQUIRE(red.relations.size() == 6);
    std::vector<std::pair<std::string, sparse_poly>> checks;
    for (const auto &rel : red.relations) {
        CHECK(homogeneous_weight(rel).has_value());
        const auto [even, odd] = parity_split(rel);
        CHECK(even + odd == rel);
        checks.emplace_back("rel", rel);
        checks.emplace_back("even", even);
        checks.emplace_back("odd", odd);
    }
    CHECK(verify_relations(c, "reduce", checks, 5, 3).passed());
    CHECK_THROWS_AS(reduce_degree(c, target, P(c, "p[6,6]*z^6 + z")), usage_error);
}

TEST_CASE("Jacobi inversion pair degrees")
{
    const auto &c = curve37();
    const auto &r = rho37();
    const auto pair = jacobi_invert_symbolic(c, r.rho[0], r.rho[1]);
    CHECK(pair.rho12.degree_in(c.z_id()) == 6);
    CHECK(pair.rho12.degree_in(c.w_id()) == 0);
    CHECK(pair.rho1.degree_in(c.w_id()) == 1);
}

TEST_CASE("Shipped data: the resultant of the shipped rho_1, rho_2 is the shipped rho_{1,2}")
{
    for (int s : {10, 11}) {
        const auto c = load_curve(TRIGONAL_TEST_DATA_DIR, {3, s});
        const auto pack = load_pack(TRIGONAL_TEST_DATA_DIR, c);
        const auto &g = pack.group("rho");
        const auto e = eliminate_w(c, g.at("rho1").value, g.at("rho2").value, &g.at("rho12").value);
        CHECK(e.value == g.at("rho12").value);
        CHECK(e.z_degree == static_cast<unsigned>(c.genus));
    }
}
