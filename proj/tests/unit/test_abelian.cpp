#include <doctest.h>

#include <random>

#include <trigonal/abelian.hpp>
#include <trigonal/errors.hpp>
#include <trigonal/formula.hpp>
#include <trigonal/pack.hpp>
#include <trigonal/schur.hpp>

using namespace trigonal;

namespace
{

const curve_model &curve(int s)
{
    static const auto c7 = load_curve(TRIGONAL_TEST_DATA_DIR, {3, 7});
    static const auto c8 = load_curve(TRIGONAL_TEST_DATA_DIR, {3, 8});
    return s == 7 ? c7 : c8;
}

std::vector<var_id> u_ids(const curve_model &c)
{
    std::vector<var_id> out;
    for (int i = 1; i <= c.genus; ++i) {
        out.push_back(c.u_id(i));
    }
    return out;
}

} // namespace

TEST_CASE("jet derivatives agree with repeated differentiation")
{
    const auto c = make_curve({3, 4});
    const auto ids = u_ids(c);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coeff(-9, 9), expo(0, 4);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<sparse_poly::term> terms;
        for (int t = 0; t < 6; ++t) {
            monomial m;
            for (auto id : ids) {
                if (const auto e = static_cast<unsigned>(expo(rng))) {
                    m = m * monomial::of(id, e);
                }
            }
            terms.emplace_back(m, rational(coeff(rng)));
        }
        const auto p = sparse_poly::from_terms(c.reg, terms);
        const std::vector<rational> base{rational(3, 7), rational(-5, 2), rational(11, 3)};
        const sigma_jet jet(p, ids, base, 5);
        const auto at = [&](var_id id) {
            return base[static_cast<std::size_t>(std::find(ids.begin(), ids.end(), id) - ids.begin())];
        };
        for (const auto &idx : std::vector<std::vector<int>>{{}, {1}, {3}, {1, 2}, {2, 2, 3}, {1, 1, 3, 3}, {3, 2, 1, 3, 2}}) {
            auto d = p;
            for (int i : idx) {
                d = d.differentiate(ids[static_cast<std::size_t>(i - 1)]);
            }
            CHECK(jet.derivative(idx) == d.evaluate(at));
        }
        CHECK(jet.coefficient({2, 0, 1}) == jet.derivative({1, 1, 3}) / 2);
        CHECK_THROWS_AS(jet.derivative({1, 1, 1, 1, 1, 1}), usage_error);
    }
}

TEST_CASE("sigma = u gives p_11 = 1/u^2")
{
    const auto c = make_curve({2, 3});
    const auto sigma = sparse_poly::var(c.reg, make_u(1));
    const sigma_jet jet(sigma, {c.u_id(1)}, {rational(5)}, 4);
    CHECK(jet.value() == 5);
    CHECK(jet.derivative({1}) == 1);
    CHECK(jet.derivative({1, 1}) == 0);
    const abelian_point pt(jet);
    CHECK(pt.wp({1, 1}) == rational(1, 25));
    CHECK(pt.wp({1, 1, 1}) == rational(-2, 125));
}

TEST_CASE("sigma vanishing at the origin is a divisor error")
{
    const auto &c = curve(7);
    point_sampler s(c, 1);
    CHECK_THROWS_AS(s.at(std::vector<rational>(6, rational(0))), divisor_error);
}

TEST_CASE("sampling is deterministic in the seed")
{
    const auto &c = curve(7);
    point_sampler a(c, 42), b(c, 42), d(c, 43);
    const auto pa = a.next().base();
    CHECK(pa == b.next().base());
    CHECK(pa != d.next().base());
    for (const auto &x : pa) {
        CHECK(abs(x.get_num()) <= 40);
        CHECK(x.get_den() <= 40);
    }
}

TEST_CASE("Q_ij = p_ij and odd Q vanish")
{
    const auto &c = curve(7);
    point_sampler s(c, 9);
    for (int k = 0; k < 3; ++k) {
        const auto pt = s.next();
        for (int i = 1; i <= 6; ++i) {
            for (int j = i; j <= 6; ++j) {
                CHECK(pt.q({i, j}) == pt.wp({i, j}));
            }
        }
        CHECK(pt.q({6, 6, 6}) == 0);
        CHECK(pt.q({1, 5, 6}) == 0);
    }
}

TEST_CASE("four-index identities at lam = 0")
{
    const auto &c7 = curve(7);
    point_sampler s7(c7, 2);
    for (int k = 0; k < 3; ++k) {
        const auto pt = s7.next();
        CHECK(pt.q({6, 6, 6, 6}) + 3 * pt.wp({5, 5}) == 0);
        const rational p66 = pt.wp({6, 6});
        CHECK(pt.wp({6, 6, 6, 6}) - 6 * p66 * p66 + 3 * pt.wp({5, 5}) == 0);
        CHECK(pt.wp({5, 6, 6, 6}) - 6 * pt.wp({5, 6}) * p66 - 3 * pt.wp({4, 6}) == 0);
        CHECK(evaluate_symbols(parse_formula("p[6,6,6]^2 - 4*p[6,6]^3 - p[5,6]^2 + 4*p[5,5]*p[6,6] - 4*p[3,6] + 4*p[4,5]", c7.reg), pt) == 0);
        CHECK(evaluate_symbols(parse_formula("-1/2*p[4,6,6] - 1/2*p[5,5,5] - p[5,6]*p[6,6,6] + p[6,6]*p[5,6,6]", c7.reg), pt) == 0);
    }
    point_sampler s8(curve(8), 2);
    const auto pt8 = s8.next();
    CHECK(pt8.q({7, 7, 7, 7}) + 3 * pt8.wp({6, 6}) == 0);
}

TEST_CASE("evaluation rejects curve coordinates and unpaired two-point symbols")
{
    const auto &c = curve(7);
    point_sampler s(c, 1);
    const auto pt = s.next();
    CHECK_THROWS_AS(evaluate_symbols(parse_formula("z*p[6,6]", c.reg), pt), usage_error);
    CHECK_THROWS_AS(evaluate_symbols(parse_formula("p[6,6]{v}", c.reg), pt), usage_error);
    CHECK(evaluate_symbols(parse_formula("lam6*p[6,6] + p[5,5]", c.reg), pt) == pt.wp({5, 5}));
}

TEST_CASE("Boussinesq constant")
{
    for (int s : {7, 8}) {
        const auto b = boussinesq_check(curve(s), 3, 4);
        CHECK(b.c == -3);
        CHECK(b.consistent);
        CHECK(b.residual == 0);
    }
}

TEST_CASE("addition formula: the diagonal and the swap")
{
    const auto &c = curve(7);
    const auto pack = load_pack(TRIGONAL_TEST_DATA_DIR, c);
    sparse_poly f(c.reg);
    for (const auto &b : pack.group("addition").blocks) {
        f += b.value;
    }
    point_sampler s(c, 17);
    const auto u = s.next();
    const auto v = s.next();
    const auto diag = check_addition(c, f, u, u);
    CHECK(diag.lhs == 0);
    CHECK(diag.rhs == 0);
    const auto uv = check_addition(c, f, u, v);
    const auto vu = check_addition(c, f, v, u);
    CHECK(uv.passed);
    CHECK(uv.lhs == vu.lhs);
    CHECK(uv.rhs == vu.rhs);
}

TEST_CASE("matrix rank")
{
    using row = std::vector<rational>;
    CHECK(matrix_rank({row{1, 0}, row{0, 1}}) == 2);
    CHECK(matrix_rank({row{1, 2, 3}, row{2, 4, 6}, row{rational(1, 2), 1, rational(3, 2)}}) == 1);
    CHECK(matrix_rank({row{0, 0}, row{0, 0}}) == 0);
    CHECK(matrix_rank({row{0, 1, 2}, row{1, 2, 3}, row{1, 3, 5}, row{2, 3, 4}}) == 2);
    CHECK(matrix_rank({row{rational(1, 3), 2, 0}, row{0, rational(-1, 7), 1}, row{1, 0, 5}}) == 3);
}

TEST_CASE("candidate monomials contain SW")
{
    const auto c = make_curve({3, 7});
    const auto cands = candidate_monomials(c, 16);
    const auto sw = schur_weierstrass(c).sw;
    for (const auto &[m, coeff] : sw.terms()) {
        CHECK(std::find(cands.begin(), cands.end(), m) != cands.end());
    }
    CHECK_NOTHROW(candidate_monomials(c, 19));
    CHECK_THROWS_AS(candidate_monomials(c, 17), usage_error);
    CHECK_THROWS_AS(candidate_monomials(c, 18), usage_error);
}

TEST_CASE("inversion residual shrinks with precision")
{
    const auto &c = curve(7);
    const auto pack = load_pack(TRIGONAL_TEST_DATA_DIR, c);
    const auto &g = pack.group("rho");
    point_sampler s(c, 3);
    const auto pt = s.next();
    const auto lo = jacobi_invert_numeric(c, g.at("rho12").value, g.at("rho1").value, pt, 30);
    const auto hi = jacobi_invert_numeric(c, g.at("rho12").value, g.at("rho1").value, pt, 60);
    REQUIRE(lo.points.size() == 6);
    CHECK(hi.max_residual < mp_real("1e-45"));
    CHECK(hi.max_residual * mp_real("1e10") < lo.max_residual + mp_real("1e-58"));
    CHECK(hi.vieta_error < mp_real("1e-45"));
}
