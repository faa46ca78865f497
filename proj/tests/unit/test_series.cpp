#include <doctest.h>

#include <trigonal/errors.hpp>
#include <trigonal/formula.hpp>
#include <trigonal/laurent_series.hpp>

using namespace trigonal;

namespace
{

sparse_poly c(const registry_ptr &reg, rational q)
{
    return sparse_poly::constant(reg, q);
}

// Binomial coefficient binom(a, k) for rational a, an independent oracle for roots.
rational binom(rational a, int k)
{
    rational r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (a - i);
        r /= (i + 1);
    }
    return r;
}

} // namespace

TEST_CASE("cube root of 1 + 3 xi^3 matches the binomial series")
{
    auto reg = make_registry();
    laurent_series s(reg, 30);
    s.set(0, c(reg, 1));
    s.set(3, c(reg, 3));
    auto r = s.nth_root(3);
    CHECK(r.truncation() == 30);
    for (int k = 0; 3 * k < 30; ++k) {
        rational expected = binom(rational(1, 3), k);
        for (int i = 0; i < k; ++i) {
            expected *= 3;
        }
        CHECK(*r.coefficient(3 * k).constant_value() == expected);
    }
    CHECK(*r.coefficient(6).constant_value() == -1);
    auto back = r.pow(3);
    for (int k = 0; k < 30; ++k) {
        CHECK(back.coefficient(k) == s.coefficient(k));
    }
}

TEST_CASE("geometric inverse and monomial products")
{
    auto reg = make_registry();
    laurent_series s(reg, 12);
    s.set(0, c(reg, 1));
    s.set(1, c(reg, -1));
    auto inv = s.inverse();
    for (int k = 0; k < 12; ++k) {
        CHECK(*inv.coefficient(k).constant_value() == 1);
    }
    auto a = laurent_series::monomial(reg, c(reg, 1), -3);
    auto b = laurent_series::monomial(reg, c(reg, 1), 3);
    auto p = a * b;
    CHECK(p.coefficients().size() == 1);
    CHECK(*p.coefficient(0).constant_value() == 1);
}

TEST_CASE("inverse with polynomial coefficients")
{
    auto reg = make_registry();
    auto z = sparse_poly::var(reg, make_plain(var_kind::z));
    // (xi^-3 - z)^-2 = xi^6 sum (k+1) z^k xi^(3k)
    laurent_series d(reg, 40);
    d.set(-3, c(reg, 1));
    d.set(0, -z);
    auto inv = d.pow(2).inverse();
    for (int k = 0; 8 + 3 * k < inv.truncation(); ++k) {
        CHECK(inv.coefficient(6 + 3 * k) == rational(k + 1) * z.pow(static_cast<unsigned>(k)));
        CHECK(inv.coefficient(7 + 3 * k).is_zero());
    }
}

TEST_CASE("integration")
{
    auto reg = make_registry();
    auto s = laurent_series::monomial(reg, c(reg, -1), 10, 20);
    auto i = s.integrate();
    CHECK(*i.coefficient(11).constant_value() == rational(-1, 11));
    CHECK(i.truncation() == 21);
    auto m = laurent_series::monomial(reg, c(reg, -1), 0, 20).integrate();
    CHECK(*m.coefficient(1).constant_value() == -1);
    CHECK(laurent_series(reg, 5).integrate().coefficients().empty());
    CHECK_THROWS_AS(laurent_series::monomial(reg, c(reg, 1), -1, 5).integrate(), usage_error);
}

TEST_CASE("truncation is tracked pessimistically")
{
    auto reg = make_registry();
    auto a = laurent_series::monomial(reg, c(reg, 1), -7, 10);
    auto b = laurent_series::monomial(reg, c(reg, 1), 2, 15);
    CHECK((a * b).truncation() == 8);
    CHECK((a + b).truncation() == 10);
    CHECK_THROWS_AS(a.coefficient(10), usage_error);
}

TEST_CASE("formula parsing and round trip")
{
    weight_table t;
    t.genus = 6;
    t.strict = true;
    t.u_weights = {11, 8, 5, 4, 2, 1};
    t.lambda_weights = {-21, -18, -15, -12, -9, -6, -3};
    auto reg = make_registry(t);
    auto p = parse_formula("-(4/63)*p[6,6]{v}*lam6*lam5*lam4*lam3", reg);
    CHECK(p.size() == 1);
    CHECK(to_string(p) == "-4/63*lam3*lam4*lam5*lam6*p[6,6]{v}");
    auto q = parse_formula("u2^2", reg);
    CHECK(homogeneous_weight(q) == 16);
    auto r = parse_formula("(u1 + u2)^2 - 2*u1*u2 = u1^2", reg);
    CHECK(to_string(r) == "u2^2");
    CHECK(parse_formula(to_string(p), reg) == p);
    CHECK_THROWS_AS(parse_formula("u7", reg), usage_error);
    CHECK_THROWS_AS(parse_formula("u1 +", reg), parse_error);
    try {
        parse_formula("u1 *\n  $", reg);
        FAIL("no error");
    } catch (const parse_error &e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("block files")
{
    auto reg = make_registry();
    auto blocks = parse_blocks("# comment\n[a] x^2 - 1 ;\n[b two] (x - 1)*(x + 1) ;\n", reg);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].value == blocks[1].value);
    CHECK(blocks[1].name == "b two");
    CHECK(blocks[1].line == 3);
    CHECK(serialize_blocks(blocks) == "[a] x^2 - 1 ;\n[b two] x^2 - 1 ;\n");
    CHECK_THROWS_AS(parse_blocks("[a] x ; [a] y ;", reg), parse_error);
}
