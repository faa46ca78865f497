#include <doctest.h>

#include <trigonal/errors.hpp>
#include <trigonal/sparse_poly.hpp>

using namespace trigonal;

namespace
{

registry_ptr plain_registry()
{
    weight_table t;
    t.genus = 3;
    t.u_weights = {5, 2, 1};
    t.x_weight = -3;
    t.y_weight = -4;
    return make_registry(t);
}

} // namespace

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("-6/4") == rational(-3, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), usage_error);
    CHECK_THROWS_AS(parse_rational("1/x"), usage_error);
}

TEST_CASE("ring axioms on small polynomials")
{
    auto reg = plain_registry();
    auto x = sparse_poly::var(reg, make_plain(var_kind::x));
    auto y = sparse_poly::var(reg, make_plain(var_kind::y));
    auto one = sparse_poly::constant(reg, 1);
    auto a = x * x + rational(3, 2) * y - one;
    auto b = y * y * x - x;
    auto c = x + y + one;
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    CHECK(c.pow(3) == c * c * c);
    CHECK(c.pow(0) == one);
}

TEST_CASE("binomial expansion matches coefficients")
{
    auto reg = plain_registry();
    auto x = sparse_poly::var(reg, make_plain(var_kind::x));
    auto one = sparse_poly::constant(reg, 1);
    auto p = (x + one).pow(10);
    const auto xid = *reg->find(make_plain(var_kind::x));
    auto coeffs = p.coefficients_in(xid);
    REQUIRE(coeffs.size() == 11);
    CHECK(*coeffs[5].constant_value() == 252);
    CHECK(p.differentiate(xid) == rational(10) * (x + one).pow(9));
}

TEST_CASE("substitution and evaluation agree")
{
    auto reg = plain_registry();
    auto x = sparse_poly::var(reg, make_plain(var_kind::x));
    auto y = sparse_poly::var(reg, make_plain(var_kind::y));
    const auto xid = *reg->find(make_plain(var_kind::x));
    const auto yid = *reg->find(make_plain(var_kind::y));
    auto p = x.pow(3) - rational(2) * x * y + y.pow(2);
    auto s = p.substitute(xid, y + sparse_poly::constant(reg, 2));
    const auto at = [&](var_id v) { return v == yid ? rational(1, 3) : rational(7, 3); };
    CHECK(s.evaluate(at) == p.evaluate(at));
}

TEST_CASE("weights and parity")
{
    auto reg = plain_registry();
    auto u1 = sparse_poly::var(reg, make_u(1));
    auto u3 = sparse_poly::var(reg, make_u(3));
    auto p = u1 + u3.pow(5);
    CHECK(homogeneous_weight(p) == 5);
    CHECK(weight_violations(p + u3, 5).size() == 1);
    CHECK(parity_of(*reg, p.terms().front().first) == parity::odd);
    CHECK_THROWS_AS(sparse_poly::var(reg, make_u(0)), usage_error);
}

TEST_CASE("canonical term order is graded lex and stable under interning order")
{
    auto r1 = plain_registry();
    auto r2 = plain_registry();
    sparse_poly::var(r2, make_plain(var_kind::y));
    const auto build = [](registry_ptr r) {
        auto x = sparse_poly::var(r, make_plain(var_kind::x));
        auto y = sparse_poly::var(r, make_plain(var_kind::y));
        return x * y + x.pow(2) + y.pow(2) + x + sparse_poly::constant(r, 1);
    };
    auto a = build(r1), b = build(r2);
    CHECK(to_string(a) == to_string(b));
    CHECK(to_string(a) == "x^2 + x*y + y^2 + x + 1");
    CHECK(to_string(-a) == "-x^2 - x*y - y^2 - x - 1");
}

TEST_CASE("primitive scale")
{
    auto reg = plain_registry();
    auto x = sparse_poly::var(reg, make_plain(var_kind::x));
    auto p = rational(-2, 3) * x.pow(2) + rational(4, 9) * x;
    auto q = p * p.primitive_scale();
    CHECK(q == rational(3) * x.pow(2) - rational(2) * x);
}

TEST_CASE("exponent overflow is a hard error")
{
    auto reg = plain_registry();
    const auto xid = reg->intern(make_plain(var_kind::x));
    auto m = monomial::of(xid, monomial::max_exponent);
    CHECK_THROWS_AS(m * monomial::of(xid, 1), std::overflow_error);
}
