#include <doctest.h>

#include <trigonal/errors.hpp>
#include <trigonal/resultant.hpp>
#include <trigonal/roots.hpp>

using namespace trigonal;

namespace
{

struct fixture {
    registry_ptr reg = make_registry();
    sparse_poly w = sparse_poly::var(reg, make_plain(var_kind::w));
    sparse_poly x = sparse_poly::var(reg, make_plain(var_kind::x));
    sparse_poly a = sparse_poly::var(reg, make_u(1));
    sparse_poly b = sparse_poly::var(reg, make_u(2));
    var_id wid = *reg->find(make_plain(var_kind::w));
};

} // namespace

TEST_CASE("resultant sign conventions")
{
    fixture f;
    CHECK(resultant(f.w - f.a, f.w - f.b, f.wid) == f.a - f.b);
    CHECK(resultant(f.w * f.w - f.x, f.w - f.a, f.wid) == f.a * f.a - f.x);
}

TEST_CASE("resultant vanishes on a common factor and is multiplicative")
{
    fixture f;
    auto common = f.w - f.a;
    auto p = common * (f.w * f.w + f.x);
    auto q = common * (f.w + f.b);
    CHECK(resultant(p, q, f.wid).is_zero());

    auto r1 = f.w - f.a;
    auto r2 = f.w * f.w - f.b;
    auto s = f.w * f.w + f.x * f.w + f.a;
    CHECK(resultant(r1 * r2, s, f.wid) == resultant(r1, s, f.wid) * resultant(r2, s, f.wid));
}

TEST_CASE("resultant of products of linear factors")
{
    // Res(prod (w - a_i), prod (w - b_j)) = prod (a_i - b_j).
    fixture f;
    auto c = sparse_poly::var(f.reg, make_u(3));
    auto d = sparse_poly::var(f.reg, make_u(4));
    auto p = (f.w - f.a) * (f.w - f.b);
    auto q = (f.w - c) * (f.w - d);
    auto expected = (f.a - c) * (f.a - d) * (f.b - c) * (f.b - d);
    CHECK(resultant(p, q, f.wid) == expected);
}

TEST_CASE("determinant matches direct expansion")
{
    fixture f;
    std::vector<std::vector<sparse_poly>> m = {{f.a, f.b}, {f.x, f.w}};
    CHECK(determinant(m) == f.a * f.w - f.b * f.x);
    CHECK_THROWS_AS(resultant(sparse_poly(f.reg), f.w, f.wid), usage_error);
}

TEST_CASE("Aberth roots of a polynomial with known roots")
{
    precision_scope prec(50);
    // (z - 1)(z + 2)(z^2 + 1) = z^4 + z^3 - z^2 + z - 2
    auto res = polynomial_roots({-2, 1, -1, 1, 1});
    REQUIRE(res.roots.size() == 4);
    mp_complex prod{1, 0}, sum{0, 0};
    for (const auto &r : res.roots) {
        prod = prod * r;
        sum = sum + r;
    }
    CHECK(abs(prod - mp_complex{-2, 0}) < mp_real("1e-40"));
    CHECK(abs(sum - mp_complex{-1, 0}) < mp_real("1e-40"));
    CHECK(res.max_residual < mp_real("1e-45"));
}
