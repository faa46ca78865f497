#include <doctest.h>

#include <trigonal/curve.hpp>
#include <trigonal/errors.hpp>
#include <trigonal/formula.hpp>
#include <trigonal/pack.hpp>
#include <trigonal/symbolic.hpp>

using namespace trigonal;

namespace
{

struct fixture {
    curve_model c = make_curve({3, 7});
    sparse_poly operator()(std::string_view text) const
    {
        return parse_formula(text, c.reg);
    }
};

} // namespace

TEST_CASE("symbol derivatives")
{
    fixture f;
    CHECK(differentiate_symbols(f("p[6,6]"), 6) == f("p[6,6,6]"));
    CHECK(differentiate_symbols(f("p[6,6]^2"), 6) == f("2*p[6,6]*p[6,6,6]"));
    CHECK(differentiate_symbols(f("lam6*p[5,6] + z*w"), 4) == f("lam6*p[4,5,6]"));
    CHECK_THROWS_AS(differentiate_symbols(f("Q[5,5,6,6]"), 6), usage_error);
}

TEST_CASE("parity split")
{
    fixture f;
    const auto [even, odd] = parity_split(f("p[6,6,6]*p[6,6] + lam6*p[5,6]"));
    CHECK(even == f("lam6*p[5,6]"));
    CHECK(odd == f("p[6,6,6]*p[6,6]"));
}

TEST_CASE("lam dropping")
{
    fixture f;
    CHECK(drop_lambda(f("p[4,6] + 3*lam6*p[6,6] + 2*lam5")) == f("p[4,6]"));
}

TEST_CASE("Q expansions")
{
    fixture f;
    CHECK(q_expansion(f.c.reg, {5, 6}) == f("p[5,6]"));
    CHECK(q_expansion(f.c.reg, {6, 6, 6, 6}) == f("p[6,6,6,6] - 6*p[6,6]^2"));
    CHECK(q_expansion(f.c.reg, {5, 5, 6, 6}) == f("p[5,5,6,6] - 2*p[5,5]*p[6,6] - 4*p[5,6]^2"));
    const auto q6 = q_expansion(f.c.reg, {6, 6, 6, 6, 6, 6});
    CHECK(q6 == f("p[6,6,6,6,6,6] - 30*p[6,6]*p[6,6,6,6] + 60*p[6,6]^3"));
    CHECK_THROWS_AS(q_expansion(f.c.reg, {6, 6, 6}), usage_error);
}

TEST_CASE("cross-differentiating the 4-index relations gives the first bilinear relation")
{
    const auto c = load_curve(TRIGONAL_TEST_DATA_DIR, {3, 7});
    const auto pack = load_pack(TRIGONAL_TEST_DATA_DIR, c);
    const auto &b = pack.group("bous");
    const auto x = cross_differentiate(b.at("P6666").value, b.at("P5666").value, 5, 6);
    const auto &bl = pack.group("bilinear").at("bl6").value;
    CHECK(proportionality(x, bl).has_value());
}

TEST_CASE("symbol inventory")
{
    fixture f;
    const auto p = f("p[6,6,6,6]*p[1,1] + lam3*z");
    CHECK(abelian_symbols(p).size() == 2);
    CHECK(max_symbol_order(p) == 4);
}
