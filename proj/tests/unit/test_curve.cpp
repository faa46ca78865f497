#include <doctest.h>

#include <trigonal/curve.hpp>
#include <trigonal/errors.hpp>
#include <trigonal/pack.hpp>

using namespace trigonal;

namespace
{

std::vector<int> brute_gaps(int n, int s)
{
    std::vector<int> out;
    for (int k = 1; k < n * s; ++k) {
        bool hit = false;
        for (int a = 0; a * n <= k && !hit; ++a) {
            hit = (k - a * n) % s == 0;
        }
        if (!hit) {
            out.push_back(k);
        }
    }
    return out;
}

} // namespace

TEST_CASE("gap sequences agree with a brute-force search")
{
    for (auto [n, s] : std::vector<std::pair<int, int>>{{2, 3}, {2, 7}, {3, 4}, {3, 5}, {3, 7}, {3, 8}, {3, 10}, {3, 11}, {4, 5}, {5, 7}}) {
        const auto gaps = gap_sequence(n, s);
        CHECK(gaps == brute_gaps(n, s));
        CHECK(static_cast<int>(gaps.size()) == curve_genus({n, s}));
        CHECK(curve_genus({n, s}) == (n - 1) * (s - 1) / 2);
    }
    CHECK(gap_sequence(3, 8) == std::vector<int>{1, 2, 4, 5, 7, 10, 13});
    CHECK(gap_sequence(3, 10) == std::vector<int>{1, 2, 4, 5, 7, 8, 11, 14, 17});
}

TEST_CASE("Sato weights of the (3,7) and (3,8) curves")
{
    const auto w = compute_sato_weights({3, 7});
    CHECK(w.u == std::vector<int>{11, 8, 5, 4, 2, 1});
    CHECK(w.lambda == std::vector<int>{-21, -18, -15, -12, -9, -6, -3});
    CHECK(w.x == -3);
    CHECK(w.y == -7);
    CHECK(w.sigma == 16);
    CHECK(w.sigma_parity == parity::even);

    const auto w8 = compute_sato_weights({3, 8});
    CHECK(w8.sigma == 21);
    CHECK(w8.sigma_parity == parity::odd);
}

TEST_CASE("sigma weight is the size of the Weierstrass partition")
{
    for (auto [n, s] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {3, 7}, {3, 8}, {4, 5}, {3, 11}}) {
        const auto gaps = gap_sequence(n, s);
        int size = 0;
        for (std::size_t i = 0; i < gaps.size(); ++i) {
            size += gaps[i] - static_cast<int>(i);
        }
        CHECK(compute_sato_weights({n, s}).sigma == size);
    }
}

TEST_CASE("curve ids")
{
    CHECK(parse_curve_id("3,7") == curve_id{3, 7});
    CHECK(parse_curve_id("3-11") == curve_id{3, 11});
    CHECK_THROWS_AS(parse_curve_id("3"), usage_error);
    CHECK_THROWS_AS(check_curve_id({4, 6}), usage_error);
    CHECK_THROWS_AS(check_curve_id({3, 2}), usage_error);
    CHECK(curve_id{3, 8}.str() == "3,8");
}

TEST_CASE("the shipped (3,7) weight table agrees with the computed weights")
{
    const auto c = load_curve(TRIGONAL_TEST_DATA_DIR, {3, 7});
    const auto pack = load_pack(TRIGONAL_TEST_DATA_DIR, c);
    REQUIRE(!pack.weight_table.empty());
    const auto w = compute_sato_weights({3, 7});
    for (const auto &[name, value] : pack.weight_table) {
        INFO(name);
        if (name == "x") {
            CHECK(value == w.x);
        } else if (name == "y") {
            CHECK(value == w.y);
        } else if (name == "sigma") {
            CHECK(value == w.sigma);
        } else if (name.rfind("lam", 0) == 0) {
            CHECK(value == w.lambda[static_cast<std::size_t>(std::stoi(name.substr(3)))]);
        } else if (name.rfind("u", 0) == 0) {
            CHECK(value == w.u[static_cast<std::size_t>(std::stoi(name.substr(1)) - 1)]);
        }
    }
}

TEST_CASE("curve models are weight homogeneous and F is symmetric")
{
    for (int s : {7, 8}) {
        const auto c = load_curve(TRIGONAL_TEST_DATA_DIR, {3, s});
        REQUIRE(c.F);
        CHECK(homogeneous_weight(c.equation) == -3 * s);
        CHECK(homogeneous_weight(*c.F).has_value());
        CHECK(swap_points(c, *c.F) == *c.F);
        CHECK(c.g.size() == static_cast<std::size_t>(c.genus));
        for (const auto &g : c.g) {
            CHECK(homogeneous_weight(g).has_value());
        }
    }
}
