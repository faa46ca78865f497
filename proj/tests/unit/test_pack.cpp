#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <trigonal/errors.hpp>
#include <trigonal/formula.hpp>
#include <trigonal/pack.hpp>

using namespace trigonal;
namespace fs = std::filesystem;

TEST_CASE("crc32 check value")
{
    CHECK(crc32_of("123456789") == 0xCBF43926u);
    CHECK(crc32_of("") == 0u);
}

TEST_CASE("manifest round trip")
{
    const auto dir = fs::temp_directory_path() / "trigonal_manifest_test";
    fs::remove_all(dir);
    fs::create_directories(dir / "curve-3-7");
    std::ofstream(dir / "curve-3-7" / "a.txt") << "[a] u1 ;\n";
    std::ofstream(dir / "b.txt") << "x\n";
    std::ofstream(dir / "MANIFEST") << build_manifest(dir);
    for (const auto &e : check_manifest(dir)) {
        CHECK(e.actual == e.expected);
    }
    std::ofstream(dir / "b.txt") << "y\n";
    bool mismatch = false;
    for (const auto &e : check_manifest(dir)) {
        mismatch = mismatch || e.actual != e.expected;
    }
    CHECK(mismatch);
    fs::remove_all(dir);
}

TEST_CASE("shipped data validates and matches its manifest")
{
    for (int s : {7, 8, 10, 11}) {
        const auto c = load_curve(TRIGONAL_TEST_DATA_DIR, {3, s});
        const auto pack = load_pack(TRIGONAL_TEST_DATA_DIR, c);
        for (const auto &r : validate_pack(c, pack)) {
            INFO(s << " " << r.group << "/" << r.name << " " << r.check << " " << r.detail);
            CHECK(r.passed);
        }
    }
    for (const auto &e : check_manifest(TRIGONAL_TEST_DATA_DIR)) {
        INFO(e.path);
        CHECK(e.actual == e.expected);
    }
}

TEST_CASE("parse errors carry positions")
{
    const auto reg = make_registry();
    try {
        parse_formula("u1 + * u2", reg);
        FAIL("expected a parse error");
    } catch (const parse_error &e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 6);
    }
    CHECK_THROWS_AS(parse_blocks("[a] u1 ; [a] u2 ;", reg), usage_error);
}

TEST_CASE("a curve without data is the bare cyclic model")
{
    const auto c = load_curve(TRIGONAL_TEST_DATA_DIR, {3, 13});
    CHECK(c.genus == 12);
    CHECK(!c.F);
    CHECK(c.h.empty());
}
