#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace trigonal::cli
{

inline constexpr const char *report_schema = "trigonal.report/v1";

struct options {
    std::string data_dir;
    std::string format = "text";
    std::uint64_t seed = 1;
    unsigned precision = 50;

    std::string curve = "3,7";
    int n = 0;
    int s = 0;
    int count = 3;
    int i = 1;
    int j = 2;
    bool table = false;
    bool print = false;
    std::string target = "1,4";
    std::string pivot = "1,2";
    std::string suite = "q-family";
    std::optional<int> points;
    int weight = 16;
    int terms = 6;
    int tolerance = 25;
    std::string source = "auto";
    bool write_manifest = false;
};

struct outcome {
    nlohmann::ordered_json json;
    std::string text;
    bool passed = true;
};

outcome run_gaps(const options &o);
outcome run_weights(const options &o);
outcome run_sw(const options &o);
outcome run_expansions(const options &o);
outcome run_rho(const options &o);
outcome run_resultant(const options &o);
outcome run_reduce(const options &o);
outcome run_invert(const options &o);
outcome run_verify(const options &o);
outcome run_addition(const options &o);
outcome run_candidates(const options &o);
outcome run_rank(const options &o);
outcome run_validate_data(const options &o);

} // namespace trigonal::cli
