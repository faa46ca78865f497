#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <trigonal/curve.hpp>
#include <trigonal/formula.hpp>

namespace trigonal
{

// $TRIGONAL_DATA_DIR if set, else the directory compiled into the library.
std::filesystem::path default_data_dir();

// Directory of a curve's data files inside a data directory: <data>/curve-<n>-<s>.
std::filesystem::path curve_data_dir(const std::filesystem::path &data_dir, curve_id id);

struct formula_group {
    std::string name;
    std::filesystem::path file;
    std::string text;
    std::vector<formula_block> blocks;

    const formula_block &at(const std::string &block) const;
    const formula_block *find(const std::string &block) const;
};

// All formula files of one curve, keyed by file stem (rho, sigma, quadratic, ...).
struct formula_pack {
    curve_id id;
    std::map<std::string, formula_group> groups;
    // Weight table shipped with the curve, name -> weight (may be empty).
    std::map<std::string, int> weight_table;

    bool has(const std::string &group) const
    {
        return groups.count(group) != 0;
    }
    const formula_group &group(const std::string &name) const;
};

// Loads every *.txt formula file of the curve (weights.txt is read as a table). Parse errors are
// rethrown with the file name prefixed.
formula_pack load_pack(const std::filesystem::path &data_dir, const curve_model &curve);

// Builds a model from data: generic curve plus h_j and F from curve.txt. Throws internal_error
// when the shipped equation or holomorphic numerators disagree with the generated ones.
curve_model load_curve(const std::filesystem::path &data_dir, curve_id id);

std::uint32_t crc32_of(const std::string &bytes);

struct manifest_entry {
    std::string path;
    std::uint32_t expected = 0;
    std::optional<std::uint32_t> actual;
};

// Reads <data>/MANIFEST ("crc32hex relative/path" per line) and checksums each listed file.
std::vector<manifest_entry> check_manifest(const std::filesystem::path &data_dir);

// Manifest text covering every regular file below data_dir except MANIFEST itself, sorted by path.
std::string build_manifest(const std::filesystem::path &data_dir);

struct check_result {
    std::string group;
    std::string name;
    std::string check;
    bool passed = true;
    std::string detail;
};

// Round trip, weight homogeneity, parity uniformity and F swap symmetry over a loaded pack.
std::vector<check_result> validate_pack(const curve_model &curve, const formula_pack &pack);

// Uniform parity of a polynomial under u -> -u; nullopt when mixed or undefined.
std::optional<parity> uniform_parity(const sparse_poly &p);

} // namespace trigonal
