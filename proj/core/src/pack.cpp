#include <trigonal/pack.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <boost/crc.hpp>

#include <trigonal/errors.hpp>

#ifndef TRIGONAL_DEFAULT_DATA_DIR
#define TRIGONAL_DEFAULT_DATA_DIR ""
#endif

namespace trigonal
{

namespace fs = std::filesystem;

namespace
{

std::string read_file(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        throw usage_error("cannot read '" + p.string() + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string hex32(std::uint32_t v)
{
    static const char digits[] = "0123456789abcdef";
    std::string s(8, '0');
    for (int i = 7; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return s;
}

} // namespace

fs::path default_data_dir()
{
    if (const char *env = std::getenv("TRIGONAL_DATA_DIR"); env && *env) {
        return env;
    }
    return TRIGONAL_DEFAULT_DATA_DIR;
}

fs::path curve_data_dir(const fs::path &data_dir, curve_id id)
{
    return data_dir / ("curve-" + std::to_string(id.n) + "-" + std::to_string(id.s));
}

const formula_block *formula_group::find(const std::string &block) const
{
    for (const auto &b : blocks) {
        if (b.name == block) {
            return &b;
        }
    }
    return nullptr;
}

const formula_block &formula_group::at(const std::string &block) const
{
    if (auto *b = find(block)) {
        return *b;
    }
    throw usage_error("no formula '" + block + "' in " + file.string());
}

const formula_group &formula_pack::group(const std::string &name) const
{
    auto it = groups.find(name);
    if (it == groups.end()) {
        throw usage_error("curve (" + id.str() + ") ships no '" + name + "' formulas");
    }
    return it->second;
}

formula_pack load_pack(const fs::path &data_dir, const curve_model &curve)
{
    const auto dir = curve_data_dir(data_dir, curve.id);
    if (!fs::is_directory(dir)) {
        throw usage_error("no data directory for curve (" + curve.id.str() + ") at '" + dir.string() + "'");
    }
    formula_pack pack;
    pack.id = curve.id;
    std::vector<fs::path> files;
    for (const auto &e : fs::directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().extension() == ".txt") {
            files.push_back(e.path());
        }
    }
    std::sort(files.begin(), files.end());
    for (const auto &f : files) {
        const auto stem = f.stem().string();
        auto text = read_file(f);
        if (stem == "weights") {
            std::istringstream in(text);
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#') {
                    continue;
                }
                std::istringstream ls(line);
                std::string name;
                int w = 0;
                if (!(ls >> name >> w)) {
                    throw usage_error("malformed weight line '" + line + "' in " + f.string());
                }
                pack.weight_table[name] = w;
            }
            continue;
        }
        formula_group g;
        g.name = stem;
        g.file = f;
        try {
            g.blocks = parse_blocks(text, curve.reg);
        } catch (const parse_error &e) {
            throw parse_error(f.filename().string() + ": " + e.what(), e.line(), e.column());
        } catch (const usage_error &e) {
            throw usage_error(f.filename().string() + ": " + e.what());
        }
        g.text = std::move(text);
        pack.groups.emplace(stem, std::move(g));
    }
    return pack;
}

curve_model load_curve(const fs::path &data_dir, curve_id id)
{
    auto c = make_curve(id);
    const auto file = curve_data_dir(data_dir, id) / "curve.txt";
    if (!fs::exists(file)) {
        return c;
    }
    const auto blocks = parse_blocks(read_file(file), c.reg);
    const auto find = [&](const std::string &name) -> const formula_block * {
        for (const auto &b : blocks) {
            if (b.name == name) {
                return &b;
            }
        }
        return nullptr;
    };
    if (auto *eq = find("curve"); eq && eq->value != c.equation) {
        throw internal_error("shipped equation of curve (" + id.str() + ") differs from the cyclic form");
    }
    for (int i = 1; i <= c.genus; ++i) {
        if (auto *gi = find("g" + std::to_string(i)); gi && gi->value != c.g[static_cast<std::size_t>(i - 1)]) {
            throw internal_error("shipped g" + std::to_string(i) + " differs from the generated holomorphic basis");
        }
    }
    for (int j = 1; j <= c.genus; ++j) {
        if (auto *hj = find("h" + std::to_string(j))) {
            c.h.push_back(hj->value);
        }
    }
    if (auto *f = find("F")) {
        c.F = f->value;
    }
    return c;
}

std::uint32_t crc32_of(const std::string &bytes)
{
    boost::crc_32_type crc;
    crc.process_bytes(bytes.data(), bytes.size());
    return crc.checksum();
}

std::vector<manifest_entry> check_manifest(const fs::path &data_dir)
{
    std::istringstream in(read_file(data_dir / "MANIFEST"));
    std::vector<manifest_entry> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream ls(line);
        std::string hex, path;
        if (!(ls >> hex >> path)) {
            throw usage_error("malformed MANIFEST line '" + line + "'");
        }
        manifest_entry e;
        e.path = path;
        e.expected = static_cast<std::uint32_t>(std::stoul(hex, nullptr, 16));
        if (fs::exists(data_dir / path)) {
            e.actual = crc32_of(read_file(data_dir / path));
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::string build_manifest(const fs::path &data_dir)
{
    std::vector<std::string> paths;
    for (const auto &e : fs::recursive_directory_iterator(data_dir)) {
        if (e.is_regular_file() && e.path().filename() != "MANIFEST") {
            paths.push_back(fs::relative(e.path(), data_dir).generic_string());
        }
    }
    std::sort(paths.begin(), paths.end());
    std::string out;
    for (const auto &p : paths) {
        out += hex32(crc32_of(read_file(data_dir / p))) + " " + p + "\n";
    }
    return out;
}

std::optional<parity> uniform_parity(const sparse_poly &p)
{
    std::optional<parity> seen;
    for (const auto &t : p.terms()) {
        const auto par = parity_of(*p.reg(), t.first);
        if (par == parity::none || (seen && *seen != par)) {
            return std::nullopt;
        }
        seen = par;
    }
    return seen;
}

std::vector<check_result> validate_pack(const curve_model &curve, const formula_pack &pack)
{
    std::vector<check_result> out;
    for (const auto &[gname, g] : pack.groups) {
        for (const auto &b : g.blocks) {
            check_result rt{gname, b.name, "round-trip", true, {}};
            const auto text = to_string(b.value);
            if (parse_formula(text, curve.reg) != b.value) {
                rt.passed = false;
                rt.detail = "canonical text does not parse back to the same polynomial";
            }
            out.push_back(std::move(rt));

            check_result hom{gname, b.name, "homogeneity", true, {}};
            if (!b.value.is_zero() && !homogeneous_weight(b.value)) {
                hom.passed = false;
                const int expected = weight_of(*curve.reg, b.value.canonical_terms().front()->first);
                const auto bad = weight_violations(b.value, expected);
                hom.detail = "weight " + std::to_string(expected) + " broken by "
                             + monomial_to_string(*curve.reg, bad.front()->first);
            }
            out.push_back(std::move(hom));

            const bool symbolic = std::any_of(b.value.terms().begin(), b.value.terms().end(), [&](const auto &t) {
                for (std::size_t i = 0; i < t.first.size(); ++i) {
                    const auto kind = curve.reg->var(t.first.var_at(i)).kind;
                    if (kind == var_kind::wp || kind == var_kind::q || kind == var_kind::u) {
                        return true;
                    }
                }
                return false;
            });
            const bool planar = std::any_of(b.value.terms().begin(), b.value.terms().end(), [&](const auto &t) {
                for (std::size_t i = 0; i < t.first.size(); ++i) {
                    const auto kind = curve.reg->var(t.first.var_at(i)).kind;
                    if (kind == var_kind::x || kind == var_kind::y || kind == var_kind::z || kind == var_kind::w) {
                        return true;
                    }
                }
                return false;
            });
            if (symbolic && !planar) {
                check_result par{gname, b.name, "parity", true, {}};
                if (!uniform_parity(b.value)) {
                    par.passed = false;
                    par.detail = "terms of both parities";
                }
                out.push_back(std::move(par));
            }
        }
    }
    if (curve.F) {
        check_result sym{"curve", "F", "swap-symmetry", true, {}};
        const auto diff = swap_points(curve, *curve.F) - *curve.F;
        if (!diff.is_zero()) {
            sym.passed = false;
            sym.detail = "asymmetric term " + monomial_to_string(*curve.reg, diff.canonical_terms().front()->first);
        }
        out.push_back(std::move(sym));
    }
    const auto &w = curve.weights;
    for (const auto &[name, value] : pack.weight_table) {
        check_result wc{"weights", name, "table", true, {}};
        std::optional<int> computed;
        if (name == "sigma") {
            computed = w.sigma;
        } else if (auto v = parse_variable(name); v && curve.reg->admits(*v)) {
            computed = curve.reg->try_weight(*v);
        }
        if (!computed || *computed != value) {
            wc.passed = false;
            wc.detail = "table says " + std::to_string(value) + ", computed "
                        + (computed ? std::to_string(*computed) : std::string("nothing"));
        }
        out.push_back(std::move(wc));
    }
    return out;
}

} // namespace trigonal
