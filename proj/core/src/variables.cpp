#include <trigonal/variables.hpp>

#include <algorithm>
#include <charconv>
#include <mutex>
#include <numeric>

#include <trigonal/errors.hpp>

namespace trigonal
{

std::strong_ordering canonical_compare(const variable &a, const variable &b)
{
    if (auto c = a.kind <=> b.kind; c != 0) {
        return c;
    }
    if (auto c = a.indices.size() <=> b.indices.size(); c != 0) {
        return c;
    }
    if (auto c = a.indices <=> b.indices; c != 0) {
        return c;
    }
    return a.point <=> b.point;
}

variable make_u(int i)
{
    return {var_kind::u, {i}, eval_point::none};
}

variable make_lambda(int j)
{
    return {var_kind::lam, {j}, eval_point::none};
}

variable make_newton(int k)
{
    return {var_kind::newton, {k}, eval_point::none};
}

variable make_wp(std::vector<int> indices, eval_point pt)
{
    std::sort(indices.begin(), indices.end());
    return {var_kind::wp, std::move(indices), pt};
}

variable make_q(std::vector<int> indices, eval_point pt)
{
    std::sort(indices.begin(), indices.end());
    return {var_kind::q, std::move(indices), pt};
}

variable make_plain(var_kind k)
{
    return {k, {}, eval_point::none};
}

std::string to_string(const variable &v)
{
    std::string out;
    switch (v.kind) {
        case var_kind::x:
            return "x";
        case var_kind::y:
            return "y";
        case var_kind::z:
            return "z";
        case var_kind::w:
            return "w";
        case var_kind::xi:
            return "xi";
        case var_kind::u:
            return "u" + std::to_string(v.indices.at(0));
        case var_kind::lam:
            return "lam" + std::to_string(v.indices.at(0));
        case var_kind::newton:
            return "p" + std::to_string(v.indices.at(0));
        case var_kind::wp:
            out = "p[";
            break;
        case var_kind::q:
            out = "Q[";
            break;
    }
    for (std::size_t i = 0; i < v.indices.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(v.indices[i]);
    }
    out += ']';
    if (v.point == eval_point::u) {
        out += "{u}";
    } else if (v.point == eval_point::v) {
        out += "{v}";
    }
    return out;
}

registry::registry(weight_table table) : m_table(std::move(table)) {}

bool registry::admits(const variable &v) const
{
    const auto &t = m_table;
    const auto in_u_range = [&](int i) { return i >= 1 && i <= t.genus; };
    switch (v.kind) {
        case var_kind::u:
            return v.indices.size() == 1 && v.indices[0] >= 1 && (!t.strict || in_u_range(v.indices[0]));
        case var_kind::lam:
            return v.indices.size() == 1 && v.indices[0] >= 0
                   && (!t.strict || v.indices[0] < static_cast<int>(t.lambda_weights.size()));
        case var_kind::newton:
            return t.newton && v.indices.size() == 1 && v.indices[0] >= 1;
        case var_kind::wp:
        case var_kind::q: {
            if (v.indices.empty() || !std::is_sorted(v.indices.begin(), v.indices.end())) {
                return false;
            }
            if (v.kind == var_kind::wp && v.indices.size() < 2) {
                return false;
            }
            if (v.kind == var_kind::q && (v.indices.size() < 2 || v.indices.size() % 2 != 0)) {
                return false;
            }
            return std::all_of(v.indices.begin(), v.indices.end(),
                               [&](int i) { return i >= 1 && (!t.strict || in_u_range(i)); });
        }
        default:
            return v.indices.empty();
    }
}

var_id registry::intern(const variable &v)
{
    {
        std::shared_lock lock(m_mutex);
        if (auto it = m_index.find(v); it != m_index.end()) {
            return it->second;
        }
    }
    if (!admits(v)) {
        throw usage_error("unknown variable '" + to_string(v) + "' for this curve");
    }
    std::unique_lock lock(m_mutex);
    if (auto it = m_index.find(v); it != m_index.end()) {
        return it->second;
    }
    if (m_vars.size() >= 0xFFFF) {
        throw internal_error("variable registry overflow");
    }
    const auto id = static_cast<var_id>(m_vars.size());
    m_vars.push_back(v);
    m_index.emplace(v, id);
    return id;
}

std::optional<var_id> registry::find(const variable &v) const
{
    std::shared_lock lock(m_mutex);
    if (auto it = m_index.find(v); it != m_index.end()) {
        return it->second;
    }
    return std::nullopt;
}

const variable &registry::var(var_id id) const
{
    std::shared_lock lock(m_mutex);
    return m_vars.at(id);
}

std::string registry::name(var_id id) const
{
    return to_string(var(id));
}

std::size_t registry::size() const
{
    std::shared_lock lock(m_mutex);
    return m_vars.size();
}

std::optional<int> registry::try_weight(const variable &v) const
{
    const auto &t = m_table;
    const auto u_weight = [&](int i) -> std::optional<int> {
        if (i >= 1 && i <= static_cast<int>(t.u_weights.size())) {
            return t.u_weights[static_cast<std::size_t>(i - 1)];
        }
        return std::nullopt;
    };
    switch (v.kind) {
        case var_kind::x:
        case var_kind::z:
            return t.x_weight;
        case var_kind::y:
        case var_kind::w:
            return t.y_weight;
        case var_kind::xi:
            return 1;
        case var_kind::u:
            return u_weight(v.indices[0]);
        case var_kind::lam:
            if (v.indices[0] >= 0 && v.indices[0] < static_cast<int>(t.lambda_weights.size())) {
                return t.lambda_weights[static_cast<std::size_t>(v.indices[0])];
            }
            return std::nullopt;
        case var_kind::newton:
            return v.indices[0];
        case var_kind::wp:
        case var_kind::q: {
            int total = 0;
            for (int i : v.indices) {
                auto wi = u_weight(i);
                if (!wi) {
                    return std::nullopt;
                }
                total -= *wi;
            }
            return total;
        }
    }
    return std::nullopt;
}

std::optional<int> registry::try_weight(var_id id) const
{
    return try_weight(var(id));
}

int registry::weight(var_id id) const
{
    auto w = try_weight(id);
    if (!w) {
        throw usage_error("variable '" + name(id) + "' has no Sato weight in this context");
    }
    return *w;
}

parity registry::parity_of(var_id id) const
{
    const auto &v = var(id);
    switch (v.kind) {
        case var_kind::u:
            return parity::odd;
        case var_kind::lam:
        case var_kind::z:
        case var_kind::w:
        case var_kind::q:
            return parity::even;
        case var_kind::wp:
            return v.indices.size() % 2 == 0 ? parity::even : parity::odd;
        default:
            return parity::none;
    }
}

std::vector<std::uint32_t> registry::canonical_ranks() const
{
    std::shared_lock lock(m_mutex);
    std::vector<std::uint32_t> ranks(m_vars.size());
    std::uint32_t r = 0;
    for (const auto &[v, id] : m_index) {
        ranks[id] = r++;
    }
    return ranks;
}

registry_ptr make_registry(weight_table table)
{
    return std::make_shared<registry>(std::move(table));
}

namespace
{

std::optional<int> parse_int(std::string_view s)
{
    if (s.empty()) {
        return std::nullopt;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0) {
        return std::nullopt;
    }
    return value;
}

} // namespace

std::optional<variable> parse_variable(std::string_view tok)
{
    if (tok == "x") {
        return make_plain(var_kind::x);
    }
    if (tok == "y") {
        return make_plain(var_kind::y);
    }
    if (tok == "z") {
        return make_plain(var_kind::z);
    }
    if (tok == "w") {
        return make_plain(var_kind::w);
    }
    if (tok == "xi") {
        return make_plain(var_kind::xi);
    }
    if (tok.starts_with("lam")) {
        if (auto j = parse_int(tok.substr(3))) {
            return make_lambda(*j);
        }
        return std::nullopt;
    }
    if ((tok.starts_with("p[") || tok.starts_with("Q[")) && tok.size() > 3) {
        const bool is_q = tok[0] == 'Q';
        const auto close = tok.find(']');
        if (close == std::string_view::npos) {
            return std::nullopt;
        }
        eval_point pt = eval_point::none;
        const auto tail = tok.substr(close + 1);
        if (tail == "{u}") {
            pt = eval_point::u;
        } else if (tail == "{v}") {
            pt = eval_point::v;
        } else if (!tail.empty()) {
            return std::nullopt;
        }
        std::vector<int> idx;
        auto body = tok.substr(2, close - 2);
        while (!body.empty()) {
            const auto comma = body.find(',');
            auto piece = body.substr(0, comma);
            auto val = parse_int(piece);
            if (!val) {
                return std::nullopt;
            }
            idx.push_back(*val);
            if (comma == std::string_view::npos) {
                break;
            }
            body.remove_prefix(comma + 1);
        }
        if (idx.empty()) {
            return std::nullopt;
        }
        return is_q ? make_q(std::move(idx), pt) : make_wp(std::move(idx), pt);
    }
    if (tok.size() > 1 && (tok[0] == 'u' || tok[0] == 'p')) {
        if (auto i = parse_int(tok.substr(1))) {
            return tok[0] == 'u' ? make_u(*i) : make_newton(*i);
        }
    }
    return std::nullopt;
}

} // namespace trigonal
