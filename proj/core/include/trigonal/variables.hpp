#pragma once

#include <compare>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

namespace trigonal
{

// Declaration order is the canonical variable order used for printing.
enum class var_kind : std::uint8_t { z, w, x, y, xi, u, lam, newton, wp, q };

// Evaluation point tag carried by Abelian symbols in two-point formulas.
enum class eval_point : std::uint8_t { none, u, v };

// Behaviour under u -> -u.
enum class parity : std::uint8_t { even, odd, none };

struct variable {
    var_kind kind = var_kind::x;
    // u, lam, newton: a single index. wp, q: sorted index multiset.
    std::vector<int> indices;
    eval_point point = eval_point::none;

    bool is_abelian() const noexcept
    {
        return kind == var_kind::wp || kind == var_kind::q;
    }

    friend bool operator==(const variable &, const variable &) = default;
};

// Canonical total order on variables (kind, then index count, then indices, then point).
std::strong_ordering canonical_compare(const variable &a, const variable &b);

struct variable_less {
    bool operator()(const variable &a, const variable &b) const
    {
        return canonical_compare(a, b) < 0;
    }
};

variable make_u(int i);
variable make_lambda(int j);
variable make_newton(int k);
variable make_wp(std::vector<int> indices, eval_point pt = eval_point::none);
variable make_q(std::vector<int> indices, eval_point pt = eval_point::none);
variable make_plain(var_kind k);

// Text name in the formula grammar: u3, lam6, x, xi, p[5,6,6], Q[5,5,5,6]{v}, p4 (Newton sum).
std::string to_string(const variable &v);

// Sato-weight context. Unset entries mean "no weight"; weight_of on such a variable is a usage error.
struct weight_table {
    int genus = 0;
    // u_weights[i-1] is the weight of u_i.
    std::vector<int> u_weights;
    // lambda_weights[j] is the weight of lam_j; size s for an (n,s) curve.
    std::vector<int> lambda_weights;
    std::optional<int> x_weight;
    std::optional<int> y_weight;
    // Reject u/lam/wp/q indices outside the curve's range.
    bool strict = false;
    // Accept Newton power sums p_k (weight k).
    bool newton = false;
};

using var_id = std::uint32_t;

// Interns variables and assigns them ids. Append-only; safe for concurrent readers and writers.
// Ids reflect interning order only. Anything user-visible is ordered with canonical_compare.
class registry
{
public:
    explicit registry(weight_table table = {});

    registry(const registry &) = delete;
    registry &operator=(const registry &) = delete;

    // Throws usage_error if the variable is not admissible for this registry.
    var_id intern(const variable &v);
    std::optional<var_id> find(const variable &v) const;

    const variable &var(var_id id) const;
    std::string name(var_id id) const;
    std::size_t size() const;

    // Throws usage_error when the variable carries no weight in this context.
    int weight(var_id id) const;
    std::optional<int> try_weight(var_id id) const;
    std::optional<int> try_weight(const variable &v) const;
    parity parity_of(var_id id) const;

    bool admits(const variable &v) const;
    const weight_table &table() const noexcept
    {
        return m_table;
    }

    // Rank of each id under canonical_compare.
    std::vector<std::uint32_t> canonical_ranks() const;

private:
    weight_table m_table;
    mutable std::shared_mutex m_mutex;
    std::deque<variable> m_vars;
    std::map<variable, var_id, variable_less> m_index;
};

using registry_ptr = std::shared_ptr<registry>;

registry_ptr make_registry(weight_table table = {});

// Parses a variable token (u3, lam6, z, xi, p[1,2], Q[5,5,5,6]{u}, p7).
std::optional<variable> parse_variable(std::string_view token);

} // namespace trigonal
