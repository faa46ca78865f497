#include <trigonal/resultant.hpp>

#include <cstdint>
#include <unordered_map>

#include <trigonal/errors.hpp>

namespace trigonal
{

namespace
{

struct laplace {
    const std::vector<std::vector<sparse_poly>> &m;
    registry_ptr reg;
    std::unordered_map<std::uint64_t, sparse_poly> memo;

    // Determinant of the rows [row, n) restricted to the columns left in mask.
    sparse_poly minor(std::size_t row, std::uint64_t mask)
    {
        const auto n = m.size();
        if (row == n) {
            return sparse_poly::constant(reg, 1);
        }
        if (auto it = memo.find(mask); it != memo.end()) {
            return it->second;
        }
        sparse_poly total(reg);
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (std::uint64_t{1} << c))) {
                continue;
            }
            const auto &entry = m[row][c];
            if (!entry.is_zero()) {
                auto sub = minor(row + 1, mask & ~(std::uint64_t{1} << c));
                if (!sub.is_zero()) {
                    auto prod = entry * sub;
                    if (sign > 0) {
                        total += prod;
                    } else {
                        total -= prod;
                    }
                }
            }
            sign = -sign;
        }
        memo.emplace(mask, total);
        return total;
    }
};

} // namespace

sparse_poly determinant(const std::vector<std::vector<sparse_poly>> &m)
{
    const auto n = m.size();
    if (n > 63) {
        throw usage_error("determinant too large for memoized expansion");
    }
    registry_ptr reg;
    for (const auto &row : m) {
        if (row.size() != n) {
            throw usage_error("determinant of a non-square matrix");
        }
        for (const auto &e : row) {
            if (!reg && e.reg()) {
                reg = e.reg();
            }
        }
    }
    laplace l{m, reg, {}};
    return l.minor(0, n == 0 ? 0 : (std::uint64_t{1} << n) - 1);
}

sparse_poly resultant(const sparse_poly &p, const sparse_poly &q, var_id v)
{
    if (p.is_zero() || q.is_zero()) {
        throw usage_error("resultant of a zero polynomial");
    }
    const auto a = p.coefficients_in(v);
    const auto b = q.coefficients_in(v);
    const std::size_t dp = a.size() - 1, dq = b.size() - 1;
    const std::size_t n = dp + dq;
    if (n == 0) {
        return sparse_poly::constant(p.reg() ? p.reg() : q.reg(), 1);
    }
    const registry_ptr reg = p.reg() ? p.reg() : q.reg();
    std::vector<std::vector<sparse_poly>> s(n, std::vector<sparse_poly>(n, sparse_poly(reg)));
    for (std::size_t r = 0; r < dq; ++r) {
        for (std::size_t k = 0; k <= dp; ++k) {
            s[r][r + k] = a[dp - k];
        }
    }
    for (std::size_t r = 0; r < dp; ++r) {
        for (std::size_t k = 0; k <= dq; ++k) {
            s[dq + r][r + k] = b[dq - k];
        }
    }
    return determinant(s);
}

} // namespace trigonal
