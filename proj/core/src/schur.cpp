#include <trigonal/schur.hpp>

#include <algorithm>

#include <trigonal/errors.hpp>
#include <trigonal/resultant.hpp>

namespace trigonal
{

partition weierstrass_partition(const std::vector<int> &gaps)
{
    const int g = static_cast<int>(gaps.size());
    partition p;
    for (int k = 1; k <= g; ++k) {
        const int part = gaps[static_cast<std::size_t>(g - k)] + k - g;
        if (part <= 0) {
            throw internal_error("non-positive Weierstrass partition entry");
        }
        p.push_back(part);
    }
    if (!std::is_sorted(p.rbegin(), p.rend())) {
        throw internal_error("Weierstrass partition is not non-increasing");
    }
    return p;
}

partition conjugate(const partition &p)
{
    partition c;
    if (p.empty()) {
        return c;
    }
    for (int j = 1; j <= p.front(); ++j) {
        c.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [&](int part) { return part >= j; })));
    }
    return c;
}

int partition_size(const partition &p)
{
    int s = 0;
    for (int part : p) {
        s += part;
    }
    return s;
}

registry_ptr make_newton_registry()
{
    weight_table t;
    t.newton = true;
    return make_registry(t);
}

std::vector<sparse_poly> elementary_in_newton(const registry_ptr &reg, int max)
{
    std::vector<sparse_poly> e;
    e.push_back(sparse_poly::constant(reg, 1));
    for (int k = 1; k <= max; ++k) {
        sparse_poly acc(reg);
        for (int i = 1; i <= k; ++i) {
            auto t = e[static_cast<std::size_t>(k - i)] * sparse_poly::var(reg, make_newton(i));
            if (i % 2) {
                acc += t;
            } else {
                acc -= t;
            }
        }
        e.push_back(acc * rational(1, k));
    }
    return e;
}

sparse_poly elementary_by_determinant(const registry_ptr &reg, int k)
{
    if (k == 0) {
        return sparse_poly::constant(reg, 1);
    }
    const auto n = static_cast<std::size_t>(k);
    std::vector<std::vector<sparse_poly>> m(n, std::vector<sparse_poly>(n, sparse_poly(reg)));
    rational fact = 1;
    for (std::size_t i = 0; i < n; ++i) {
        fact *= static_cast<unsigned long>(i + 1);
        for (std::size_t j = 0; j <= i; ++j) {
            m[i][j] = sparse_poly::var(reg, make_newton(static_cast<int>(i - j + 1)));
        }
        if (i + 1 < n) {
            m[i][i + 1] = sparse_poly::constant(reg, static_cast<unsigned long>(i + 1));
        }
    }
    return determinant(m) * (1 / fact);
}

std::vector<sparse_poly> complete_in_newton(const registry_ptr &reg, int max)
{
    std::vector<sparse_poly> h;
    h.push_back(sparse_poly::constant(reg, 1));
    for (int k = 1; k <= max; ++k) {
        sparse_poly acc(reg);
        for (int i = 1; i <= k; ++i) {
            acc += h[static_cast<std::size_t>(k - i)] * sparse_poly::var(reg, make_newton(i));
        }
        h.push_back(acc * rational(1, k));
    }
    return h;
}

namespace
{

sparse_poly jacobi_trudi(const registry_ptr &reg, const partition &p, const std::vector<sparse_poly> &seq)
{
    const auto m = p.size();
    std::vector<std::vector<sparse_poly>> mat(m, std::vector<sparse_poly>(m, sparse_poly(reg)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const int k = p[i] - static_cast<int>(i) + static_cast<int>(j);
            if (k >= 0) {
                mat[i][j] = seq.at(static_cast<std::size_t>(k));
            }
        }
    }
    return determinant(mat);
}

int max_index(const partition &p)
{
    return p.empty() ? 0 : p.front() + static_cast<int>(p.size()) - 1;
}

} // namespace

sparse_poly schur_from_partition(const registry_ptr &reg, const partition &p)
{
    const auto c = conjugate(p);
    return jacobi_trudi(reg, c, elementary_in_newton(reg, max_index(c)));
}

sparse_poly schur_by_complete(const registry_ptr &reg, const partition &p)
{
    return jacobi_trudi(reg, p, complete_in_newton(reg, max_index(p)));
}

schur_weierstrass_result schur_weierstrass(const curve_model &curve)
{
    schur_weierstrass_result r;
    r.weierstrass = weierstrass_partition(curve.gaps);
    auto nreg = make_newton_registry();
    r.in_newton = schur_from_partition(nreg, r.weierstrass);

    const int g = curve.genus;
    std::vector<std::optional<sparse_poly>> image(static_cast<std::size_t>(curve.gaps.back() + 1));
    for (int i = 1; i <= g; ++i) {
        const int w = curve.gaps[static_cast<std::size_t>(i - 1)];
        image[static_cast<std::size_t>(w)] = sparse_poly::var(curve.reg, curve.u_id(g + 1 - i)) * rational(w);
    }
    std::vector<sparse_poly::term> terms;
    sparse_poly sw(curve.reg);
    for (const auto &[m, c] : r.in_newton.terms()) {
        sparse_poly t = sparse_poly::constant(curve.reg, c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            const int k = nreg->var(m.var_at(i)).indices[0];
            if (k >= static_cast<int>(image.size()) || !image[static_cast<std::size_t>(k)]) {
                throw internal_error("Newton sum p" + std::to_string(k) + " survives but is not a gap");
            }
            t = t * image[static_cast<std::size_t>(k)]->pow(m.exp_at(i));
        }
        sw += t;
    }
    r.sw = std::move(sw);
    return r;
}

} // namespace trigonal
