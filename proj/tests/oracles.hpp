#pragma once

// Independent reference computations. Nothing here calls the library's
// linear algebra: ranks use a separate mpq Gaussian elimination and lattice
// counts use plain nested scans.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "toric/fan.hpp"

namespace oracle {

using toric::Fan;
using toric::IntVector;

/// Rank of a rational matrix by fraction-field elimination.
inline std::size_t rank_q(std::vector<std::vector<mpq_class>> a) {
    std::size_t r = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const mpq_class f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

/// Graded Cech cohomology at degree m, built from explicit index lists.
/// Returns dims for i = 0 .. rank.
inline std::vector<std::size_t> brute_cech(const Fan& fan, const IntVector& a, const IntVector& m) {
    const std::size_t r = fan.num_max_cones();
    const std::size_t n = fan.rank();
    auto satisfied = [&](std::size_t ray) {
        mpz_class s = 0;
        for (std::size_t j = 0; j < n; ++j) s += m[j] * fan.ray(ray)[j];
        return s >= -a[ray];
    };
    // cochains: sorted index tuples whose common rays are all satisfied
    std::vector<std::vector<std::vector<std::size_t>>> cochains(r);
    std::vector<std::size_t> tuple;
    std::function<void(std::size_t)> grow = [&](std::size_t start) {
        if (!tuple.empty()) {
            bool ok = true;
            for (std::size_t ray = 0; ray < fan.num_rays() && ok; ++ray) {
                const bool common = std::all_of(tuple.begin(), tuple.end(),
                                                [&](std::size_t c) { return fan.max_cone(c).contains_ray(ray); });
                if (common && !satisfied(ray)) ok = false;
            }
            if (ok) cochains[tuple.size() - 1].push_back(tuple);
        }
        for (std::size_t c = start; c < r; ++c) {
            tuple.push_back(c);
            grow(c + 1);
            tuple.pop_back();
        }
    };
    grow(0);
    for (auto& level : cochains) std::sort(level.begin(), level.end());

    std::vector<std::size_t> ranks(r + 1, 0);  // ranks[k] = rank of C^k -> C^{k+1}
    for (std::size_t k = 0; k + 1 < r; ++k) {
        const auto& src = cochains[k];
        const auto& dst = cochains[k + 1];
        if (src.empty() || dst.empty()) continue;
        std::vector<std::vector<mpq_class>> mat(dst.size(), std::vector<mpq_class>(src.size(), 0));
        for (std::size_t row = 0; row < dst.size(); ++row)
            for (std::size_t l = 0; l < dst[row].size(); ++l) {
                auto face = dst[row];
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(l));
                auto it = std::lower_bound(src.begin(), src.end(), face);
                if (it != src.end() && *it == face)
                    mat[row][static_cast<std::size_t>(it - src.begin())] = (l % 2 == 0) ? 1 : -1;
            }
        ranks[k] = rank_q(mat);
    }
    std::vector<std::size_t> dims(n + 1, 0);
    for (std::size_t k = 0; k < r; ++k) {
        const std::size_t h = cochains[k].size() - ranks[k] - (k ? ranks[k - 1] : 0);
        if (k <= n) dims[k] = h;
        else if (h != 0) dims.push_back(h);  // signals a broken complex to the caller
    }
    return dims;
}

/// Sum of brute_cech over an integer box.
inline std::vector<std::size_t> brute_cech_total(const Fan& fan, const IntVector& a, const IntVector& lo,
                                                 const IntVector& hi) {
    std::vector<std::size_t> total(fan.rank() + 1, 0);
    IntVector m = lo;
    for (;;) {
        const auto dims = brute_cech(fan, a, m);
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += dims[i];
        std::size_t j = m.size();
        while (true) {
            if (j == 0) return total;
            --j;
            if (m[j] < hi[j]) {
                ++m[j];
                break;
            }
            m[j] = lo[j];
        }
    }
}

/// Lattice points of d * (standard simplex) in Z^n, optionally strict interior.
inline std::size_t simplex_points(long d, std::size_t n, bool interior) {
    std::size_t count = 0;
    std::vector<long> x(n, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long used) {
        if (i == n) {
            const long slack = d - used;
            if (!interior || slack > 0) ++count;
            return;
        }
        for (long v = interior ? 1 : 0; used + v <= d; ++v) rec(i + 1, used + v);
    };
    rec(0, 0);
    return count;
}

/// Lattice points of [0,a] x [0,b].
inline std::size_t rectangle_points(long a, long b, bool interior) {
    if (interior) return static_cast<std::size_t>(std::max(0L, a - 1) * std::max(0L, b - 1));
    return static_cast<std::size_t>((a + 1) * (b + 1));
}

/// Integer points of {m : <m,u_rho> >= -a_rho} inside a box, by direct scan.
inline std::size_t box_scan(const Fan& fan, const IntVector& a, long radius, bool strict) {
    const std::size_t n = fan.rank();
    std::size_t count = 0;
    std::vector<long> m(n, -radius);
    for (;;) {
        bool inside = true;
        for (std::size_t r = 0; r < fan.num_rays() && inside; ++r) {
            mpz_class s = 0;
            for (std::size_t j = 0; j < n; ++j) s += m[j] * fan.ray(r)[j];
            inside = strict ? s > -a[r] : s >= -a[r];
        }
        if (inside) ++count;
        std::size_t j = n;
        while (true) {
            if (j == 0) return count;
            --j;
            if (m[j] < radius) {
                ++m[j];
                break;
            }
            m[j] = -radius;
        }
    }
}

/// Bounded search for x in [-bound, bound]^n with A x = b.
inline std::optional<std::vector<long>> search_integer_solution(const std::vector<std::vector<long>>& A,
                                                                const std::vector<long>& b, long bound) {
    const std::size_t n = A.empty() ? 0 : A[0].size();
    std::vector<long> x(n, -bound);
    for (;;) {
        bool ok = true;
        for (std::size_t i = 0; i < A.size() && ok; ++i) {
            long s = 0;
            for (std::size_t j = 0; j < n; ++j) s += A[i][j] * x[j];
            ok = s == b[i];
        }
        if (ok) return x;
        std::size_t j = n;
        while (true) {
            if (j == 0) return std::nullopt;
            --j;
            if (x[j] < bound) {
                ++x[j];
                break;
            }
            x[j] = -bound;
        }
    }
}

/// Determinant by cofactor expansion.
inline mpz_class leibniz_det(const std::vector<std::vector<long>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    mpz_class d = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<long>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<long> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(a[r][k]);
            minor.push_back(row);
        }
        const mpz_class term = a[0][c] * leibniz_det(minor);
        d += (c % 2 == 0) ? term : mpz_class(-term);
    }
    return d;
}

/// Rank-2 cone intersection: in the plane, cone(a,b) cap cone(c,d) is spanned
/// by the generators of each cone that lie in the other.
inline long cross(const IntVector& u, const IntVector& v) { return mpz_class(u[0] * v[1] - u[1] * v[0]).get_si(); }

inline bool in_planar_cone(const IntVector& v, const std::vector<IntVector>& gens) {
    if (gens.empty()) return false;
    if (gens.size() == 1) return cross(gens[0], v) == 0 && (gens[0][0] * v[0] + gens[0][1] * v[1]) > 0;
    const long s = cross(gens[0], gens[1]);
    const IntVector &a = s > 0 ? gens[0] : gens[1], &b = s > 0 ? gens[1] : gens[0];
    return cross(a, v) >= 0 && cross(v, b) >= 0;
}

inline std::set<std::size_t> planar_intersection_rays(const Fan& fan, const toric::Cone& c1, const toric::Cone& c2) {
    std::set<std::size_t> out;
    const auto g1 = fan.generators(c1), g2 = fan.generators(c2);
    for (auto r : c1.rays)
        if (in_planar_cone(fan.ray(r), g2)) out.insert(r);
    for (auto r : c2.rays)
        if (in_planar_cone(fan.ray(r), g1)) out.insert(r);
    return out;
}

}  // namespace oracle
