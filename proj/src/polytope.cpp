#include "toric/polytope.hpp"

#include <algorithm>
#include <set>

#include "toric/errors.hpp"
#include "toric/polyhedral.hpp"

namespace toric {

namespace {

Rational pairing(const IntVector& u, const RatVector& m) {
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * m[i];
    return s;
}

}  // namespace

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

bool DivisorPolytope::contains(const IntVector& m) const {
    for (std::size_t r = 0; r < normals.size(); ++r)
        if (dot(normals[r], m) < bounds[r]) return false;
    return true;
}

bool DivisorPolytope::contains(const RatVector& m) const {
    for (std::size_t r = 0; r < normals.size(); ++r)
        if (pairing(normals[r], m) < bounds[r]) return false;
    return true;
}

std::vector<std::size_t> DivisorPolytope::implicit_equalities() const {
    std::vector<std::size_t> rows;
    if (empty()) return rows;
    for (std::size_t r = 0; r < normals.size(); ++r)
        if (std::all_of(vertices.begin(), vertices.end(),
                        [&](const RatVector& v) { return pairing(normals[r], v) == bounds[r]; }))
            rows.push_back(r);
    return rows;
}

bool has_bounded_polytopes(const Fan& fan) {
    if (rank(div_map(fan)) != fan.rank()) return false;
    return poly::extreme_rays(fan.rays(), {}, fan.rank()).empty();
}

DivisorPolytope divisor_polytope(const Fan& fan, const TDivisor& d) {
    check_divisor(fan, d);
    if (!has_bounded_polytopes(fan))
        throw HypothesisError("divisor polytopes are unbounded on this fan (rays do not positively span N_R)");
    DivisorPolytope p;
    p.ambient_dim = fan.rank();
    p.normals = fan.rays();
    for (const auto& a : d.coeffs) p.bounds.push_back(-a);

    const std::size_t n = fan.rank();
    std::set<RatVector> vertices;
    poly::for_each_combination(p.normals.size(), n, [&](const poly::IndexSet& rows) {
        IntMatrix A(n, n);
        RatVector b;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) A(i, j) = p.normals[rows[i]][j];
            b.emplace_back(p.bounds[rows[i]]);
        }
        if (determinant(A) == 0) return true;
        auto v = solve_rational_system(A, b);
        if (v && p.contains(*v)) vertices.insert(std::move(*v));
        return true;
    });
    p.vertices.assign(vertices.begin(), vertices.end());
    if (!p.vertices.empty()) {
        std::vector<RatVector> diffs;
        for (std::size_t i = 1; i < p.vertices.size(); ++i) {
            RatVector dv(n);
            for (std::size_t j = 0; j < n; ++j) dv[j] = p.vertices[i][j] - p.vertices[0][j];
            diffs.push_back(std::move(dv));
        }
        p.dim = static_cast<int>(rank(diffs));
    }
    return p;
}

std::vector<IntVector> lattice_points(const DivisorPolytope& p, bool interior_only) {
    std::vector<IntVector> points;
    if (p.empty()) return points;
    const std::size_t n = p.ambient_dim;
    IntVector lo(n), hi(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational mn = p.vertices[0][j], mx = p.vertices[0][j];
        for (const auto& v : p.vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = ceil_of(mn);
        hi[j] = floor_of(mx);
        if (lo[j] > hi[j]) return points;
    }
    std::vector<bool> implicit(p.normals.size(), false);
    for (auto r : p.implicit_equalities()) implicit[r] = true;

    IntVector m = lo;
    for (;;) {
        bool inside = true;
        for (std::size_t r = 0; r < p.normals.size() && inside; ++r) {
            const Integer v = dot(p.normals[r], m);
            if (v < p.bounds[r]) inside = false;
            else if (interior_only && !implicit[r] && v == p.bounds[r]) inside = false;
        }
        if (inside) points.push_back(m);
        std::size_t j = n;
        while (j > 0) {
            --j;
            if (m[j] < hi[j]) {
                ++m[j];
                break;
            }
            m[j] = lo[j];
            if (j == 0) return points;
        }
    }
}

bool is_basepoint_free(const Fan& fan, const TDivisor& d) {
    const CartierData data = is_cartier(fan, d);
    if (!data.cartier) throw HypothesisError("basepoint freeness needs a Cartier divisor");
    for (const auto& m : data.witnesses)
        for (std::size_t r = 0; r < fan.num_rays(); ++r)
            if (dot(m, fan.ray(r)) < -d.coeffs[r]) return false;
    return true;
}

}  // namespace toric
