#include "toric/polyhedral.hpp"

#include <algorithm>
#include <set>

namespace toric::poly {

void for_each_combination(std::size_t n, std::size_t k, const std::function<bool(const IndexSet&)>& fn) {
    if (k > n) return;
    IndexSet idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (!fn(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

IntVector primitive(IntVector v) {
    const Integer g = content(v);
    if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

bool ConeGeometry::contains(const IntVector& x) const {
    for (const auto& e : equations)
        if (dot(e, x) != 0) return false;
    for (const auto& f : facet_normals)
        if (dot(f, x) < 0) return false;
    return true;
}

bool ConeGeometry::contains(const RatVector& x) const {
    auto eval = [&](const IntVector& a) {
        Rational s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
        return s;
    };
    for (const auto& e : equations)
        if (eval(e) != 0) return false;
    for (const auto& f : facet_normals)
        if (eval(f) < 0) return false;
    return true;
}

ConeGeometry cone_geometry(const std::vector<IntVector>& generators, std::size_t ambient_dim) {
    ConeGeometry g;
    g.ambient_dim = ambient_dim;
    const IntMatrix G = IntMatrix::from_rows(generators, ambient_dim);
    g.dim = rank(G);
    const IntMatrix K = integer_kernel(G);
    for (std::size_t c = 0; c < K.cols(); ++c) g.equations.push_back(K.col(c));
    if (g.dim == 0) return g;

    // A basis of the linear span chosen among the generators.
    std::vector<IntVector> basis;
    for (const auto& u : generators) {
        basis.push_back(u);
        if (rank(IntMatrix::from_rows(basis, ambient_dim)) < basis.size()) basis.pop_back();
        if (basis.size() == g.dim) break;
    }

    std::set<IndexSet> seen;
    for_each_combination(generators.size(), g.dim - 1, [&](const IndexSet& T) {
        std::vector<IntVector> tight;
        for (auto i : T) tight.push_back(generators[i]);
        if (!tight.empty() && rank(IntMatrix::from_rows(tight, ambient_dim)) != g.dim - 1) return true;
        // normal inside the span, orthogonal to the chosen generators
        IntMatrix C(T.size(), g.dim);
        for (std::size_t r = 0; r < T.size(); ++r)
            for (std::size_t j = 0; j < g.dim; ++j) C(r, j) = dot(basis[j], generators[T[r]]);
        const IntMatrix ker = integer_kernel(C);
        if (ker.cols() != 1) return true;
        IntVector m(ambient_dim, Integer(0));
        for (std::size_t j = 0; j < g.dim; ++j) m = m + ker(j, 0) * basis[j];
        m = primitive(std::move(m));
        bool pos = false, neg = false;
        IndexSet zero_set;
        for (std::size_t i = 0; i < generators.size(); ++i) {
            const Integer v = dot(m, generators[i]);
            if (v > 0) pos = true;
            else if (v < 0) neg = true;
            else zero_set.push_back(i);
        }
        if (pos && neg) return true;
        if (neg) m = -m;
        if (seen.insert(zero_set).second) {
            g.facet_normals.push_back(std::move(m));
            g.facet_generators.push_back(std::move(zero_set));
        }
        return true;
    });

    if (g.facet_generators.empty()) {
        g.pointed = false;
    } else {
        IndexSet common = g.facet_generators.front();
        for (const auto& f : g.facet_generators) {
            IndexSet out;
            std::set_intersection(common.begin(), common.end(), f.begin(), f.end(), std::back_inserter(out));
            common = std::move(out);
        }
        g.pointed = common.empty();
    }
    return g;
}

std::vector<IndexSet> cone_faces(const ConeGeometry& g, std::size_t num_generators) {
    IndexSet all(num_generators);
    for (std::size_t i = 0; i < num_generators; ++i) all[i] = i;
    std::set<IndexSet> faces{all};
    std::vector<IndexSet> frontier(g.facet_generators.begin(), g.facet_generators.end());
    while (!frontier.empty()) {
        std::vector<IndexSet> next;
        for (auto& f : frontier) {
            if (!faces.insert(f).second) continue;
            for (const auto& facet : g.facet_generators) {
                IndexSet out;
                std::set_intersection(f.begin(), f.end(), facet.begin(), facet.end(), std::back_inserter(out));
                if (!faces.count(out)) next.push_back(std::move(out));
            }
        }
        frontier = std::move(next);
    }
    return {faces.begin(), faces.end()};
}

std::vector<IntVector> extreme_rays(const std::vector<IntVector>& inequalities,
                                    const std::vector<IntVector>& equations, std::size_t ambient_dim) {
    const std::size_t eq_rank = equations.empty() ? 0 : rank(IntMatrix::from_rows(equations, ambient_dim));
    if (eq_rank + 1 > ambient_dim) return {};
    const std::size_t need = ambient_dim - 1 - eq_rank;
    std::set<IntVector> rays;
    for_each_combination(inequalities.size(), need, [&](const IndexSet& S) {
        std::vector<IntVector> rows = equations;
        for (auto i : S) rows.push_back(inequalities[i]);
        const IntMatrix M = rows.empty() ? IntMatrix(0, ambient_dim) : IntMatrix::from_rows(rows, ambient_dim);
        if (rank(M) != ambient_dim - 1) return true;
        const IntMatrix K = integer_kernel(M);
        IntVector v = primitive(K.col(0));
        for (int attempt = 0; attempt < 2; ++attempt) {
            const bool feasible = std::all_of(inequalities.begin(), inequalities.end(),
                                              [&](const IntVector& a) { return dot(a, v) >= 0; });
            if (feasible) {
                rays.insert(v);
                break;
            }
            v = -v;
        }
        return true;
    });
    return {rays.begin(), rays.end()};
}

}  // namespace toric::poly
