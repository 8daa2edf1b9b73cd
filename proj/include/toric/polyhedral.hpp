#pragma once

// Small exact polyhedral toolkit for cones given by generators. Everything is
// brute force over subsets; inputs are expected to be desk-sized.

#include <cstddef>
#include <functional>
#include <vector>

#include "toric/lattice.hpp"

namespace toric::poly {

using IndexSet = std::vector<std::size_t>;

/// Calls fn(subset) for every size-k subset of {0, ..., n-1} in lexicographic order.
/// Enumeration stops early when fn returns false.
void for_each_combination(std::size_t n, std::size_t k, const std::function<bool(const IndexSet&)>& fn);

/// H-description of cone(generators): x in the cone iff <e, x> = 0 for all
/// equations and <f, x> >= 0 for all facet normals.
struct ConeGeometry {
    std::size_t ambient_dim = 0;
    std::size_t dim = 0;
    std::vector<IntVector> equations;
    std::vector<IntVector> facet_normals;
    /// For each facet, the (sorted) positions of the generators it contains.
    std::vector<IndexSet> facet_generators;
    bool pointed = true;

    bool contains(const IntVector& x) const;
    bool contains(const RatVector& x) const;
};

ConeGeometry cone_geometry(const std::vector<IntVector>& generators, std::size_t ambient_dim);

/// All faces of the cone as sets of generator positions: intersections of
/// facets, plus the whole generator set. Sorted, duplicates removed.
std::vector<IndexSet> cone_faces(const ConeGeometry& g, std::size_t num_generators);

/// Primitive extreme rays of the pointed cone {x : A x >= 0, E x = 0}.
/// Returns nothing for the zero cone.
std::vector<IntVector> extreme_rays(const std::vector<IntVector>& inequalities,
                                    const std::vector<IntVector>& equations, std::size_t ambient_dim);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(IntVector v);

}  // namespace toric::poly
