#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// Largest lattice rank accepted. Every algorithm here enumerates subsets of
/// rays or cones, so cost grows exponentially with the rank.
inline constexpr std::size_t kMaxRank = 6;

/// A cone of a fan, named by the indices of its rays in the fan's ray list.
struct Cone {
    std::vector<std::size_t> rays;  // sorted, unique
    std::size_t dim = 0;

    bool operator==(const Cone& other) const { return rays == other.rays; }
    bool contains_ray(std::size_t r) const;
};

/// A rational polyhedral fan in N = Z^rank, stored by its maximal cones.
/// Faces are derived on demand. Rays are made primitive on construction.
class Fan {
public:
    Fan(std::size_t rank, std::vector<IntVector> rays, std::vector<std::vector<std::size_t>> max_cones);

    std::size_t rank() const { return rank_; }
    const std::vector<IntVector>& rays() const { return rays_; }
    const IntVector& ray(std::size_t i) const { return rays_.at(i); }
    std::size_t num_rays() const { return rays_.size(); }

    const std::vector<Cone>& max_cones() const { return cones_; }
    const Cone& max_cone(std::size_t i) const { return cones_.at(i); }
    std::size_t num_max_cones() const { return cones_.size(); }

    std::vector<IntVector> generators(const Cone& c) const;
    /// Cone with the given ray indices (sorted, deduplicated), dimension filled in.
    Cone make_cone(std::vector<std::size_t> ray_indices) const;

    /// "D0", "D1", ... paired with the ray vectors; echoed in reports.
    std::vector<std::string> ray_labels() const;

private:
    std::size_t rank_;
    std::vector<IntVector> rays_;
    std::vector<Cone> cones_;
};

struct FanReport {
    bool valid = false;
    bool smooth = false;
    bool complete = false;
    bool simplicial = false;
    std::vector<std::string> diagnostics;
};

FanReport validate_fan(const Fan& fan);

bool is_smooth(const Fan& fan);
bool is_simplicial(const Fan& fan);
bool is_complete(const Fan& fan);

/// Completeness verdict plus the reason when it fails.
bool is_complete(const Fan& fan, std::vector<std::string>& diagnostics);

/// Every face of `c`, including the zero cone and `c` itself.
std::vector<Cone> faces(const Fan& fan, const Cone& c);

/// The common face of c1 and c2. Throws HypothesisError when the
/// intersection is not a face of both.
Cone cone_intersection(const Fan& fan, const Cone& c1, const Cone& c2);

}  // namespace toric
