#pragma once

#include <cstddef>
#include <vector>

#include "toric/divisor.hpp"
#include "toric/fan.hpp"

namespace toric {

/// P_D = { m in M_R : <m, u_rho> >= -a_rho for every ray }.
struct DivisorPolytope {
    std::size_t ambient_dim = 0;
    std::vector<IntVector> normals;   // u_rho
    IntVector bounds;                 // -a_rho
    std::vector<RatVector> vertices;  // sorted lexicographically
    int dim = -1;                     // -1 encodes the empty polytope

    bool empty() const { return dim < 0; }
    bool contains(const IntVector& m) const;
    bool contains(const RatVector& m) const;
    /// Rows that hold with equality on all of P (they cut out the affine hull).
    std::vector<std::size_t> implicit_equalities() const;
};

/// True iff the recession cone { <m, u_rho> >= 0 } is trivial.
bool has_bounded_polytopes(const Fan& fan);

/// Throws HypothesisError when P_D would be unbounded.
DivisorPolytope divisor_polytope(const Fan& fan, const TDivisor& d);

/// Lattice points of P (or of its relative interior), sorted lexicographically.
std::vector<IntVector> lattice_points(const DivisorPolytope& p, bool interior_only);

/// Every Cartier witness m_sigma lies in P_D. Throws HypothesisError when D
/// is not Cartier.
bool is_basepoint_free(const Fan& fan, const TDivisor& d);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

}  // namespace toric
