#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// Torus-invariant Weil divisor sum a_rho D_rho, coefficients aligned with the
/// fan's ray order.
struct TDivisor {
    IntVector coeffs;

    bool operator==(const TDivisor&) const = default;
    TDivisor operator+(const TDivisor& o) const { return {coeffs + o.coeffs}; }
    TDivisor operator-() const { return {-coeffs}; }
};

inline TDivisor operator*(const Integer& k, const TDivisor& d) { return {k * d.coeffs}; }

/// Throws InputError when the coefficient count does not match the ray count.
void check_divisor(const Fan& fan, const TDivisor& d);

/// div(m) = sum <m, u_rho> D_rho.
TDivisor principal_divisor(const Fan& fan, const IntVector& m);

/// Matrix of m -> div(m): one row u_rho per ray.
IntMatrix div_map(const Fan& fan);

struct ClassGroup {
    AbelianGroupPresentation presentation;
    IntMatrix div_map;

    GroupElement class_of(const TDivisor& d) const { return presentation.project(d.coeffs); }
};

/// Cl(X) = Z^{rays} / im(div). Throws HypothesisError when the rays do not
/// span N_R (the variety would have a torus factor).
ClassGroup class_group(const Fan& fan);

/// Local data m_sigma with <m_sigma, u_rho> = -a_rho for rho in sigma(1).
struct CartierData {
    bool cartier = false;
    std::vector<IntVector> witnesses;     // one per maximal cone when cartier
    std::optional<std::size_t> failing_cone;
};

CartierData is_cartier(const Fan& fan, const TDivisor& d);

/// Rational local data; exists on every simplicial fan (Q-Cartier).
std::optional<std::vector<RatVector>> rational_witnesses(const Fan& fan, const TDivisor& d);

/// Pic(X) as the subgroup of Cartier classes in Cl(X). Built from the fan
/// alone: the lattice of Cartier divisors modulo principal ones.
struct PicardGroup {
    AbelianGroupPresentation presentation;  // ambient = coordinates in cartier_basis
    IntMatrix cartier_basis;                // rays x k, columns span CDiv_T(X)
    IntMatrix generators_in_cl;             // class-group coordinates of Pic generators
    std::optional<Integer> index_in_cl;     // [Cl : Pic] when finite
    bool equals_class_group = false;

    /// Coordinates of a Cartier divisor's class. Throws HypothesisError otherwise.
    GroupElement class_of(const TDivisor& d) const;
    /// A Cartier divisor with the given class.
    TDivisor representative(const GroupElement& e) const;
};

/// Throws HypothesisError for non-complete fans.
PicardGroup picard_group(const Fan& fan);

/// Exponents m_ij of a monic-monomial Cech cocycle on the maximal-cone cover.
class MonomialCocycle {
public:
    MonomialCocycle() = default;
    MonomialCocycle(std::size_t num_cones, std::size_t rank);

    std::size_t num_cones() const { return n_; }
    std::size_t rank() const { return rank_; }
    IntVector& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const IntVector& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    MonomialCocycle operator-(const MonomialCocycle& o) const;
    bool operator==(const MonomialCocycle&) const = default;

private:
    std::size_t n_ = 0;
    std::size_t rank_ = 0;
    std::vector<IntVector> entries_;
};

/// m_ij = m_{sigma_i} - m_{sigma_j}. Throws HypothesisError for non-Cartier input.
MonomialCocycle divisor_to_cocycle(const Fan& fan, const TDivisor& d);

/// Antisymmetry, the cocycle identity, and m_ij in (sigma_i cap sigma_j)^dual.
bool is_valid_cocycle(const Fan& fan, const MonomialCocycle& a);

/// True iff a - b is a coboundary (m_i - m_j) with each m_i a unit exponent
/// on its chart, i.e. m_i in sigma_i^perp.
bool cocycle_class_equal(const Fan& fan, const MonomialCocycle& a, const MonomialCocycle& b);

/// Pullback along the t-th power map: m_ij -> t * m_ij.
MonomialCocycle pullback_by_power_map(const MonomialCocycle& a, const Integer& t);

}  // namespace toric
