#pragma once

// Degree-scan kernels behind the cohomology module.
//
// The graded piece H^i(X, O(D))_m depends on m only through the sign pattern
// of <m, u_rho> + a_rho over the rays. The parallel kernel buckets the degree
// box by sign pattern (OpenMP over degrees), then evaluates one Cech complex
// per distinct pattern (OpenMP over patterns). The serial reference evaluates
// a fresh complex for every degree and exists to check the parallel path.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "toric/divisor.hpp"
#include "toric/fan.hpp"

namespace toric::kernels {

/// Integer box [lo, hi] in M, addressed by a flat row-major index.
struct DegreeBox {
    IntVector lo, hi;

    std::size_t size() const;
    IntVector point(std::size_t flat) const;
    bool contains(const IntVector& m) const;
};

/// Per ray: true iff <m, u_rho> >= -a_rho.
using SignPattern = std::vector<bool>;

SignPattern sign_pattern(const Fan& fan, const TDivisor& d, const IntVector& m);

/// For a degree m, the Cech cochains live on the index sets I of maximal
/// cones whose intersection has every ray satisfied. Presence is upward
/// closed: enlarging I shrinks the ray set of the intersection.
class SupportComplex {
public:
    SupportComplex(std::size_t num_cones, std::vector<bool> present);

    std::size_t num_cones() const { return num_cones_; }
    /// Index sets are bitmasks over maximal cones; the empty mask is unused.
    bool present(std::size_t mask) const { return present_[mask]; }

    /// dim C^k for k = 0 .. num_cones-1.
    std::vector<std::size_t> cochain_dims() const;
    /// dim H^k for k = 0 .. num_cones-1, ranks over Q, or over F_p when a
    /// prime is given.
    std::vector<std::size_t> cohomology(std::optional<unsigned long> prime = std::nullopt) const;

private:
    std::size_t num_cones_;
    std::vector<bool> present_;
};

/// Ray sets of all intersections of maximal cones, indexed by bitmask.
class CoverNerve {
public:
    /// Largest number of maximal cones the nerve will enumerate.
    static constexpr std::size_t kMaxCones = 16;

    explicit CoverNerve(const Fan& fan);

    std::size_t num_cones() const { return num_cones_; }
    SupportComplex support(const SignPattern& satisfied) const;

private:
    std::size_t num_cones_;
    std::vector<std::vector<std::size_t>> rays_of_;
};

struct PatternCensus {
    /// Flat box indices per sign pattern, each list sorted ascending.
    std::map<SignPattern, std::vector<std::size_t>> members;
};

PatternCensus census_serial(const Fan& fan, const TDivisor& d, const DegreeBox& box);
PatternCensus census_parallel(const Fan& fan, const TDivisor& d, const DegreeBox& box);

struct PatternCohomology {
    std::vector<std::size_t> dims;          // per Cech degree
    std::vector<std::size_t> cochain_dims;  // per Cech degree
    std::optional<std::vector<std::size_t>> dims_modp;
};

std::vector<PatternCohomology> evaluate_patterns(const CoverNerve& nerve, const std::vector<SignPattern>& patterns,
                                                 std::optional<unsigned long> prime, bool parallel);

}  // namespace toric::kernels
