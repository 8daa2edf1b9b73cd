#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/cohomology_kernels.hpp"
#include "toric/divisor.hpp"
#include "toric/fan.hpp"

namespace toric {

enum class CohomologyKernel { Parallel, Serial };

struct CohomologyOptions {
    bool want_graded = false;
    /// Recompute every rank over F_p and compare.
    std::optional<unsigned long> modp_check;
    CohomologyKernel kernel = CohomologyKernel::Parallel;
};

struct GradedPiece {
    IntVector degree;
    std::size_t multiplicity = 0;
};

struct CohomologyTable {
    std::vector<std::size_t> dims;  // index i = 0 .. rank
    /// Per i, degrees with nonzero H^i_m, sorted lexicographically.
    std::optional<std::vector<std::vector<GradedPiece>>> graded;
    kernels::DegreeBox region;
    std::size_t degrees_scanned = 0;
    std::size_t sign_patterns = 0;
    /// sum_i (-1)^i dims[i] against sum over patterns of count * chi(C^*)
    long long euler_characteristic = 0;
    bool euler_consistent = true;
    std::optional<bool> modp_agrees;
};

/// Throws HypothesisError unless the fan is complete and simplicial.
void require_cohomology_hypotheses(const Fan& fan);

/// Integer hull of the rational Cartier data and the vertices of P_D, with a
/// margin of one in every coordinate.
kernels::DegreeBox support_region(const Fan& fan, const TDivisor& d);

/// dim H^i(X, O(D))_m for i = 0 .. rank.
std::vector<std::size_t> graded_piece_cohomology(const Fan& fan, const TDivisor& d, const IntVector& m);

CohomologyTable cohomology(const Fan& fan, const TDivisor& d, const CohomologyOptions& options);
CohomologyTable cohomology(const Fan& fan, const TDivisor& d, bool want_graded = false);

/// One fresh Cech complex per degree: no census, no memo, no threads.
CohomologyTable cohomology_reference(const Fan& fan, const TDivisor& d, bool want_graded = false);

enum class Verdict { Pass, Fail, NotApplicable };
std::string to_string(Verdict v);

struct DemazureResult {
    Verdict verdict = Verdict::NotApplicable;
    std::optional<std::size_t> offending_degree;
    std::optional<CohomologyTable> table;
    std::string note;
};

/// Basepoint-free D must have dims[i] = 0 for i > 0.
DemazureResult demazure_vanishing_check(const Fan& fan, const TDivisor& d);

struct BatyrevBorisovResult {
    Verdict verdict = Verdict::NotApplicable;
    int polytope_dim = -1;
    std::vector<IntVector> interior_points;  // Relint(P_D) cap M
    std::vector<IntVector> predicted_basis;  // their negatives, sorted
    std::optional<CohomologyTable> table;    // of -D, graded
    std::string note;
};

/// For basepoint-free D, H^i(-D) vanishes off i = dim P_D and has a basis
/// indexed by -(Relint(P_D) cap M) there.
BatyrevBorisovResult batyrev_borisov_check(const Fan& fan, const TDivisor& d);

}  // namespace toric
