#pragma once

// Pic(X)[1/p] arithmetic and level-wise cohomology for the p-power tower
// ... <- X <- X <- X, with transition maps the p-th power map.
//
// A bundle (c, k) stands for the formal p^k-th root of the class c, that is
// c / p^k in Pic(X) (x) Z[1/p]. Normal form: k = 0 or c is not divisible by
// p, and the p-primary torsion of c is zero (it dies after inverting p).

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toric/cohomology.hpp"
#include "toric/divisor.hpp"
#include "toric/fan.hpp"

namespace toric {

/// Zero out the p-primary torsion coordinates of c.
GroupElement kill_p_torsion(const AbelianGroupPresentation& g, const GroupElement& c, unsigned long p);
/// x with p x = c modulo p-primary torsion, when it exists. The answer has
/// no p-primary torsion, which makes it unique.
std::optional<GroupElement> divide_by_p(const AbelianGroupPresentation& g, const GroupElement& c, unsigned long p);

/// Fan, prime and Picard group shared by every bundle on the same tower.
class PerfectoidSpace {
public:
    /// Requires a complete fan and a prime p. Smoothness stands in for the
    /// trivialization of Pic on the affinoid cover; `assume_trivialization`
    /// waives that check.
    PerfectoidSpace(Fan fan, unsigned long p, bool assume_trivialization = false);

    const Fan& fan() const { return fan_; }
    unsigned long p() const { return p_; }
    const PicardGroup& pic() const { return pic_; }
    bool trivialization_assumed() const { return assumed_; }

    bool same_tower(const PerfectoidSpace& other) const;

private:
    Fan fan_;
    unsigned long p_;
    bool assumed_;
    PicardGroup pic_;
};

using SpacePtr = std::shared_ptr<const PerfectoidSpace>;

SpacePtr make_perfectoid_space(Fan fan, unsigned long p, bool assume_trivialization = false);

struct PerfectoidBundle {
    SpacePtr space;
    std::size_t level = 0;
    GroupElement base_class;
    /// Cartier divisor whose class is base_class.
    std::optional<TDivisor> representative;

    unsigned long p() const { return space->p(); }
    /// Equality in Pic(X)[1/p]; representatives are ignored.
    bool operator==(const PerfectoidBundle& other) const;
};

/// (class of D)^{1/p^k}, normalized.
PerfectoidBundle from_divisor(const SpacePtr& space, const TDivisor& d, std::size_t level);
PerfectoidBundle trivial_bundle(const SpacePtr& space);
PerfectoidBundle normalize(PerfectoidBundle b);

PerfectoidBundle tensor(const PerfectoidBundle& a, const PerfectoidBundle& b);
PerfectoidBundle inverse(const PerfectoidBundle& a);
/// Multiplication by p: (c, k) -> (c, k-1) for k > 0, else (p c, 0).
PerfectoidBundle frobenius_pullback(const PerfectoidBundle& a);
/// Formal p-th root, the inverse of frobenius_pullback.
PerfectoidBundle root(const PerfectoidBundle& a);

/// Some Cartier divisor with the bundle's base class.
TDivisor representative_of(const PerfectoidBundle& a);

struct PerfectoidPicDescription {
    std::string base;       // Pic(X)
    std::string localized;  // Pic(X) (x) Z[1/p]
    std::size_t free_rank = 0;
    std::vector<Integer> surviving_torsion;  // prime-to-p parts > 1
    std::vector<Integer> killed_torsion;     // p-primary parts > 1
};

PerfectoidPicDescription perfectoid_pic(const AbelianGroupPresentation& pic, unsigned long p);
PerfectoidPicDescription perfectoid_pic(const Fan& fan, unsigned long p, bool assume_trivialization = false);

enum class SeriesVerdict { Vanishes, StabilizesToBasis, Growing };
std::string to_string(SeriesVerdict v);

struct LevelSeries {
    std::size_t degree = 0;          // cohomological degree i
    std::vector<std::size_t> dims;   // dims[n] = dim H^i(X, O(p^n D))
    SeriesVerdict verdict = SeriesVerdict::Vanishes;
    /// Graded bases per level: sorted degrees with nonzero H^i.
    std::vector<std::vector<IntVector>> bases;
};

/// Cohomology tables of p^n D for n = 0 .. n_max, graded.
std::vector<CohomologyTable> level_tables(const PerfectoidBundle& l, std::size_t n_max);

LevelSeries series_from_tables(const std::vector<CohomologyTable>& tables, std::size_t i, unsigned long p);
LevelSeries cohomology_series(const PerfectoidBundle& l, std::size_t i, std::size_t n_max);

/// dim P_D of the representative, -1 for an empty polytope.
int d_L(const PerfectoidBundle& l);

struct PerfectoidDemazureResult {
    Verdict verdict = Verdict::NotApplicable;
    std::vector<LevelSeries> series;  // i = 1 .. rank
    std::optional<std::size_t> offending_degree;
    std::string note;
};

PerfectoidDemazureResult perfectoid_demazure(const PerfectoidBundle& l, std::size_t n_max);

struct PerfectoidBBResult {
    Verdict verdict = Verdict::NotApplicable;
    int d_L = -1;
    std::vector<LevelSeries> series;              // of inverse(L), i = 0 .. rank
    std::vector<std::vector<IntVector>> bases;    // level n: -(Relint(p^n P_D) cap M)
    bool embeddings_verified = false;
    /// Union over levels of the basis degrees m / p^n, sorted and deduplicated.
    std::vector<RatVector> p_divisible_basis;
    std::string note;
};

PerfectoidBBResult perfectoid_bb(const PerfectoidBundle& l, std::size_t n_max);

bool is_prime(unsigned long p);

}  // namespace toric
