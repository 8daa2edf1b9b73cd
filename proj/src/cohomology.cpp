#include "toric/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

#include "toric/errors.hpp"
#include "toric/polytope.hpp"

namespace toric {

using kernels::CoverNerve;
using kernels::DegreeBox;
using kernels::PatternCohomology;
using kernels::SignPattern;

void require_cohomology_hypotheses(const Fan& fan) {
    if (!is_simplicial(fan)) throw HypothesisError("cohomology requires a simplicial fan");
    if (!is_complete(fan)) throw HypothesisError("cohomology requires a complete fan");
}

DegreeBox support_region(const Fan& fan, const TDivisor& d) {
    check_divisor(fan, d);
    const std::size_t n = fan.rank();
    auto witnesses = rational_witnesses(fan, d);
    if (!witnesses) throw HypothesisError("divisor has no rational Cartier data on this fan");
    std::vector<RatVector> points = std::move(*witnesses);
    if (has_bounded_polytopes(fan)) {
        const DivisorPolytope p = divisor_polytope(fan, d);
        points.insert(points.end(), p.vertices.begin(), p.vertices.end());
    }
    DegreeBox box{IntVector(n), IntVector(n)};
    for (std::size_t j = 0; j < n; ++j) {
        Rational lo = points.front()[j], hi = points.front()[j];
        for (const auto& v : points) {
            lo = std::min(lo, v[j]);
            hi = std::max(hi, v[j]);
        }
        box.lo[j] = floor_of(lo) - 1;
        box.hi[j] = ceil_of(hi) + 1;
    }
    return box;
}

namespace {

// Cech degrees beyond the rank must vanish on a simplicial cover.
std::vector<std::size_t> fold_to_rank(const std::vector<std::size_t>& cech, std::size_t n) {
    std::vector<std::size_t> dims(n + 1, 0);
    for (std::size_t k = 0; k < cech.size(); ++k) {
        if (k <= n) dims[k] = cech[k];
        else if (cech[k] != 0) throw std::logic_error("Cech cohomology above the rank");
    }
    return dims;
}

long long alternating_sum(const std::vector<std::size_t>& v) {
    long long s = 0;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(v[k]);
    return s;
}

void sort_graded(CohomologyTable& t) {
    if (!t.graded) return;
    for (auto& level : *t.graded)
        std::sort(level.begin(), level.end(),
                  [](const GradedPiece& a, const GradedPiece& b) { return a.degree < b.degree; });
}

void finish(CohomologyTable& t, long long chamber_euler) {
    t.euler_characteristic = alternating_sum(t.dims);
    t.euler_consistent = t.euler_characteristic == chamber_euler;
    if (t.graded)
        for (std::size_t i = 0; i < t.dims.size(); ++i) {
            std::size_t sum = 0;
            for (const auto& piece : (*t.graded)[i]) sum += piece.multiplicity;
            if (sum != t.dims[i]) throw std::logic_error("graded pieces do not sum to the total");
        }
    sort_graded(t);
}

}  // namespace

std::vector<std::size_t> graded_piece_cohomology(const Fan& fan, const TDivisor& d, const IntVector& m) {
    check_divisor(fan, d);
    if (m.size() != fan.rank()) throw InputError("degree has the wrong length", "m");
    require_cohomology_hypotheses(fan);
    const CoverNerve nerve(fan);
    return fold_to_rank(nerve.support(kernels::sign_pattern(fan, d, m)).cohomology(), fan.rank());
}

CohomologyTable cohomology(const Fan& fan, const TDivisor& d, bool want_graded) {
    CohomologyOptions options;
    options.want_graded = want_graded;
    return cohomology(fan, d, options);
}

CohomologyTable cohomology(const Fan& fan, const TDivisor& d, const CohomologyOptions& options) {
    if (options.kernel == CohomologyKernel::Serial) {
        if (options.modp_check) throw InputError("mod-p cross-check needs the parallel kernel", "modp_check");
        return cohomology_reference(fan, d, options.want_graded);
    }
    check_divisor(fan, d);
    require_cohomology_hypotheses(fan);
    const std::size_t n = fan.rank();
    const CoverNerve nerve(fan);

    CohomologyTable t;
    t.region = support_region(fan, d);
    t.degrees_scanned = t.region.size();
    const kernels::PatternCensus census = kernels::census_parallel(fan, d, t.region);

    std::vector<SignPattern> patterns;
    for (const auto& entry : census.members) patterns.push_back(entry.first);
    const std::vector<PatternCohomology> results = kernels::evaluate_patterns(nerve, patterns, options.modp_check, true);
    t.sign_patterns = patterns.size();

    t.dims.assign(n + 1, 0);
    if (options.want_graded) t.graded.emplace(n + 1);
    if (options.modp_check) t.modp_agrees = true;
    long long chamber_euler = 0;
    std::size_t idx = 0;
    for (const auto& [pattern, members] : census.members) {
        const PatternCohomology& res = results[idx++];
        const auto dims = fold_to_rank(res.dims, n);
        const std::size_t count = members.size();
        chamber_euler += static_cast<long long>(count) * alternating_sum(res.cochain_dims);
        if (res.dims_modp && *res.dims_modp != res.dims) t.modp_agrees = false;
        for (std::size_t i = 0; i <= n; ++i) {
            if (dims[i] == 0) continue;
            t.dims[i] += count * dims[i];
            if (t.graded)
                for (auto flat : members) (*t.graded)[i].push_back({t.region.point(flat), dims[i]});
        }
    }
    finish(t, chamber_euler);
    return t;
}

CohomologyTable cohomology_reference(const Fan& fan, const TDivisor& d, bool want_graded) {
    check_divisor(fan, d);
    require_cohomology_hypotheses(fan);
    const std::size_t n = fan.rank();
    const CoverNerve nerve(fan);

    CohomologyTable t;
    t.region = support_region(fan, d);
    t.degrees_scanned = t.region.size();
    t.dims.assign(n + 1, 0);
    if (want_graded) t.graded.emplace(n + 1);
    long long chamber_euler = 0;
    for (std::size_t flat = 0; flat < t.degrees_scanned; ++flat) {
        const IntVector m = t.region.point(flat);
        const auto complex = nerve.support(kernels::sign_pattern(fan, d, m));
        const auto dims = fold_to_rank(complex.cohomology(), n);
        chamber_euler += alternating_sum(complex.cochain_dims());
        for (std::size_t i = 0; i <= n; ++i) {
            if (dims[i] == 0) continue;
            t.dims[i] += dims[i];
            if (t.graded) (*t.graded)[i].push_back({m, dims[i]});
        }
    }
    finish(t, chamber_euler);
    return t;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "unknown";
}

DemazureResult demazure_vanishing_check(const Fan& fan, const TDivisor& d) {
    DemazureResult out;
    if (!is_cartier(fan, d).cartier) {
        out.note = "divisor is not Cartier";
        return out;
    }
    if (!is_basepoint_free(fan, d)) {
        out.note = "divisor is not basepoint free";
        return out;
    }
    out.table = cohomology(fan, d, false);
    out.verdict = Verdict::Pass;
    for (std::size_t i = 1; i < out.table->dims.size(); ++i)
        if (out.table->dims[i] != 0) {
            out.verdict = Verdict::Fail;
            out.offending_degree = i;
            out.note = "H^" + std::to_string(i) + " does not vanish";
            break;
        }
    return out;
}

BatyrevBorisovResult batyrev_borisov_check(const Fan& fan, const TDivisor& d) {
    BatyrevBorisovResult out;
    if (!is_cartier(fan, d).cartier) {
        out.note = "divisor is not Cartier";
        return out;
    }
    if (!is_basepoint_free(fan, d)) {
        out.note = "divisor is not basepoint free";
        return out;
    }
    const DivisorPolytope p = divisor_polytope(fan, d);
    out.polytope_dim = p.dim;
    out.interior_points = lattice_points(p, true);
    for (const auto& m : out.interior_points) out.predicted_basis.push_back(-m);
    std::sort(out.predicted_basis.begin(), out.predicted_basis.end());

    out.table = cohomology(fan, -d, true);
    const auto& dims = out.table->dims;
    out.verdict = Verdict::Pass;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (static_cast<int>(i) == p.dim) {
            std::vector<IntVector> basis;
            bool simple = true;
            for (const auto& piece : (*out.table->graded)[i]) {
                basis.push_back(piece.degree);
                simple = simple && piece.multiplicity == 1;
            }
            if (dims[i] != out.interior_points.size() || !simple || basis != out.predicted_basis) {
                out.verdict = Verdict::Fail;
                out.note = "H^" + std::to_string(i) + " does not match the interior lattice points";
            }
        } else if (dims[i] != 0) {
            out.verdict = Verdict::Fail;
            out.note = "H^" + std::to_string(i) + " does not vanish";
        }
    }
    return out;
}

}  // namespace toric
