#include "toric/cohomology_kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric::kernels {

std::size_t DegreeBox::size() const {
    std::size_t total = 1;
    for (std::size_t j = 0; j < lo.size(); ++j) {
        if (hi[j] < lo[j]) return 0;
        const Integer extent = hi[j] - lo[j] + 1;
        if (!extent.fits_ulong_p()) throw std::overflow_error("degree box too large");
        total *= extent.get_ui();
    }
    return total;
}

IntVector DegreeBox::point(std::size_t flat) const {
    IntVector m(lo.size());
    for (std::size_t j = lo.size(); j-- > 0;) {
        const unsigned long extent = Integer(hi[j] - lo[j] + 1).get_ui();
        m[j] = lo[j] + static_cast<unsigned long>(flat % extent);
        flat /= extent;
    }
    return m;
}

bool DegreeBox::contains(const IntVector& m) const {
    for (std::size_t j = 0; j < lo.size(); ++j)
        if (m[j] < lo[j] || m[j] > hi[j]) return false;
    return true;
}

SignPattern sign_pattern(const Fan& fan, const TDivisor& d, const IntVector& m) {
    SignPattern s(fan.num_rays());
    for (std::size_t r = 0; r < fan.num_rays(); ++r) s[r] = dot(m, fan.ray(r)) >= -d.coeffs[r];
    return s;
}

// ---------------------------------------------------------------------------

SupportComplex::SupportComplex(std::size_t num_cones, std::vector<bool> present)
    : num_cones_(num_cones), present_(std::move(present)) {}

namespace {

std::vector<std::vector<std::size_t>> faces_by_size(const SupportComplex& s) {
    const std::size_t r = s.num_cones();
    std::vector<std::vector<std::size_t>> by_size(r);
    for (std::size_t mask = 1; mask < (std::size_t{1} << r); ++mask)
        if (s.present(mask)) by_size[static_cast<std::size_t>(std::popcount(mask)) - 1].push_back(mask);
    return by_size;
}

}  // namespace

std::vector<std::size_t> SupportComplex::cochain_dims() const {
    std::vector<std::size_t> dims;
    for (const auto& level : faces_by_size(*this)) dims.push_back(level.size());
    return dims;
}

std::vector<std::size_t> SupportComplex::cohomology(std::optional<unsigned long> prime) const {
    const std::size_t r = num_cones_;
    const auto levels = faces_by_size(*this);

    // rank of delta^k : C^k -> C^{k+1}
    std::vector<std::size_t> ranks(r, 0);
    for (std::size_t k = 0; k + 1 < r; ++k) {
        const auto& src = levels[k];
        const auto& dst = levels[k + 1];
        if (src.empty() || dst.empty()) continue;
        IntMatrix delta(dst.size(), src.size());
        for (std::size_t row = 0; row < dst.size(); ++row) {
            const std::size_t J = dst[row];
            int position = 0;
            for (std::size_t bit = 0; bit < r; ++bit) {
                if (!(J & (std::size_t{1} << bit))) continue;
                const std::size_t I = J & ~(std::size_t{1} << bit);
                if (present_[I]) {
                    const auto col = static_cast<std::size_t>(std::lower_bound(src.begin(), src.end(), I) - src.begin());
                    delta(row, col) = (position % 2 == 0) ? 1 : -1;
                }
                ++position;
            }
        }
        ranks[k] = prime ? rank_mod(delta, *prime) : rank(delta);
    }
    std::vector<std::size_t> dims(r, 0);
    for (std::size_t k = 0; k < r; ++k) {
        const std::size_t incoming = k > 0 ? ranks[k - 1] : 0;
        dims[k] = levels[k].size() - ranks[k] - incoming;
    }
    return dims;
}

// ---------------------------------------------------------------------------

CoverNerve::CoverNerve(const Fan& fan) : num_cones_(fan.num_max_cones()) {
    if (num_cones_ > kMaxCones)
        throw HypothesisError("Cech nerve limited to " + std::to_string(kMaxCones) + " maximal cones");
    rays_of_.resize(std::size_t{1} << num_cones_);
    for (std::size_t mask = 1; mask < rays_of_.size(); ++mask) {
        const auto low = static_cast<std::size_t>(std::countr_zero(mask));
        const std::size_t rest = mask & (mask - 1);
        if (rest == 0) {
            rays_of_[mask] = fan.max_cone(low).rays;
            continue;
        }
        // valid fans intersect in common faces, spanned by the shared rays
        const auto& a = rays_of_[rest];
        const auto& b = fan.max_cone(low).rays;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(rays_of_[mask]));
    }
}

SupportComplex CoverNerve::support(const SignPattern& satisfied) const {
    std::vector<bool> present(rays_of_.size(), false);
    for (std::size_t mask = 1; mask < rays_of_.size(); ++mask)
        present[mask] = std::all_of(rays_of_[mask].begin(), rays_of_[mask].end(),
                                    [&](std::size_t r) { return satisfied[r]; });
    return SupportComplex(num_cones_, std::move(present));
}

// ---------------------------------------------------------------------------

PatternCensus census_serial(const Fan& fan, const TDivisor& d, const DegreeBox& box) {
    PatternCensus census;
    const std::size_t total = box.size();
    for (std::size_t idx = 0; idx < total; ++idx) census.members[sign_pattern(fan, d, box.point(idx))].push_back(idx);
    return census;
}

PatternCensus census_parallel(const Fan& fan, const TDivisor& d, const DegreeBox& box) {
    const auto total = static_cast<std::ptrdiff_t>(box.size());
    std::vector<std::map<SignPattern, std::vector<std::size_t>>> local(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        auto& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (std::ptrdiff_t idx = 0; idx < total; ++idx)
            mine[sign_pattern(fan, d, box.point(static_cast<std::size_t>(idx)))].push_back(
                static_cast<std::size_t>(idx));
    }
    PatternCensus census;
    for (auto& part : local)
        for (auto& [pattern, members] : part) {
            auto& dst = census.members[pattern];
            dst.insert(dst.end(), members.begin(), members.end());
        }
    for (auto& [pattern, members] : census.members) std::sort(members.begin(), members.end());
    return census;
}

std::vector<PatternCohomology> evaluate_patterns(const CoverNerve& nerve, const std::vector<SignPattern>& patterns,
                                                 std::optional<unsigned long> prime, bool parallel) {
    std::vector<PatternCohomology> out(patterns.size());
    const auto count = static_cast<std::ptrdiff_t>(patterns.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const SupportComplex complex = nerve.support(patterns[static_cast<std::size_t>(i)]);
        auto& result = out[static_cast<std::size_t>(i)];
        result.dims = complex.cohomology();
        result.cochain_dims = complex.cochain_dims();
        if (prime) result.dims_modp = complex.cohomology(prime);
    }
    return out;
}

}  // namespace toric::kernels
