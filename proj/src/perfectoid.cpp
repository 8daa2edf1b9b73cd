#include "toric/perfectoid.hpp"

#include <algorithm>
#include <set>

#include "toric/errors.hpp"
#include "toric/polytope.hpp"

namespace toric {

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

namespace {

Integer mod(const Integer& a, const Integer& d) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return r;
}

Integer inverse_mod(const Integer& a, const Integer& d) {
    if (d == 1) return 0;
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t()) == 0) throw std::logic_error("not invertible");
    return r;
}

Integer strip_prime(Integer d, unsigned long p) {
    while (d % p == 0) d /= p;
    return d;
}

}  // namespace

// Torsion factor d = p^a d'. The idempotent e = 1 mod d', 0 mod p^a projects
// Z/d onto its prime-to-p summand.
GroupElement kill_p_torsion(const AbelianGroupPresentation& g, const GroupElement& c, unsigned long p) {
    GroupElement out = g.reduce(c);
    const auto& factors = g.invariant_factors();
    for (std::size_t t = 0; t < factors.size(); ++t) {
        const Integer kept = strip_prime(factors[t], p);
        const Integer p_part = factors[t] / kept;
        const Integer e = p_part * inverse_mod(p_part, kept);
        out.torsion[t] = mod(out.torsion[t] * e, factors[t]);
    }
    return out;
}

std::optional<GroupElement> divide_by_p(const AbelianGroupPresentation& g, const GroupElement& c, unsigned long p) {
    GroupElement out = kill_p_torsion(g, c, p);
    for (auto& x : out.free) {
        if (x % p != 0) return std::nullopt;
        x /= p;
    }
    const auto& factors = g.invariant_factors();
    for (std::size_t t = 0; t < factors.size(); ++t) {
        const Integer kept = strip_prime(factors[t], p);
        const Integer p_part = factors[t] / kept;
        const Integer e = p_part * inverse_mod(p_part, kept);
        out.torsion[t] = mod(out.torsion[t] * inverse_mod(Integer(p), kept) * e, factors[t]);
    }
    return out;
}

PerfectoidSpace::PerfectoidSpace(Fan fan, unsigned long p, bool assume_trivialization)
    : fan_(std::move(fan)), p_(p), assumed_(assume_trivialization) {
    if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime", "p");
    if (!is_complete(fan_)) throw HypothesisError("the perfectoid tower needs a complete fan");
    if (!assumed_ && !is_smooth(fan_))
        throw HypothesisError("fan is not smooth; Pic need not trivialize on the chart cover (see --assume-trivialization)");
    pic_ = picard_group(fan_);
}

bool PerfectoidSpace::same_tower(const PerfectoidSpace& other) const {
    if (this == &other) return true;
    return p_ == other.p_ && fan_.rank() == other.fan_.rank() && fan_.rays() == other.fan_.rays() &&
           fan_.max_cones() == other.fan_.max_cones();
}

SpacePtr make_perfectoid_space(Fan fan, unsigned long p, bool assume_trivialization) {
    return std::make_shared<const PerfectoidSpace>(std::move(fan), p, assume_trivialization);
}

bool PerfectoidBundle::operator==(const PerfectoidBundle& other) const {
    return space->same_tower(*other.space) && level == other.level && base_class == other.base_class;
}

namespace {

void require_same_tower(const PerfectoidBundle& a, const PerfectoidBundle& b) {
    if (!a.space || !b.space) throw InputError("bundle without a tower");
    if (!a.space->same_tower(*b.space)) throw InputError("bundles live on different towers (fan or p differ)", "p");
}

bool all_divisible(const IntVector& v, unsigned long p) {
    return std::all_of(v.begin(), v.end(), [&](const Integer& x) { return x % p == 0; });
}

IntVector divided(IntVector v, unsigned long p) {
    for (auto& x : v) x /= p;
    return v;
}

}  // namespace

PerfectoidBundle normalize(PerfectoidBundle b) {
    const PerfectoidSpace& s = *b.space;
    const auto& group = s.pic().presentation;
    const GroupElement local = kill_p_torsion(group, b.base_class, s.p());
    if (!(local == b.base_class)) {
        b.base_class = local;
        b.representative.reset();
    }
    while (b.level > 0) {
        auto q = divide_by_p(group, b.base_class, s.p());
        if (!q) break;
        b.base_class = *q;
        --b.level;
        if (b.representative && all_divisible(b.representative->coeffs, s.p()))
            b.representative = TDivisor{divided(b.representative->coeffs, s.p())};
        else
            b.representative.reset();
    }
    if (!b.representative) b.representative = s.pic().representative(b.base_class);
    return b;
}

PerfectoidBundle from_divisor(const SpacePtr& space, const TDivisor& d, std::size_t level) {
    check_divisor(space->fan(), d);
    if (!is_cartier(space->fan(), d).cartier) throw HypothesisError("divisor is not Cartier");
    return normalize(PerfectoidBundle{space, level, space->pic().class_of(d), d});
}

PerfectoidBundle trivial_bundle(const SpacePtr& space) {
    return PerfectoidBundle{space, 0, space->pic().presentation.zero(),
                            TDivisor{IntVector(space->fan().num_rays(), Integer(0))}};
}

PerfectoidBundle tensor(const PerfectoidBundle& a, const PerfectoidBundle& b) {
    require_same_tower(a, b);
    const auto& group = a.space->pic().presentation;
    const std::size_t level = std::max(a.level, b.level);
    Integer sa, sb;
    mpz_ui_pow_ui(sa.get_mpz_t(), a.p(), level - a.level);
    mpz_ui_pow_ui(sb.get_mpz_t(), a.p(), level - b.level);
    PerfectoidBundle out{a.space, level, group.add(group.scale(sa, a.base_class), group.scale(sb, b.base_class)),
                         std::nullopt};
    if (a.representative && b.representative)
        out.representative = sa * *a.representative + sb * *b.representative;
    return normalize(std::move(out));
}

PerfectoidBundle inverse(const PerfectoidBundle& a) {
    PerfectoidBundle out{a.space, a.level, a.space->pic().presentation.negate(a.base_class), std::nullopt};
    if (a.representative) out.representative = -*a.representative;
    return normalize(std::move(out));
}

PerfectoidBundle frobenius_pullback(const PerfectoidBundle& a) {
    if (a.level > 0) return normalize(PerfectoidBundle{a.space, a.level - 1, a.base_class, a.representative});
    const Integer p = a.p();
    PerfectoidBundle out{a.space, 0, a.space->pic().presentation.scale(p, a.base_class), std::nullopt};
    if (a.representative) out.representative = p * *a.representative;
    return normalize(std::move(out));
}

PerfectoidBundle root(const PerfectoidBundle& a) {
    return normalize(PerfectoidBundle{a.space, a.level + 1, a.base_class, a.representative});
}

TDivisor representative_of(const PerfectoidBundle& a) {
    if (a.representative) return *a.representative;
    return a.space->pic().representative(a.base_class);
}

// ---------------------------------------------------------------------------

PerfectoidPicDescription perfectoid_pic(const AbelianGroupPresentation& pic, unsigned long p) {
    if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime", "p");
    PerfectoidPicDescription out;
    out.base = pic.describe();
    out.free_rank = pic.free_rank();
    for (const auto& d : pic.invariant_factors()) {
        const Integer kept = strip_prime(d, p);
        if (kept > 1) out.surviving_torsion.push_back(kept);
        if (d / kept > 1) out.killed_torsion.push_back(d / kept);
    }
    std::vector<std::string> parts;
    const std::string zp = "Z[1/" + std::to_string(p) + "]";
    if (out.free_rank == 1) parts.push_back(zp);
    else if (out.free_rank > 1) parts.push_back(zp + "^" + std::to_string(out.free_rank));
    for (const auto& d : out.surviving_torsion) parts.push_back("Z/" + d.get_str());
    if (parts.empty()) {
        out.localized = "0";
    } else {
        for (std::size_t i = 0; i < parts.size(); ++i) out.localized += (i ? " + " : "") + parts[i];
    }
    return out;
}

PerfectoidPicDescription perfectoid_pic(const Fan& fan, unsigned long p, bool assume_trivialization) {
    const PerfectoidSpace space(fan, p, assume_trivialization);
    return perfectoid_pic(space.pic().presentation, p);
}

std::string to_string(SeriesVerdict v) {
    switch (v) {
        case SeriesVerdict::Vanishes: return "Vanishes";
        case SeriesVerdict::StabilizesToBasis: return "StabilizesToBasis";
        case SeriesVerdict::Growing: return "Growing";
    }
    return "unknown";
}

namespace {

std::vector<CohomologyTable> tables_for(const Fan& fan, const TDivisor& d, unsigned long p, std::size_t n_max) {
    std::vector<CohomologyTable> tables;
    Integer scale = 1;
    for (std::size_t n = 0; n <= n_max; ++n) {
        tables.push_back(cohomology(fan, scale * d, true));
        scale *= p;
    }
    return tables;
}

bool embeds(const std::vector<IntVector>& from, const std::vector<IntVector>& into, unsigned long p) {
    const Integer s = p;
    return std::all_of(from.begin(), from.end(),
                       [&](const IntVector& m) { return std::binary_search(into.begin(), into.end(), s * m); });
}

bool basepoint_free_somewhere(const Fan& fan, const TDivisor& d, unsigned long p, std::size_t n_max,
                              std::string& note) {
    if (!is_cartier(fan, d).cartier) {
        note = "representative is not Cartier";
        return false;
    }
    const bool at_zero = is_basepoint_free(fan, d);
    bool any = at_zero;
    Integer scale = p;
    for (std::size_t t = 1; t <= n_max && !any; ++t, scale *= p) any = is_basepoint_free(fan, scale * d);
    if (any != at_zero) throw std::logic_error("basepoint freeness is not invariant under p-scaling");
    if (!any) note = "no basepoint-free representative p^t D with t <= n_max";
    return any;
}

}  // namespace

std::vector<CohomologyTable> level_tables(const PerfectoidBundle& l, std::size_t n_max) {
    return tables_for(l.space->fan(), representative_of(l), l.p(), n_max);
}

LevelSeries series_from_tables(const std::vector<CohomologyTable>& tables, std::size_t i, unsigned long p) {
    LevelSeries s;
    s.degree = i;
    bool all_zero = true;
    for (const auto& t : tables) {
        s.dims.push_back(i < t.dims.size() ? t.dims[i] : 0);
        all_zero = all_zero && s.dims.back() == 0;
        std::vector<IntVector> basis;
        if (t.graded && i < t.graded->size())
            for (const auto& piece : (*t.graded)[i]) basis.push_back(piece.degree);
        s.bases.push_back(std::move(basis));
    }
    if (all_zero) {
        s.verdict = SeriesVerdict::Vanishes;
        return s;
    }
    bool stable = true;
    for (std::size_t n = 0; n + 1 < s.bases.size() && stable; ++n) stable = embeds(s.bases[n], s.bases[n + 1], p);
    s.verdict = stable ? SeriesVerdict::StabilizesToBasis : SeriesVerdict::Growing;
    return s;
}

LevelSeries cohomology_series(const PerfectoidBundle& l, std::size_t i, std::size_t n_max) {
    return series_from_tables(level_tables(l, n_max), i, l.p());
}

int d_L(const PerfectoidBundle& l) { return divisor_polytope(l.space->fan(), representative_of(l)).dim; }

PerfectoidDemazureResult perfectoid_demazure(const PerfectoidBundle& l, std::size_t n_max) {
    PerfectoidDemazureResult out;
    const Fan& fan = l.space->fan();
    const TDivisor d = representative_of(l);
    if (!basepoint_free_somewhere(fan, d, l.p(), n_max, out.note)) return out;
    const auto tables = tables_for(fan, d, l.p(), n_max);
    out.verdict = Verdict::Pass;
    for (std::size_t i = 1; i <= fan.rank(); ++i) {
        out.series.push_back(series_from_tables(tables, i, l.p()));
        if (out.series.back().verdict != SeriesVerdict::Vanishes && out.verdict == Verdict::Pass) {
            out.verdict = Verdict::Fail;
            out.offending_degree = i;
            out.note = "H^" + std::to_string(i) + " series does not vanish";
        }
    }
    return out;
}

PerfectoidBBResult perfectoid_bb(const PerfectoidBundle& l, std::size_t n_max) {
    PerfectoidBBResult out;
    const Fan& fan = l.space->fan();
    const unsigned long p = l.p();
    const TDivisor d = representative_of(l);
    if (!basepoint_free_somewhere(fan, d, p, n_max, out.note)) return out;
    out.d_L = divisor_polytope(fan, d).dim;

    const auto tables = tables_for(fan, -d, p, n_max);
    for (std::size_t i = 0; i <= fan.rank(); ++i) out.series.push_back(series_from_tables(tables, i, p));

    out.verdict = Verdict::Pass;
    Integer scale = 1;
    for (std::size_t n = 0; n <= n_max; ++n, scale *= p) {
        std::vector<IntVector> expected;
        for (const auto& m : lattice_points(divisor_polytope(fan, scale * d), true)) expected.push_back(-m);
        std::sort(expected.begin(), expected.end());
        for (std::size_t i = 0; i <= fan.rank(); ++i) {
            const auto& s = out.series[i];
            const bool ok = static_cast<int>(i) == out.d_L ? s.bases[n] == expected && s.dims[n] == expected.size()
                                                           : s.dims[n] == 0;
            if (!ok && out.verdict == Verdict::Pass) {
                out.verdict = Verdict::Fail;
                out.note = "level " + std::to_string(n) + ", H^" + std::to_string(i) +
                           " disagrees with the interior lattice points";
            }
        }
        out.bases.push_back(std::move(expected));
    }
    out.embeddings_verified = true;
    for (std::size_t n = 0; n + 1 < out.bases.size(); ++n)
        out.embeddings_verified = out.embeddings_verified && embeds(out.bases[n], out.bases[n + 1], p);
    if (!out.embeddings_verified && out.verdict == Verdict::Pass) {
        out.verdict = Verdict::Fail;
        out.note = "m -> p m does not embed consecutive bases";
    }

    std::set<RatVector> union_set;
    scale = 1;
    for (const auto& basis : out.bases) {
        for (const auto& m : basis) {
            RatVector q;
            for (const auto& x : m) {
                Rational r(x, scale);
                r.canonicalize();
                q.push_back(r);
            }
            union_set.insert(std::move(q));
        }
        scale *= p;
    }
    out.p_divisible_basis.assign(union_set.begin(), union_set.end());
    return out;
}

}  // namespace toric
