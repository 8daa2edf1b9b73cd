#include "toric/divisor.hpp"

#include "toric/errors.hpp"

namespace toric {

void check_divisor(const Fan& fan, const TDivisor& d) {
    if (d.coeffs.size() != fan.num_rays())
        throw InputError("divisor has " + std::to_string(d.coeffs.size()) + " coefficients but the fan has " +
                             std::to_string(fan.num_rays()) + " rays",
                         "divisor");
}

TDivisor principal_divisor(const Fan& fan, const IntVector& m) {
    if (m.size() != fan.rank())
        throw InputError("character has length " + std::to_string(m.size()) + ", expected " +
                             std::to_string(fan.rank()),
                         "m");
    TDivisor d;
    for (const auto& u : fan.rays()) d.coeffs.push_back(dot(m, u));
    return d;
}

IntMatrix div_map(const Fan& fan) { return IntMatrix::from_rows(fan.rays(), fan.rank()); }

ClassGroup class_group(const Fan& fan) {
    IntMatrix div = div_map(fan);
    if (rank(div) != fan.rank())
        throw HypothesisError("rays do not span N_R; the class group sequence needs an injective div map");
    return ClassGroup{cokernel(div), std::move(div)};
}

namespace {

IntMatrix cone_matrix(const Fan& fan, const Cone& c) {
    return c.rays.empty() ? IntMatrix(0, fan.rank()) : IntMatrix::from_rows(fan.generators(c), fan.rank());
}

}  // namespace

CartierData is_cartier(const Fan& fan, const TDivisor& d) {
    check_divisor(fan, d);
    CartierData out;
    for (std::size_t i = 0; i < fan.num_max_cones(); ++i) {
        const Cone& c = fan.max_cone(i);
        IntVector rhs;
        for (auto r : c.rays) rhs.push_back(-d.coeffs[r]);
        auto m = solve_integer_system(cone_matrix(fan, c), rhs);
        if (!m) {
            out.witnesses.clear();
            out.failing_cone = i;
            return out;
        }
        out.witnesses.push_back(std::move(*m));
    }
    out.cartier = true;
    return out;
}

std::optional<std::vector<RatVector>> rational_witnesses(const Fan& fan, const TDivisor& d) {
    check_divisor(fan, d);
    std::vector<RatVector> out;
    for (const auto& c : fan.max_cones()) {
        RatVector rhs;
        for (auto r : c.rays) rhs.emplace_back(-d.coeffs[r]);
        auto m = solve_rational_system(cone_matrix(fan, c), rhs);
        if (!m) return std::nullopt;
        out.push_back(std::move(*m));
    }
    return out;
}

GroupElement PicardGroup::class_of(const TDivisor& d) const {
    auto y = solve_integer_system(cartier_basis, d.coeffs);
    if (!y) throw HypothesisError("divisor is not Cartier");
    return presentation.project(*y);
}

TDivisor PicardGroup::representative(const GroupElement& e) const {
    return TDivisor{cartier_basis * presentation.lift(e)};
}

PicardGroup picard_group(const Fan& fan) {
    if (!is_complete(fan)) throw HypothesisError("picard_group requires a complete fan");
    const std::size_t n = fan.rank();
    const std::size_t r = fan.num_max_cones();

    // Unknowns: one m_sigma in M per maximal cone. Cartier data agree on shared rays.
    std::vector<std::size_t> first_cone(fan.num_rays(), r);
    for (std::size_t i = 0; i < r; ++i)
        for (auto rho : fan.max_cone(i).rays)
            if (first_cone[rho] == r) first_cone[rho] = i;

    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < r; ++i)
        for (auto rho : fan.max_cone(i).rays) {
            if (first_cone[rho] == i) continue;
            IntVector row(r * n, Integer(0));
            for (std::size_t c = 0; c < n; ++c) {
                row[i * n + c] = fan.ray(rho)[c];
                row[first_cone[rho] * n + c] = -fan.ray(rho)[c];
            }
            rows.push_back(std::move(row));
        }
    const IntMatrix constraints = rows.empty() ? IntMatrix(0, r * n) : IntMatrix::from_rows(rows, r * n);
    const IntMatrix K = integer_kernel(constraints);

    PicardGroup pic;
    pic.cartier_basis = IntMatrix(fan.num_rays(), K.cols());
    for (std::size_t col = 0; col < K.cols(); ++col)
        for (std::size_t rho = 0; rho < fan.num_rays(); ++rho) {
            Integer s = 0;
            for (std::size_t c = 0; c < n; ++c) s += K(first_cone[rho] * n + c, col) * fan.ray(rho)[c];
            pic.cartier_basis(rho, col) = -s;
        }

    IntMatrix relations(K.cols(), n);
    for (std::size_t j = 0; j < n; ++j) {
        IntVector e(n, Integer(0));
        e[j] = 1;
        auto y = solve_integer_system(pic.cartier_basis, principal_divisor(fan, e).coeffs);
        if (!y) throw std::logic_error("principal divisor not expressible in the Cartier lattice");
        for (std::size_t i = 0; i < K.cols(); ++i) relations(i, j) = (*y)[i];
    }
    pic.presentation = cokernel(relations);

    const ClassGroup cl = class_group(fan);
    const std::size_t cl_dim = cl.presentation.num_generators();
    const std::size_t gens = pic.presentation.num_generators();
    pic.generators_in_cl = IntMatrix(cl_dim, gens);
    for (std::size_t g = 0; g < gens; ++g) {
        GroupElement e = pic.presentation.zero();
        if (g < e.free.size()) e.free[g] = 1;
        else e.torsion[g - e.free.size()] = 1;
        const GroupElement c = cl.class_of(pic.representative(e));
        for (std::size_t i = 0; i < c.free.size(); ++i) pic.generators_in_cl(i, g) = c.free[i];
        for (std::size_t i = 0; i < c.torsion.size(); ++i) pic.generators_in_cl(c.free.size() + i, g) = c.torsion[i];
    }

    // Cl / Pic = Z^{cl_dim} / (Pic generators + torsion relations of Cl)
    const auto& factors = cl.presentation.invariant_factors();
    IntMatrix quotient(cl_dim, gens + factors.size());
    for (std::size_t i = 0; i < cl_dim; ++i)
        for (std::size_t g = 0; g < gens; ++g) quotient(i, g) = pic.generators_in_cl(i, g);
    for (std::size_t t = 0; t < factors.size(); ++t)
        quotient(cl.presentation.free_rank() + t, gens + t) = factors[t];
    const auto q = cokernel(quotient);
    if (q.free_rank() == 0) {
        Integer index = 1;
        for (const auto& d : q.invariant_factors()) index *= d;
        pic.index_in_cl = index;
        pic.equals_class_group = index == 1;
    }
    return pic;
}

MonomialCocycle::MonomialCocycle(std::size_t num_cones, std::size_t rank)
    : n_(num_cones), rank_(rank), entries_(num_cones * num_cones, IntVector(rank, Integer(0))) {}

MonomialCocycle MonomialCocycle::operator-(const MonomialCocycle& o) const {
    if (n_ != o.n_ || rank_ != o.rank_) throw InputError("cocycles live on different covers");
    MonomialCocycle d(n_, rank_);
    for (std::size_t k = 0; k < entries_.size(); ++k) d.entries_[k] = entries_[k] - o.entries_[k];
    return d;
}

MonomialCocycle divisor_to_cocycle(const Fan& fan, const TDivisor& d) {
    const CartierData data = is_cartier(fan, d);
    if (!data.cartier)
        throw HypothesisError("divisor is not Cartier on maximal cone " + std::to_string(*data.failing_cone));
    const std::size_t r = fan.num_max_cones();
    MonomialCocycle a(r, fan.rank());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) a(i, j) = data.witnesses[i] - data.witnesses[j];
    return a;
}

bool is_valid_cocycle(const Fan& fan, const MonomialCocycle& a) {
    const std::size_t r = fan.num_max_cones();
    if (a.num_cones() != r || a.rank() != fan.rank()) return false;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (a(i, j) != -a(j, i)) return false;
            for (std::size_t k = 0; k < r; ++k)
                if (a(i, j) + a(j, k) != a(i, k)) return false;
            for (auto rho : fan.max_cone(i).rays)
                if (fan.max_cone(j).contains_ray(rho) && dot(a(i, j), fan.ray(rho)) < 0) return false;
        }
    return true;
}

bool cocycle_class_equal(const Fan& fan, const MonomialCocycle& a, const MonomialCocycle& b) {
    const MonomialCocycle delta = a - b;
    const std::size_t r = fan.num_max_cones();
    const std::size_t n = fan.rank();
    std::vector<IntVector> rows;
    IntVector rhs;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            for (std::size_t c = 0; c < n; ++c) {
                IntVector row(r * n, Integer(0));
                row[i * n + c] = 1;
                row[j * n + c] = -1;
                rows.push_back(std::move(row));
                rhs.push_back(delta(i, j)[c]);
            }
    // each m_i must be a unit on U_{sigma_i}
    for (std::size_t i = 0; i < r; ++i)
        for (auto rho : fan.max_cone(i).rays) {
            IntVector row(r * n, Integer(0));
            for (std::size_t c = 0; c < n; ++c) row[i * n + c] = fan.ray(rho)[c];
            rows.push_back(std::move(row));
            rhs.push_back(0);
        }
    if (rows.empty()) return true;
    return solve_integer_system(IntMatrix::from_rows(rows, r * n), rhs).has_value();
}

MonomialCocycle pullback_by_power_map(const MonomialCocycle& a, const Integer& t) {
    MonomialCocycle out(a.num_cones(), a.rank());
    for (std::size_t i = 0; i < a.num_cones(); ++i)
        for (std::size_t j = 0; j < a.num_cones(); ++j) out(i, j) = t * a(i, j);
    return out;
}

}  // namespace toric
