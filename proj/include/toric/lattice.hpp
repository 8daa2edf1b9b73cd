#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

IntVector make_vector(std::initializer_list<long> values);

Integer dot(const IntVector& a, const IntVector& b);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector operator*(const Integer& k, const IntVector& a);
bool is_zero(const IntVector& v);

/// gcd of all entries (0 for the zero vector).
Integer content(const IntVector& v);

std::ostream& operator<<(std::ostream& os, const IntVector& v);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    /// Stacks `rows` as matrix rows; every row must have `cols` entries.
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntVector col(std::size_t c) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    IntVector operator*(const IntVector& v) const;
    bool operator==(const IntMatrix& other) const = default;

    bool is_zero() const;
    bool is_diagonal() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
    /// col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Result of a Smith normal form computation: U * A * V = S, with U and V
/// unimodular. The inverses are tracked alongside so callers can lift group
/// elements back to ambient coordinates without a separate inversion.
struct SmithForm {
    IntMatrix U, S, V;
    IntMatrix U_inv, V_inv;
    std::size_t rank = 0;

    /// Diagonal entries S(i,i) for i < rank (all positive, d_1 | d_2 | ...).
    std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& A);

Integer determinant(const IntMatrix& A);
std::size_t rank(const IntMatrix& A);
std::size_t rank_mod(const IntMatrix& A, unsigned long prime);
std::size_t rank(const std::vector<RatVector>& rows);

/// Columns form a Z-basis of {x in Z^cols : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& A);

/// Some x in Z^cols with A x = b, or nullopt when no integral solution exists.
std::optional<IntVector> solve_integer_system(const IntMatrix& A, const IntVector& b);

/// Some x in Q^cols with A x = b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve_rational_system(const IntMatrix& A, const RatVector& b);

/// Element of a finitely generated abelian group Z^r + (+) Z/d_i, stored as
/// a free part and a torsion part reduced into [0, d_i).
struct GroupElement {
    IntVector free;
    IntVector torsion;

    bool operator==(const GroupElement&) const = default;
};

class AbelianGroupPresentation {
public:
    AbelianGroupPresentation() = default;
    AbelianGroupPresentation(std::size_t free_rank, std::vector<Integer> invariant_factors,
                             IntMatrix projection, IntMatrix lift);

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Integer>& invariant_factors() const { return invariant_factors_; }
    /// Maps ambient coordinates to (free rows, then torsion rows).
    const IntMatrix& projection() const { return projection_; }
    /// Columns are ambient preimages of the group generators.
    const IntMatrix& lift_matrix() const { return lift_; }
    std::size_t ambient_dim() const { return projection_.cols(); }
    std::size_t num_generators() const { return free_rank_ + invariant_factors_.size(); }

    bool is_free() const { return invariant_factors_.empty(); }
    bool is_trivial() const { return free_rank_ == 0 && invariant_factors_.empty(); }

    GroupElement project(const IntVector& ambient) const;
    IntVector lift(const GroupElement& e) const;

    GroupElement zero() const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement scale(const Integer& k, const GroupElement& a) const;
    GroupElement reduce(GroupElement e) const;
    bool is_zero(const GroupElement& e) const;

    /// Human readable, e.g. "Z^2 + Z/3".
    std::string describe() const;

private:
    std::size_t free_rank_ = 0;
    std::vector<Integer> invariant_factors_;
    IntMatrix projection_;
    IntMatrix lift_;
};

/// Presentation of Z^rows / im(A).
AbelianGroupPresentation cokernel(const IntMatrix& A);

}  // namespace toric
