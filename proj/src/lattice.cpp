#include "toric/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace toric {

IntVector make_vector(std::initializer_list<long> values) {
    IntVector v;
    v.reserve(values.size());
    for (long x : values) v.emplace_back(x);
    return v;
}

Integer dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector add: dimension mismatch");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sub: dimension mismatch");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVector operator-(const IntVector& a) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

IntVector operator*(const Integer& k, const IntVector& a) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer content(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

std::ostream& operator<<(std::ostream& os, const IntVector& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os << ']';
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("IntMatrix::from_rows: row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("IntMatrix::from_columns: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix product: dimension mismatch");
    IntMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
        }
    return p;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("IntMatrix * vector: dimension mismatch");
    IntVector r(rows_, Integer(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) r[i] += (*this)(i, k) * v[k];
    return r;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c && (*this)(r, c) != 0) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ',';
        os << m.row(r);
    }
    return os << ']';
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<Integer> SmithForm::diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < rank; ++i) d.push_back(S(i, i));
    return d;
}

namespace {

// Applies elementary operations to S while keeping U, V and their inverses
// consistent with U * A * V = S.
struct TrackedReduction {
    SmithForm& f;

    void row_swap(std::size_t a, std::size_t b) {
        f.S.swap_rows(a, b);
        f.U.swap_rows(a, b);
        f.U_inv.swap_cols(a, b);
    }
    void row_add(std::size_t dst, std::size_t src, const Integer& k) {
        f.S.add_row_multiple(dst, src, k);
        f.U.add_row_multiple(dst, src, k);
        f.U_inv.add_col_multiple(src, dst, -k);
    }
    void row_negate(std::size_t r) {
        f.S.negate_row(r);
        f.U.negate_row(r);
        f.U_inv.negate_col(r);
    }
    void col_swap(std::size_t a, std::size_t b) {
        f.S.swap_cols(a, b);
        f.V.swap_cols(a, b);
        f.V_inv.swap_rows(a, b);
    }
    void col_add(std::size_t dst, std::size_t src, const Integer& k) {
        f.S.add_col_multiple(dst, src, k);
        f.V.add_col_multiple(dst, src, k);
        f.V_inv.add_row_multiple(src, dst, -k);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    SmithForm f{IntMatrix::identity(m), A, IntMatrix::identity(n), IntMatrix::identity(m),
                IntMatrix::identity(n), 0};
    TrackedReduction op{f};
    IntMatrix& S = f.S;

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        // least-absolute-value pivot in the trailing block
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (S(i, j) != 0 && (pi == m || abs(S(i, j)) < abs(S(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == m) break;
        op.row_swap(t, pi);
        op.col_swap(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (S(i, t) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), S(i, t).get_mpz_t(), S(t, t).get_mpz_t());
                op.row_add(i, t, -q);
                if (S(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (S(t, j) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), S(t, j).get_mpz_t(), S(t, t).get_mpz_t());
                op.col_add(j, t, -q);
                if (S(t, j) != 0) clean = false;
            }
            if (!clean) {
                // a remainder smaller than the pivot survived; promote it
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (S(i, t) != 0 && abs(S(i, t)) < abs(S(bi, bj))) { bi = i; bj = t; }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (S(t, j) != 0 && abs(S(t, j)) < abs(S(bi, bj))) { bi = t; bj = j; }
                op.row_swap(t, bi);
                op.col_swap(t, bj);
                continue;
            }
            bool fixed_divisibility = false;
            for (std::size_t i = t + 1; i < m && !fixed_divisibility; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (S(i, j) % S(t, t) != 0) {
                        op.row_add(t, i, 1);
                        fixed_divisibility = true;
                        break;
                    }
            if (!fixed_divisibility) break;
        }
        if (S(t, t) < 0) op.row_negate(t);
        f.rank = t + 1;
    }
    return f;
}

// ---------------------------------------------------------------------------
// Ranks, determinants, solving

namespace {

// Fraction-free (Bareiss) forward elimination in place. Returns the rank and
// the sign of the row permutation applied.
std::size_t bareiss(IntMatrix& M, int* sign = nullptr) {
    const std::size_t m = M.rows(), n = M.cols();
    std::size_t r = 0;
    Integer prev = 1;
    int s = 1;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && M(p, c) == 0) ++p;
        if (p == m) continue;
        if (p != r) {
            M.swap_rows(p, r);
            s = -s;
        }
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                M(i, j) = M(r, c) * M(i, j) - M(i, c) * M(r, j);
                mpz_divexact(M(i, j).get_mpz_t(), M(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            M(i, c) = 0;
        }
        prev = M(r, c);
        ++r;
    }
    if (sign) *sign = s;
    return r;
}

}  // namespace

Integer determinant(const IntMatrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("determinant: matrix not square");
    if (A.rows() == 0) return 1;
    IntMatrix M = A;
    int sign = 1;
    // Bareiss keeps columns aligned with rows only when no column is skipped,
    // which is exactly the nonsingular case.
    const std::size_t n = M.rows();
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && M(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            M.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                M(i, j) = M(k, k) * M(i, j) - M(i, k) * M(k, j);
                mpz_divexact(M(i, j).get_mpz_t(), M(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            M(i, k) = 0;
        }
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& A) {
    IntMatrix M = A;
    return bareiss(M);
}

std::size_t rank_mod(const IntMatrix& A, unsigned long prime) {
    if (prime < 2 || prime >= (1UL << 31)) throw std::invalid_argument("rank_mod: prime out of range");
    const std::size_t m = A.rows(), n = A.cols();
    using u64 = unsigned long long;
    std::vector<u64> M(m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Integer r;
            mpz_fdiv_r_ui(r.get_mpz_t(), A(i, j).get_mpz_t(), prime);
            M[i * n + j] = r.get_ui();
        }
    auto inverse = [prime](u64 a) {
        // Fermat: a^(p-2)
        u64 result = 1, base = a % prime, e = prime - 2;
        while (e) {
            if (e & 1) result = result * base % prime;
            base = base * base % prime;
            e >>= 1;
        }
        return result;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && M[p * n + c] == 0) ++p;
        if (p == m) continue;
        if (p != r)
            for (std::size_t j = 0; j < n; ++j) std::swap(M[p * n + j], M[r * n + j]);
        const u64 inv = inverse(M[r * n + c]);
        for (std::size_t i = r + 1; i < m; ++i) {
            const u64 f = M[i * n + c] * inv % prime;
            if (f == 0) continue;
            for (std::size_t j = c; j < n; ++j)
                M[i * n + j] = (M[i * n + j] + (prime - f) * M[r * n + j]) % prime;
        }
        ++r;
    }
    return r;
}

std::size_t rank(const std::vector<RatVector>& rows) {
    if (rows.empty()) return 0;
    const std::size_t n = rows.front().size();
    IntMatrix M(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Integer l = 1;
        for (const auto& q : rows[i]) l = lcm(l, Integer(q.get_den()));
        for (std::size_t j = 0; j < n; ++j) {
            Rational scaled = rows[i][j] * l;
            M(i, j) = scaled.get_num();
        }
    }
    return rank(M);
}

IntMatrix integer_kernel(const IntMatrix& A) {
    const SmithForm f = smith_normal_form(A);
    const std::size_t n = A.cols();
    IntMatrix K(n, n - f.rank);
    for (std::size_t j = f.rank; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) K(i, j - f.rank) = f.V(i, j);
    return K;
}

std::optional<IntVector> solve_integer_system(const IntMatrix& A, const IntVector& b) {
    if (b.size() != A.rows()) throw std::invalid_argument("solve_integer_system: dimension mismatch");
    const SmithForm f = smith_normal_form(A);
    const IntVector c = f.U * b;
    IntVector y(A.cols(), Integer(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < f.rank) {
            if (c[i] % f.S(i, i) != 0) return std::nullopt;
            y[i] = c[i] / f.S(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return f.V * y;
}

std::optional<RatVector> solve_rational_system(const IntMatrix& A, const RatVector& b) {
    const std::size_t m = A.rows(), n = A.cols();
    if (b.size() != m) throw std::invalid_argument("solve_rational_system: dimension mismatch");
    std::vector<RatVector> M(m, RatVector(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] = A(i, j);
        M[i][n] = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && M[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(M[p], M[r]);
        const Rational inv = 1 / M[r][c];
        for (std::size_t j = c; j <= n; ++j) M[r][j] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || M[i][c] == 0) continue;
            const Rational f = M[i][c];
            for (std::size_t j = c; j <= n; ++j) M[i][j] -= f * M[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (M[i][n] != 0) return std::nullopt;
    RatVector x(n, Rational(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = M[i][n];
    return x;
}

// ---------------------------------------------------------------------------
// Abelian groups

AbelianGroupPresentation::AbelianGroupPresentation(std::size_t free_rank,
                                                   std::vector<Integer> invariant_factors,
                                                   IntMatrix projection, IntMatrix lift)
    : free_rank_(free_rank),
      invariant_factors_(std::move(invariant_factors)),
      projection_(std::move(projection)),
      lift_(std::move(lift)) {
    assert(projection_.rows() == num_generators());
    assert(lift_.cols() == num_generators());
}

GroupElement AbelianGroupPresentation::reduce(GroupElement e) const {
    for (std::size_t i = 0; i < e.torsion.size(); ++i)
        mpz_fdiv_r(e.torsion[i].get_mpz_t(), e.torsion[i].get_mpz_t(),
                   invariant_factors_[i].get_mpz_t());
    return e;
}

GroupElement AbelianGroupPresentation::project(const IntVector& ambient) const {
    const IntVector y = projection_ * ambient;
    GroupElement e;
    e.free.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(free_rank_));
    e.torsion.assign(y.begin() + static_cast<std::ptrdiff_t>(free_rank_), y.end());
    return reduce(std::move(e));
}

IntVector AbelianGroupPresentation::lift(const GroupElement& e) const {
    IntVector coords = e.free;
    coords.insert(coords.end(), e.torsion.begin(), e.torsion.end());
    return lift_ * coords;
}

GroupElement AbelianGroupPresentation::zero() const {
    return GroupElement{IntVector(free_rank_, Integer(0)),
                        IntVector(invariant_factors_.size(), Integer(0))};
}

GroupElement AbelianGroupPresentation::add(const GroupElement& a, const GroupElement& b) const {
    return reduce(GroupElement{a.free + b.free, a.torsion + b.torsion});
}

GroupElement AbelianGroupPresentation::negate(const GroupElement& a) const {
    return reduce(GroupElement{-a.free, -a.torsion});
}

GroupElement AbelianGroupPresentation::scale(const Integer& k, const GroupElement& a) const {
    return reduce(GroupElement{k * a.free, k * a.torsion});
}

bool AbelianGroupPresentation::is_zero(const GroupElement& e) const {
    return toric::is_zero(e.free) && toric::is_zero(reduce(e).torsion);
}

std::string AbelianGroupPresentation::describe() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ > 0) {
        os << 'Z';
        if (free_rank_ > 1) os << '^' << free_rank_;
        first = false;
    }
    for (const auto& d : invariant_factors_) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

AbelianGroupPresentation cokernel(const IntMatrix& A) {
    const std::size_t m = A.rows();
    const SmithForm f = smith_normal_form(A);
    std::vector<std::size_t> order;
    std::vector<Integer> factors;
    for (std::size_t i = f.rank; i < m; ++i) order.push_back(i);
    const std::size_t free_rank = order.size();
    for (std::size_t i = 0; i < f.rank; ++i)
        if (f.S(i, i) > 1) {
            order.push_back(i);
            factors.push_back(f.S(i, i));
        }
    IntMatrix projection(order.size(), m);
    IntMatrix lift(m, order.size());
    for (std::size_t g = 0; g < order.size(); ++g)
        for (std::size_t j = 0; j < m; ++j) {
            projection(g, j) = f.U(order[g], j);
            lift(j, g) = f.U_inv(j, order[g]);
        }
    return AbelianGroupPresentation(free_rank, std::move(factors), std::move(projection),
                                    std::move(lift));
}

}  // namespace toric
