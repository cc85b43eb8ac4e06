#include "ccmk/znf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ccmk::znf {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("IntegerMatrix: ragged initializer");
        }
        for (long v : r) data_.emplace_back(v);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_columns(std::size_t rows,
                                          const std::vector<IntegerVector>& cols) {
    IntegerMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) {
            throw std::invalid_argument("IntegerMatrix::from_columns: length mismatch");
        }
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

IntegerVector IntegerMatrix::column(std::size_t c) const {
    IntegerVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntegerVector IntegerMatrix::row(std::size_t r) const {
    return IntegerVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                         data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntegerMatrix: shape mismatch in product");
    IntegerMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += x * b(k, j);
        }
    return p;
}

IntegerVector operator*(const IntegerMatrix& a, const IntegerVector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("IntegerMatrix: shape mismatch in product");
    IntegerVector out(a.rows_, Integer(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << ", ";
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ", ";
            os << (*this)(r, c).get_str();
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace {

struct Reducer {
    IntegerMatrix m;
    IntegerMatrix u;
    IntegerMatrix v;

    void swap_rows(std::size_t a, std::size_t b) {
        m.swap_rows(a, b);
        u.swap_rows(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        m.swap_cols(a, b);
        v.swap_cols(a, b);
    }
    void add_row(std::size_t dst, std::size_t src, const Integer& f) {
        m.add_row_multiple(dst, src, f);
        u.add_row_multiple(dst, src, f);
    }
    void add_col(std::size_t dst, std::size_t src, const Integer& f) {
        m.add_col_multiple(dst, src, f);
        v.add_col_multiple(dst, src, f);
    }
};

// Row-major scan for the smallest nonzero |entry| in the block [t.., t..].
bool find_block_pivot(const IntegerMatrix& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Integer best;
    for (std::size_t r = t; r < m.rows(); ++r)
        for (std::size_t c = t; c < m.cols(); ++c) {
            const Integer& x = m(r, c);
            if (x == 0) continue;
            Integer ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pr = r;
                pc = c;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
    Reducer red{a, IntegerMatrix::identity(a.rows()), IntegerMatrix::identity(a.cols())};
    IntegerMatrix& m = red.m;
    const std::size_t limit = std::min(a.rows(), a.cols());

    std::size_t t = 0;
    for (; t < limit; ++t) {
        std::size_t pr = 0, pc = 0;
        if (!find_block_pivot(m, t, pr, pc)) break;
        red.swap_rows(t, pr);
        red.swap_cols(t, pc);

        for (;;) {
            for (std::size_t r = t + 1; r < m.rows(); ++r) {
                if (m(r, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), m(t, t).get_mpz_t());
                red.add_row(r, t, -q);
            }
            for (std::size_t c = t + 1; c < m.cols(); ++c) {
                if (m(t, c) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), m(t, t).get_mpz_t());
                red.add_col(c, t, -q);
            }

            // Remainders are strictly smaller than the pivot; promote the
            // smallest one and go again.
            bool have = false;
            bool in_col = false;
            std::size_t at = 0;
            Integer best;
            for (std::size_t r = t + 1; r < m.rows(); ++r) {
                if (m(r, t) == 0) continue;
                Integer ax = abs(m(r, t));
                if (!have || ax < best) { have = true; best = ax; in_col = true; at = r; }
            }
            for (std::size_t c = t + 1; c < m.cols(); ++c) {
                if (m(t, c) == 0) continue;
                Integer ax = abs(m(t, c));
                if (!have || ax < best) { have = true; best = ax; in_col = false; at = c; }
            }
            if (have) {
                if (in_col) red.swap_rows(t, at);
                else red.swap_cols(t, at);
                continue;
            }

            // Row and column are clear; enforce divisibility of the rest.
            bool fixed = false;
            for (std::size_t r = t + 1; r < m.rows() && !fixed; ++r)
                for (std::size_t c = t + 1; c < m.cols(); ++c) {
                    if (mpz_divisible_p(m(r, c).get_mpz_t(), m(t, t).get_mpz_t())) continue;
                    red.add_row(t, r, Integer(1));
                    fixed = true;
                    break;
                }
            if (!fixed) break;
        }

        if (m(t, t) < 0) {
            m.negate_row(t);
            red.u.negate_row(t);
        }
    }

    SmithDecomposition out;
    out.diagonal.reserve(t);
    for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(m(i, i));
    out.U = std::move(red.u);
    out.D = std::move(red.m);
    out.V = std::move(red.v);
    return out;
}

std::size_t rank(const IntegerMatrix& a) {
    return smith_normal_form(a).rank();
}

std::vector<IntegerVector> kernel_basis(const IntegerMatrix& a) {
    SmithDecomposition snf = smith_normal_form(a);
    std::vector<IntegerVector> basis;
    for (std::size_t c = snf.rank(); c < a.cols(); ++c) basis.push_back(snf.V.column(c));
    return basis;
}

CokernelInvariants cokernel_invariants(const IntegerMatrix& a) {
    SmithDecomposition snf = smith_normal_form(a);
    CokernelInvariants out;
    out.free_rank = a.rows() - snf.rank();
    for (const Integer& d : snf.diagonal)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

Integer determinant(const IntegerMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntegerMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
            if (swap_with == n) return 0;
            m.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

}  // namespace ccmk::znf
