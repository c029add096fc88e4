#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "braidrep/errors.hpp"
#include "braidrep/monomial.hpp"
#include "braidrep/scalar.hpp"

namespace braidrep {

/// Dense matrix of exact scalars. Used for oracles (full multiplication),
/// rank computation, and rendering; never for generator storage.
class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DenseMatrix identity(std::size_t dim) {
        DenseMatrix m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Scalar::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) throw DimMismatch(a.cols_, b.rows_);
        DenseMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Scalar& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }
    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimMismatch(a.rows_, b.rows_);
        DenseMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }
    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/// Dense rendering: entry (perm[x], x) = scale[x]; exactly dim nonzeros.
inline DenseMatrix mm_to_dense(const MonomialMatrix& a) {
    DenseMatrix m(a.dim(), a.dim());
    for (std::size_t x = 0; x < a.dim(); ++x) m.at(a.perm(x), x) = a.scale(x);
    return m;
}

/// Exact rank after evaluating every entry at t := at, by plain Gaussian
/// elimination over the Gaussian-rational field. Row updates only touch the
/// pivot row's nonzero columns, so nearly-block-diagonal matrices (the
/// generator-minus-identity shape) eliminate in close to linear time.
/// Requires at != 0.
inline std::size_t dense_rank(const DenseMatrix& a, const GaussianRational& at) {
    if (at.is_zero()) throw EvalAtZero("dense_rank: evaluation point must be nonzero");
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::vector<GaussianRational>> m(
        rows, std::vector<GaussianRational>(cols, GaussianRational::zero()));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (!a.at(i, j).is_zero()) m[i][j] = a.at(i, j).eval(at);

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) std::swap(m[pivot], m[r]);
        const GaussianRational inv = m[r][c].inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            GaussianRational factor = m[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j)
                if (!m[r][j].is_zero()) m[i][j] = m[i][j] - factor * m[r][j];
        }
        ++r;
    }
    return r;
}

/// Exact rank over the fraction field of the Laurent ring: one-step
/// fraction-free (Bareiss) elimination with entries staying Laurent
/// polynomials. Entries after step k are minors of the original matrix, so
/// dividing by the previous pivot is exact. Certifying path for generic-t
/// rank claims.
inline std::size_t dense_rank_symbolic(const DenseMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a.at(i, j);

    Scalar prev = Scalar::one();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) {
                // rows outside the pivot column still rescale to stay minors
                for (std::size_t j = c + 1; j < cols; ++j)
                    if (!m[i][j].is_zero()) m[i][j] = exact_div(m[r][c] * m[i][j], prev);
                continue;
            }
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = exact_div(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
            m[i][c] = Scalar::zero();
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

/// Fast generic-rank path: evaluates at 3 seeded random rational points away
/// from {0, 1, -1} and requires agreement; falls back to the symbolic rank if
/// the points disagree (rank can only drop on a proper closed subset).
inline std::size_t generic_rank(const DenseMatrix& a, std::uint64_t rng_seed) {
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<int> num(2, 97);
    std::uniform_int_distribution<int> den(1, 7);
    std::size_t first = 0;
    bool have_first = false;
    for (int i = 0; i < 3; ++i) {
        Rational p(num(rng), den(rng));  // >= 2/7 and never 0; skip 1 and -1 below
        while (p == 1 || p == -1) p = Rational(num(rng), den(rng));
        std::size_t r = dense_rank(a, GaussianRational(p));
        if (!have_first) {
            first = r;
            have_first = true;
        } else if (r != first) {
            return dense_rank_symbolic(a);
        }
    }
    return first;
}

}  // namespace braidrep
