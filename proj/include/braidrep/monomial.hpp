#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "braidrep/errors.hpp"
#include "braidrep/scalar.hpp"

namespace braidrep {

/// Generalized permutation matrix: one nonzero scalar per row and column.
///
/// Action contract: M * e_x = scale[x] * e_{perm[x]}, i.e. perm and scale are
/// indexed by source column. Every generator image has this shape, so
/// composition stays O(dim) instead of O(dim^3).
class MonomialMatrix {
public:
    MonomialMatrix(std::vector<std::size_t> perm, std::vector<Scalar> scale)
        : dim_(perm.size()), perm_(std::move(perm)), scale_(std::move(scale)) {
        if (scale_.size() != dim_) throw DimMismatch(dim_, scale_.size());
        std::vector<bool> seen(dim_, false);
        for (std::size_t target : perm_) {
            if (target >= dim_ || seen[target])
                throw Error("perm is not a bijection on {0,...,dim-1}");
            seen[target] = true;
        }
        for (std::size_t x = 0; x < dim_; ++x)
            if (scale_[x].is_zero())
                throw Error("monomial scale at column " + std::to_string(x) + " is zero");
    }

    static MonomialMatrix identity(std::size_t dim) {
        std::vector<std::size_t> perm(dim);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        return MonomialMatrix(std::move(perm), std::vector<Scalar>(dim, Scalar::one()));
    }

    std::size_t dim() const { return dim_; }
    std::size_t perm(std::size_t x) const { return perm_[x]; }
    const std::vector<std::size_t>& perm() const { return perm_; }
    const Scalar& scale(std::size_t x) const { return scale_[x]; }
    const std::vector<Scalar>& scales() const { return scale_; }

    /// Image of basis vector e_x: (target row, scale).
    std::pair<std::size_t, const Scalar&> apply(std::size_t x) const {
        return {perm_[x], scale_[x]};
    }

    bool is_identity() const {
        for (std::size_t x = 0; x < dim_; ++x)
            if (perm_[x] != x || !scale_[x].is_one()) return false;
        return true;
    }

    friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
        if (a.dim_ != b.dim_) throw DimMismatch(a.dim_, b.dim_);
        return a.perm_ == b.perm_ && a.scale_ == b.scale_;
    }
    friend bool operator!=(const MonomialMatrix& a, const MonomialMatrix& b) { return !(a == b); }

private:
    std::size_t dim_;
    std::vector<std::size_t> perm_;
    std::vector<Scalar> scale_;
};

/// (a o b) e_x = scale_b[x] * scale_a[perm_b[x]] * e_{perm_a[perm_b[x]]} — the
/// matrix product a * b.
inline MonomialMatrix mm_compose(const MonomialMatrix& a, const MonomialMatrix& b) {
    if (a.dim() != b.dim()) throw DimMismatch(a.dim(), b.dim());
    std::vector<std::size_t> perm(a.dim());
    std::vector<Scalar> scale(a.dim());
    for (std::size_t x = 0; x < a.dim(); ++x) {
        std::size_t mid = b.perm(x);
        perm[x] = a.perm(mid);
        scale[x] = b.scale(x) * a.scale(mid);
    }
    return MonomialMatrix(std::move(perm), std::move(scale));
}

/// Inverse; every scale must be a unit of the Laurent ring (a single term).
inline MonomialMatrix mm_inverse(const MonomialMatrix& a) {
    std::vector<std::size_t> perm(a.dim());
    std::vector<Scalar> scale(a.dim());
    for (std::size_t x = 0; x < a.dim(); ++x) {
        if (!a.scale(x).is_unit()) throw NonInvertibleScale(x);
        perm[a.perm(x)] = x;
        scale[a.perm(x)] = a.scale(x).unit_inverse();
    }
    return MonomialMatrix(std::move(perm), std::move(scale));
}

/// Adjoint with respect to the orthonormal basis: the permutation inverts and
/// the scale conjugates, scale*[y] = conj(scale[perm^-1[y]]).
inline MonomialMatrix mm_adjoint(const MonomialMatrix& a) {
    std::vector<std::size_t> perm(a.dim());
    std::vector<Scalar> scale(a.dim());
    for (std::size_t x = 0; x < a.dim(); ++x) {
        perm[a.perm(x)] = x;
        scale[a.perm(x)] = a.scale(x).conj();
    }
    return MonomialMatrix(std::move(perm), std::move(scale));
}

inline bool mm_equal(const MonomialMatrix& a, const MonomialMatrix& b) { return a == b; }

}  // namespace braidrep
