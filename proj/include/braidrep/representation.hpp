#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidrep/dense.hpp"
#include "braidrep/errors.hpp"
#include "braidrep/monomial.hpp"
#include "braidrep/orbit.hpp"
#include "braidrep/qtable.hpp"

namespace braidrep {

/// A braid-group representation on the orbit basis: n-1 monomial generators
/// with tau_k acting by v_x -> q(x_k, x_{k+1}) v_{sigma_k(x)}. Immutable after
/// construction; every operation on it is pure.
struct Representation {
    int n = 0;
    ValueTuple seed;
    OrbitIndex orbit;
    QTable q;
    std::vector<MonomialMatrix> generators;  // generators[k-1] is the image of tau_k

    std::size_t dim() const { return orbit.size(); }

    const MonomialMatrix& generator(int k) const {  // k is 1-based
        if (k < 1 || k > n - 1)
            throw GeneratorOutOfRange(k, n);
        return generators[static_cast<std::size_t>(k - 1)];
    }
};

/// Builds the generic family member for a seed tuple and q-table.
/// The q-table must be total on the seed's values and everywhere nonzero.
inline Representation build_generic(const ValueTuple& seed, QTable q) {
    q.require_total_for(seed);
    Representation rep;
    rep.n = static_cast<int>(seed.size());
    rep.seed = seed;
    rep.orbit = orbit_generate(seed);
    rep.q = std::move(q);

    const std::size_t dim = rep.orbit.size();
    rep.generators.reserve(static_cast<std::size_t>(rep.n - 1));
    for (int k = 1; k <= rep.n - 1; ++k) {
        std::vector<std::size_t> perm(dim);
        std::vector<Scalar> scale(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            const ValueTuple& x = rep.orbit.basis[r];
            perm[r] = rep.orbit.rank(sigma_k(x, k));
            scale[r] = rep.q.get(x[k - 1], x[k]);
        }
        rep.generators.emplace_back(std::move(perm), std::move(scale));
    }
    return rep;
}

/// phi_m: seed with m ones and n-m zeros, q = 1 on equal pairs and t on
/// unequal pairs; dimension C(n,m).
inline Representation build_phi_m(int n, int m) {
    if (n < 2 || m < 1 || m >= n)
        throw BadRange("build_phi_m requires n >= 2 and 1 <= m < n, got n=" +
                       std::to_string(n) + " m=" + std::to_string(m));
    ValueTuple seed(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < m; ++i) seed[static_cast<std::size_t>(i)] = 1;
    return build_generic(seed, make_phi_q());
}

/// The standard representation rho: n-1 dense matrices, identity except the
/// 2x2 block [[0,t],[1,0]] at rows/cols (k, k+1), 1-based.
inline std::vector<DenseMatrix> build_standard(int n) {
    if (n < 2) throw BadRange("build_standard requires n >= 2");
    std::vector<DenseMatrix> out;
    out.reserve(static_cast<std::size_t>(n - 1));
    for (int k = 1; k <= n - 1; ++k) {
        DenseMatrix m = DenseMatrix::identity(static_cast<std::size_t>(n));
        std::size_t a = static_cast<std::size_t>(k - 1);
        m.at(a, a) = Scalar::zero();
        m.at(a + 1, a + 1) = Scalar::zero();
        m.at(a, a + 1) = Scalar::t();
        m.at(a + 1, a) = Scalar::one();
        out.push_back(std::move(m));
    }
    return out;
}

/// Detects the phi_m shape: binary seed with both values present and the
/// 1-or-t q pattern. Returns m (the number of ones) when it matches.
inline std::optional<int> phi_m_parameter(const Representation& rep) {
    int ones = 0;
    for (int v : rep.seed) {
        if (v != 0 && v != 1) return std::nullopt;
        ones += v;
    }
    if (ones == 0 || ones == rep.n) return std::nullopt;
    for (int a : {0, 1})
        for (int b : {0, 1}) {
            if (!rep.q.contains(a, b)) return std::nullopt;
            const Scalar& expect = (a == b) ? Scalar::one() : Scalar::t();
            if (rep.q.get(a, b) != expect) return std::nullopt;
        }
    return ones;
}

// ---------------------------------------------------------------------------
// Relation verification
// ---------------------------------------------------------------------------

struct RelationWitness {
    ValueTuple x;            // basis vector where the two sides differ
    ValueTuple lhs_target;
    ValueTuple rhs_target;
    Scalar lhs_scalar;       // the two products of pair-scalars
    Scalar rhs_scalar;
};

struct RelationCheck {
    enum class Kind { far_commutation, braid };
    Kind kind;
    int k, j;  // generator indices, 1-based; braid checks use j = k+1
    bool pass;
    std::optional<RelationWitness> witness;

    std::string name() const {
        if (kind == Kind::far_commutation)
            return "tau_" + std::to_string(k) + " tau_" + std::to_string(j) + " = tau_" +
                   std::to_string(j) + " tau_" + std::to_string(k);
        return "tau_" + std::to_string(k) + " tau_" + std::to_string(j) + " tau_" +
               std::to_string(k) + " = tau_" + std::to_string(j) + " tau_" + std::to_string(k) +
               " tau_" + std::to_string(j);
    }
};

struct RelationReport {
    bool all_pass = true;
    std::vector<RelationCheck> checks;
};

namespace detail {
inline std::optional<RelationWitness> first_difference(const Representation& rep,
                                                       const MonomialMatrix& lhs,
                                                       const MonomialMatrix& rhs) {
    for (std::size_t x = 0; x < lhs.dim(); ++x) {
        if (lhs.perm(x) == rhs.perm(x) && lhs.scale(x) == rhs.scale(x)) continue;
        return RelationWitness{rep.orbit.basis[x], rep.orbit.basis[lhs.perm(x)],
                               rep.orbit.basis[rhs.perm(x)], lhs.scale(x), rhs.scale(x)};
    }
    return std::nullopt;
}
}  // namespace detail

/// Checks every generator pair: far pairs commute, adjacent pairs satisfy the
/// braid relation. Exact monomial equality; failures carry a witness basis
/// vector with both scalar products.
inline RelationReport verify_braid_relations(const Representation& rep) {
    RelationReport report;
    for (int k = 1; k <= rep.n - 1; ++k) {
        for (int j = k + 1; j <= rep.n - 1; ++j) {
            const MonomialMatrix& gk = rep.generator(k);
            const MonomialMatrix& gj = rep.generator(j);
            RelationCheck check{};
            check.k = k;
            check.j = j;
            MonomialMatrix lhs = MonomialMatrix::identity(gk.dim());
            MonomialMatrix rhs = lhs;
            if (j - k > 1) {
                check.kind = RelationCheck::Kind::far_commutation;
                lhs = mm_compose(gk, gj);
                rhs = mm_compose(gj, gk);
            } else {
                check.kind = RelationCheck::Kind::braid;
                lhs = mm_compose(mm_compose(gk, gj), gk);
                rhs = mm_compose(mm_compose(gj, gk), gj);
            }
            check.witness = detail::first_difference(rep, lhs, rhs);
            check.pass = !check.witness.has_value();
            report.all_pass = report.all_pass && check.pass;
            report.checks.push_back(std::move(check));
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Adjointness classification
// ---------------------------------------------------------------------------

struct GeneratorAdjointness {
    bool self_adjoint = false;
    bool unitary = false;

    std::string label() const {
        if (self_adjoint && unitary) return "self_adjoint+unitary";
        if (self_adjoint) return "self_adjoint";
        if (unitary) return "unitary";
        return "neither";
    }
};

struct AdjointnessReport {
    std::vector<GeneratorAdjointness> per_generator;
    bool all_self_adjoint = true;
    bool all_unitary = true;
};

/// Decides per generator from the q-table conditions over the pairs that
/// occur at places (k, k+1): self-adjoint iff q(b,a) = conj(q(a,b)), unitary
/// iff |q(a,b)|^2 = 1. Each verdict is re-verified against mm_adjoint.
inline AdjointnessReport classify_adjointness(const Representation& rep) {
    AdjointnessReport report;
    for (int k = 1; k <= rep.n - 1; ++k) {
        GeneratorAdjointness result{true, true};
        for (const ValueTuple& x : rep.orbit.basis) {
            int a = x[static_cast<std::size_t>(k - 1)];
            int b = x[static_cast<std::size_t>(k)];
            const Scalar& q = rep.q.get(a, b);
            if (rep.q.get(b, a) != q.conj()) result.self_adjoint = false;
            if (q.abs_sq() != Scalar::one()) result.unitary = false;
            if (!result.self_adjoint && !result.unitary) break;
        }
        const MonomialMatrix& g = rep.generator(k);
        MonomialMatrix adj = mm_adjoint(g);
        bool oracle_self_adjoint = (adj == g);
        bool oracle_unitary = mm_compose(adj, g).is_identity();
        if (oracle_self_adjoint != result.self_adjoint || oracle_unitary != result.unitary)
            throw Error("adjointness classification disagrees with the matrix adjoint");
        report.per_generator.push_back(result);
        report.all_self_adjoint = report.all_self_adjoint && result.self_adjoint;
        report.all_unitary = report.all_unitary && result.unitary;
    }
    return report;
}

}  // namespace braidrep
