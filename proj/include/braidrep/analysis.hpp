#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidrep/dense.hpp"
#include "braidrep/errors.hpp"
#include "braidrep/representation.hpp"

namespace braidrep {

// ---------------------------------------------------------------------------
// Separation check
//
// The hypothesis behind the main irreducibility criterion: every pair of
// distinct basis tuples x, y is distinguished by |q(x_j, x_{j+1})|^2 !=
// |q(y_j, y_{j+1})|^2 at some place j. With self-adjoint generators this
// forces the squares of the generators to be diagonal with fully separated
// eigenvalue patterns, so any invariant projection is diagonal too.
// ---------------------------------------------------------------------------

enum class SeparationMode {
    all_pairs,         // the hypothesis as stated
    consecutive_only,  // diagnostic: only pairs consecutive in the lex basis
                       // order, which is all the inductive argument consumes
};

struct SeparationReport {
    bool holds = false;
    std::optional<std::pair<ValueTuple, ValueTuple>> witness_pair;  // first violating pair
    bool self_adjoint = false;
    SeparationMode mode = SeparationMode::all_pairs;
};

namespace detail {

/// profile(x) = (|q(x_1,x_2)|^2, ..., |q(x_{n-1},x_n)|^2) as formal scalars.
inline std::vector<Scalar> abs_sq_profile(const Representation& rep, const ValueTuple& x) {
    std::vector<Scalar> p;
    p.reserve(x.size() - 1);
    for (std::size_t j = 0; j + 1 < x.size(); ++j)
        p.push_back(rep.q.get(x[j], x[j + 1]).abs_sq());
    return p;
}

inline std::vector<std::vector<Scalar>> all_profiles(const Representation& rep) {
    std::vector<std::vector<Scalar>> profiles;
    profiles.reserve(rep.dim());
    for (const ValueTuple& x : rep.orbit.basis) profiles.push_back(abs_sq_profile(rep, x));
    return profiles;
}

}  // namespace detail

inline SeparationReport separation_check(const Representation& rep,
                                         SeparationMode mode = SeparationMode::all_pairs) {
    SeparationReport report;
    report.mode = mode;
    report.self_adjoint = classify_adjointness(rep).all_self_adjoint;
    const auto profiles = detail::all_profiles(rep);
    const std::size_t dim = rep.dim();

    report.holds = true;
    if (mode == SeparationMode::consecutive_only) {
        for (std::size_t i = 0; i + 1 < dim; ++i) {
            if (profiles[i] == profiles[i + 1]) {
                report.holds = false;
                report.witness_pair = {rep.orbit.basis[i], rep.orbit.basis[i + 1]};
                return report;
            }
        }
        return report;
    }
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            if (profiles[i] == profiles[j]) {
                report.holds = false;
                report.witness_pair = {rep.orbit.basis[i], rep.orbit.basis[j]};
                return report;
            }
    return report;
}

// ---------------------------------------------------------------------------
// Commutant dimension (entry-orbit method)
//
// For monomial generators g with g e_x = s[x] e_{p[x]}, the commutation
// equations M g = g M couple exactly two matrix entries each:
//
//     M[p(z), p(c)] = (s[z] / s[c]) * M[z, c]
//
// so the dim^2 entry positions split into orbits under (z,c) -> (p z, p c)
// across all generators, with a multiplicative weight on every edge. Fixing
// one entry of an orbit determines the rest; the orbit supports a nonzero
// solution iff every closed cycle of weights multiplies to 1. The commutant
// dimension is the number of weight-consistent orbits.
// ---------------------------------------------------------------------------

inline std::size_t commutant_dimension(const Representation& rep, const GaussianRational& at) {
    if (at.is_zero()) throw EvalAtZero("commutant_dimension: evaluation point must be nonzero");
    const std::size_t dim = rep.dim();
    const std::size_t gens = rep.generators.size();

    std::vector<std::vector<std::size_t>> perm(gens);
    std::vector<std::vector<GaussianRational>> scale(gens);
    for (std::size_t g = 0; g < gens; ++g) {
        perm[g] = rep.generators[g].perm();
        scale[g].reserve(dim);
        for (std::size_t x = 0; x < dim; ++x) {
            GaussianRational v = rep.generators[g].scale(x).eval(at);
            if (v.is_zero())
                throw DegenerateEvaluation("generator scale vanishes at the evaluation point");
            scale[g].push_back(std::move(v));
        }
    }

    auto index = [dim](std::size_t z, std::size_t c) { return z * dim + c; };
    std::vector<char> visited(dim * dim, 0);
    std::vector<GaussianRational> potential(dim * dim, GaussianRational::zero());
    std::size_t consistent_orbits = 0;

    for (std::size_t start = 0; start < dim * dim; ++start) {
        if (visited[start]) continue;
        bool consistent = true;
        potential[start] = GaussianRational::one();
        visited[start] = 1;
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            std::size_t pos = queue.front();
            queue.pop_front();
            std::size_t z = pos / dim, c = pos % dim;
            for (std::size_t g = 0; g < gens; ++g) {
                std::size_t next = index(perm[g][z], perm[g][c]);
                GaussianRational value = potential[pos] * scale[g][z] / scale[g][c];
                if (!visited[next]) {
                    visited[next] = 1;
                    potential[next] = std::move(value);
                    queue.push_back(next);
                } else if (potential[next] != value) {
                    consistent = false;  // keep walking to mark the whole orbit visited
                }
            }
        }
        if (consistent) ++consistent_orbits;
    }
    return consistent_orbits;
}

// ---------------------------------------------------------------------------
// Corank
// ---------------------------------------------------------------------------

/// rank(phi(tau_k) - 1) per generator. phi(tau_k) - 1 is block diagonal after
/// grouping: a fixed tuple gives the 1x1 block q(a,a) - 1 and a swapped pair
/// gives [[-1, q(b,a)], [q(a,b), -1]], whose rank is 1 exactly when
/// q(a,b) q(b,a) = 1.
struct CorankResult {
    std::vector<std::size_t> measured;              // per k, k = 1..n-1
    std::optional<std::uint64_t> closed_form;       // phi_m only
    bool k_independent = false;
    bool cross_checked = false;                     // dense ranks agreed at every point
};

/// 2(n-2)! / ((m-1)! (n-m-1)!) — the closed-form corank of phi_m.
inline std::uint64_t corank_closed_form(int n, int m) {
    if (n <= 2 || m < 1 || m >= n)
        throw BadRange("corank_closed_form requires n > 2 and 1 <= m < n");
    BigInt value = 2;
    for (int i = 2; i <= n - 2; ++i) value *= i;
    for (int i = 2; i <= m - 1; ++i) value /= i;
    for (int i = 2; i <= n - m - 1; ++i) value /= i;
    if (value > BigInt(UINT64_MAX)) throw BadRange("corank exceeds 2^64");
    return value.convert_to<std::uint64_t>();
}

inline std::size_t structural_corank(const Representation& rep, int k) {
    std::size_t rank = 0;
    const OrbitIndex& orbit = rep.orbit;
    for (std::size_t r = 0; r < orbit.size(); ++r) {
        const ValueTuple& x = orbit.basis[r];
        int a = x[static_cast<std::size_t>(k - 1)];
        int b = x[static_cast<std::size_t>(k)];
        if (a == b) {
            if (rep.q.get(a, a) != Scalar::one()) ++rank;
            continue;
        }
        std::size_t partner = orbit.rank(sigma_k(x, k));
        if (partner < r) continue;  // count each swapped pair once
        rank += (rep.q.get(a, b) * rep.q.get(b, a) == Scalar::one()) ? 1 : 2;
    }
    return rank;
}

/// Structural corank for every generator; optionally cross-checked against
/// dense elimination ranks at the given evaluation points.
inline CorankResult corank(const Representation& rep,
                           const std::vector<Rational>& cross_check_points = {}) {
    CorankResult result;
    result.cross_checked = !cross_check_points.empty();
    for (int k = 1; k <= rep.n - 1; ++k) {
        std::size_t structural = structural_corank(rep, k);
        if (!cross_check_points.empty()) {
            DenseMatrix shifted =
                mm_to_dense(rep.generator(k)) - DenseMatrix::identity(rep.dim());
            for (const Rational& p : cross_check_points) {
                if (dense_rank(shifted, GaussianRational(p)) != structural) {
                    result.cross_checked = false;
                    break;
                }
            }
        }
        result.measured.push_back(structural);
    }
    result.k_independent =
        std::all_of(result.measured.begin(), result.measured.end(),
                    [&](std::size_t r) { return r == result.measured.front(); });
    if (auto m = phi_m_parameter(rep); m && rep.n > 2)
        result.closed_form = corank_closed_form(rep.n, *m);
    return result;
}

// ---------------------------------------------------------------------------
// Irreducibility certification
// ---------------------------------------------------------------------------

struct ReducibilityWitness {
    // "sum_of_basis": the line spanned by sum_x v_x (all q values equal).
    // "complement_symmetric_eigenspace": the +1 eigenspace of the complement
    // involution v_x -> v_{complement(x)} (balanced binary seed, q invariant
    // under complementing both values).
    std::string description;
    std::size_t subspace_dim = 0;
    std::optional<Scalar> eigenvalue;  // sum-line case only
};

struct IrreducibilityCertificate {
    enum class Verdict { irreducible, reducible, undecided };
    enum class Method { dimension_one, separation, phi_m_special_case, commutant, witness };

    Verdict verdict = Verdict::undecided;
    Method method = Method::commutant;
    std::optional<Rational> evaluation_point;  // commutant verdicts hold at this point only
    std::optional<std::size_t> commutant_dim;
    std::optional<ReducibilityWitness> witness;

    static std::string verdict_name(Verdict v) {
        switch (v) {
            case Verdict::irreducible: return "irreducible";
            case Verdict::reducible: return "reducible";
            default: return "undecided";
        }
    }
    static std::string method_name(Method m) {
        switch (m) {
            case Method::dimension_one: return "dimension_one";
            case Method::separation: return "separation";
            case Method::phi_m_special_case: return "phi_m_special_case";
            case Method::commutant: return "commutant";
            default: return "witness";
        }
    }
};

/// The complement involution J: v_x -> v_{complement(x)} as a monomial
/// matrix. Exists iff the orbit is closed under complementation, i.e. the
/// seed is binary with equally many zeros and ones.
inline std::optional<MonomialMatrix> complement_involution(const OrbitIndex& orbit) {
    std::vector<std::size_t> perm;
    perm.reserve(orbit.size());
    for (const ValueTuple& x : orbit.basis) {
        for (int v : x)
            if (v != 0 && v != 1) return std::nullopt;
        ValueTuple bar = complement_tuple(x);
        if (!orbit.contains(bar)) return std::nullopt;
        perm.push_back(orbit.rank(bar));
    }
    return MonomialMatrix(std::move(perm), std::vector<Scalar>(orbit.size(), Scalar::one()));
}

/// True when q(a,b) = q(1-a,1-b) for all binary value pairs of the seed.
inline bool qtable_complement_invariant(const Representation& rep) {
    for (int a : {0, 1})
        for (int b : {0, 1}) {
            if (!rep.q.contains(a, b) || !rep.q.contains(1 - a, 1 - b)) return false;
            if (rep.q.get(a, b) != rep.q.get(1 - a, 1 - b)) return false;
        }
    return true;
}

/// Per-pair diagnostic for the balanced binary case: lists every
/// abs_sq-indistinguishable pair, checks that each one is a complement pair
/// {x, complement(x)}, and exhibits a generator k with sigma_k(x) outside the
/// pair — so no single pair span {v_x, v_xbar} is invariant. (The invariant
/// subspaces that do exist combine all pairs diagonally; see
/// certify_irreducible.)
struct ComplementPairDiagnostic {
    bool all_indistinguishable_are_complement_pairs = true;
    // (x, complement(x)) with the smallest k such that sigma_k(x) leaves the pair
    std::vector<std::pair<std::pair<ValueTuple, ValueTuple>, int>> pairs;
};

inline ComplementPairDiagnostic complement_pair_diagnostic(const Representation& rep) {
    ComplementPairDiagnostic diagnostic;
    const auto profiles = detail::all_profiles(rep);
    const std::size_t dim = rep.dim();
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            if (profiles[i] != profiles[j]) continue;
            const ValueTuple& x = rep.orbit.basis[i];
            const ValueTuple& y = rep.orbit.basis[j];
            if (complement_tuple(x) != y) {
                diagnostic.all_indistinguishable_are_complement_pairs = false;
                continue;
            }
            int refuting_k = 0;
            for (int k = 1; k <= rep.n - 1 && refuting_k == 0; ++k) {
                ValueTuple image = sigma_k(x, k);
                if (image != x && image != y) refuting_k = k;
            }
            if (refuting_k == 0)
                throw Error("no generator moves " + tuple_to_string(x) +
                            " outside its complement pair; impossible for n > 2");
            diagnostic.pairs.push_back({{x, y}, refuting_k});
        }
    }
    return diagnostic;
}

namespace detail {

/// Machine-checks that the line spanned by sum_x v_x is invariant: every
/// generator must act on it by the same scalar (possible iff all q values
/// agree). Returns that scalar when the check passes.
inline std::optional<Scalar> invariant_sum_line(const Representation& rep) {
    if (!rep.q.all_entries_equal() || rep.q.entries().empty()) return std::nullopt;
    Scalar c = rep.q.entries().begin()->second;
    for (const MonomialMatrix& g : rep.generators) {
        // g (sum_x v_x) = sum_x scale[x] v_{perm[x]}; compare against c * sum.
        for (std::size_t x = 0; x < g.dim(); ++x)
            if (g.scale(x) != c) return std::nullopt;
    }
    return c;
}

/// Machine-checks the complement-involution witness: J commutes with every
/// generator exactly, and the +1 eigenspace basis {v_x + v_xbar} is mapped
/// onto itself (each image is a scalar times another pair vector).
inline bool verify_complement_witness(const Representation& rep, const MonomialMatrix& J) {
    for (const MonomialMatrix& g : rep.generators)
        if (mm_compose(J, g) != mm_compose(g, J)) return false;
    for (std::size_t x = 0; x < rep.dim(); ++x) {
        std::size_t bar = J.perm(x);
        if (bar == x) return false;  // complement fixes nothing on binary tuples
        if (bar < x) continue;       // one check per pair
        for (const MonomialMatrix& g : rep.generators) {
            // g (v_x + v_bar) = scale[x] v_{g x} + scale[bar] v_{g bar}; closure
            // in the eigenspace needs equal scales and complementary targets.
            if (g.scale(x) != g.scale(bar)) return false;
            if (J.perm(g.perm(x)) != g.perm(bar)) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Decision procedure, in order:
///   1. dimension 1 -> irreducible.
///   2. separation + self-adjoint generators -> irreducible (the invariant
///      projection must be diagonal, some diagonal entry is 1, and the orbit
///      action is transitive).
///   3. all q equal -> reducible, sum-of-basis line witness.
///   4. balanced binary seed with complement-invariant q -> reducible: the
///      complement involution J commutes with every generator, so its +1/-1
///      eigenspaces are proper invariant subspaces. Both checks are exact
///      and the witness is re-verified by applying every generator.
///   5. otherwise the commutant dimension at the evaluation point: 1 with an
///      adjoint-closed generator set -> irreducible at that point; anything
///      else stays undecided (a scalar commutant alone does not certify
///      irreducibility for non-semisimple representations).
inline IrreducibilityCertificate certify_irreducible(const Representation& rep,
                                                     const Rational& at = Rational(2)) {
    IrreducibilityCertificate cert;
    if (rep.dim() == 1) {
        cert.verdict = IrreducibilityCertificate::Verdict::irreducible;
        cert.method = IrreducibilityCertificate::Method::dimension_one;
        return cert;
    }

    SeparationReport sep = separation_check(rep);
    if (sep.holds && sep.self_adjoint) {
        cert.verdict = IrreducibilityCertificate::Verdict::irreducible;
        cert.method = IrreducibilityCertificate::Method::separation;
        return cert;
    }

    if (auto eigenvalue = detail::invariant_sum_line(rep)) {
        cert.verdict = IrreducibilityCertificate::Verdict::reducible;
        cert.method = IrreducibilityCertificate::Method::witness;
        cert.witness = ReducibilityWitness{"sum_of_basis", 1, *eigenvalue};
        return cert;
    }

    if (auto J = complement_involution(rep.orbit);
        J && qtable_complement_invariant(rep) && detail::verify_complement_witness(rep, *J)) {
        cert.verdict = IrreducibilityCertificate::Verdict::reducible;
        cert.method = IrreducibilityCertificate::Method::witness;
        cert.witness =
            ReducibilityWitness{"complement_symmetric_eigenspace", rep.dim() / 2, std::nullopt};
        return cert;
    }

    cert.method = IrreducibilityCertificate::Method::commutant;
    cert.evaluation_point = at;
    std::size_t cdim = commutant_dimension(rep, GaussianRational(at));
    cert.commutant_dim = cdim;
    AdjointnessReport adjointness = classify_adjointness(rep);
    bool adjoint_closed = true;
    for (const auto& g : adjointness.per_generator)
        adjoint_closed = adjoint_closed && (g.self_adjoint || g.unitary);
    if (cdim == 1 && adjoint_closed)
        cert.verdict = IrreducibilityCertificate::Verdict::irreducible;
    else
        cert.verdict = IrreducibilityCertificate::Verdict::undecided;
    return cert;
}

// ---------------------------------------------------------------------------
// Equivalence with the standard representation (m = 1)
// ---------------------------------------------------------------------------

struct EquivalenceWitness {
    int k;
    std::size_t row, col;
    Scalar lhs, rhs;
};

struct EquivalenceReport {
    int n = 0;
    bool pass = false;
    std::vector<bool> per_k;
    std::optional<EquivalenceWitness> witness;  // first failing entry
};

/// True iff alpha * lhs == rhs * alpha entrywise; on failure fills `witness`.
inline bool intertwines(const DenseMatrix& alpha, const DenseMatrix& lhs, const DenseMatrix& rhs,
                        int k, std::optional<EquivalenceWitness>& witness) {
    DenseMatrix left = alpha * lhs;
    DenseMatrix right = rhs * alpha;
    for (std::size_t r = 0; r < left.rows(); ++r)
        for (std::size_t c = 0; c < left.cols(); ++c)
            if (left.at(r, c) != right.at(r, c)) {
                if (!witness)
                    witness = EquivalenceWitness{k, r, c, left.at(r, c), right.at(r, c)};
                return false;
            }
    return true;
}

/// Builds the basis bijection alpha: beta_j -> v_{x_j} (x_j the indicator
/// tuple of place j) and checks alpha rho(tau_k) = phi_1(tau_k) alpha exactly.
inline EquivalenceReport check_standard_equivalence(int n) {
    if (n < 2) throw BadRange("check_standard_equivalence requires n >= 2");
    EquivalenceReport report;
    report.n = n;
    Representation phi1 = build_generic(
        [&] {
            ValueTuple seed(static_cast<std::size_t>(n), 0);
            seed[0] = 1;
            return seed;
        }(),
        make_standard_q());
    std::vector<DenseMatrix> rho = build_standard(n);

    DenseMatrix alpha(phi1.dim(), static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        ValueTuple indicator(static_cast<std::size_t>(n), 0);
        indicator[static_cast<std::size_t>(j - 1)] = 1;
        alpha.at(phi1.orbit.rank(indicator), static_cast<std::size_t>(j - 1)) = Scalar::one();
    }

    report.pass = true;
    for (int k = 1; k <= n - 1; ++k) {
        bool ok = intertwines(alpha, rho[static_cast<std::size_t>(k - 1)],
                              mm_to_dense(phi1.generator(k)), k, report.witness);
        report.per_k.push_back(ok);
        report.pass = report.pass && ok;
    }
    return report;
}

}  // namespace braidrep
