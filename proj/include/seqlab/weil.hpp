#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqlab/field.hpp"
#include "seqlab/operators.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

/// 2x2 matrix (a b; c d) over F_p with determinant 1.
struct SL2Element {
    int p = 0;
    int a = 1, b = 0, c = 0, d = 1;

    /// Validates determinant 1; throws InvalidMatrix otherwise.
    static SL2Element make(const PrimeField& f, int a, int b, int c, int d);
    static SL2Element identity(int p) { return {p, 1, 0, 0, 1}; }
    /// diag(a, a^{-1}).
    static SL2Element diagonal(const PrimeField& f, int a);
    /// (1 0; b 1).
    static SL2Element lower(const PrimeField& f, int b);
    /// (0 1; -1 0).
    static SL2Element weyl(const PrimeField& f);

    SL2Element inverse() const;
    int determinant() const;
    std::string str() const;

    bool operator==(const SL2Element&) const = default;
};

SL2Element sl2_mul(const SL2Element& g1, const SL2Element& g2);

class Rng;
/// Uniformly random element of SL_2(F_p).
SL2Element random_sl2(const PrimeField& f, Rng& rng);

/// Element (t, w, z) of the Heisenberg group.
struct HeisenbergElement {
    int t = 0, w = 0, z = 0;
    bool operator==(const HeisenbergElement&) const = default;
};

/// g . (t, w, z) = (a t + b w, c t + d w, z).
HeisenbergElement sl2_act_heisenberg(const SL2Element& g, const HeisenbergElement& h);

/// rho(g) = S_b o N_{bd} o F o N_{a b^{-1}} for b != 0, and S_a o N_{ac} for b = 0.
UnitaryOp rho(const PrimeField& f, const SL2Element& g);

/// Unit eigenvectors phi_x, x = 1..p-2, of rho(diag(a, a^{-1})) for the field's
/// generator a, excluding the two-dimensional -1 eigenspace.
std::vector<Sequence> standard_torus_basis(const PrimeField& f);

/// (1 b; c 1+bc) for b in [0,(p-1)/2], c in [0,p-1], in (b, c) order.
std::vector<SL2Element> coset_representatives(const PrimeField& f);

/// Normalizer of the diagonal torus: diag(a, a^{-1}) and diag(a, a^{-1}) (0 -b; b^{-1} 0).
std::vector<SL2Element> torus_normalizer(const PrimeField& f);

/// Every SL_2(F_p) element, for exhaustive checks at desk-scale p.
std::vector<SL2Element> all_sl2(const PrimeField& f);

struct SplitMember {
    SL2Element g;
    int x;
    Sequence sequence;
};

/// rho(g) phi_x over all coset representatives g and basis vectors phi_x,
/// ordered by representative, then x.
std::vector<SplitMember> split_system_members(const PrimeField& f);
std::vector<Sequence> split_system(const PrimeField& f);

struct Theorem2Pair {
    std::size_t system_index;   // into split_system
    std::size_t family_index;   // into split_oscillator_family
    cplx scalar;                // family member = scalar * system member
    double residual;
};

struct Theorem2Report {
    int p = 0;
    int generator = 0;
    std::size_t system_size = 0;
    std::size_t family_size = 0;
    bool bijection = false;
    std::vector<Theorem2Pair> pairs;
    std::vector<std::size_t> unmatched_system;
    std::vector<std::size_t> unmatched_family;
    std::size_t scalars_plus_one = 0;
    std::size_t scalars_minus_one = 0;
    std::size_t scalars_other = 0;
    double worst_residual = 0.0;
    double worst_unit_deviation = 0.0;  // max | |scalar| - 1 |

    bool pass() const noexcept { return bijection; }
};

/// Matches the Weil-built split system against the closed-form family as
/// multisets, pairing members that agree up to a unit scalar.
Theorem2Report verify_theorem2(const PrimeField& f);

/// Projective identity check: a fitted global unit scalar relating two sides,
/// plus the residual after removing it.
struct RepresentationReport {
    std::string check;
    int p = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    cplx scalar{1.0, 0.0};
    double scalar_spread = 0.0;  // max distance between per-sample scalars
    double worst_residual = 0.0;
    bool exact_lift = false;     // scalar within tolerance of 1
    bool pass = false;

    static constexpr double kResidualTol = 1e-8;
};

/// rho(g) pi(h) rho(g^{-1}) against pi(g.h) on seeded random sequences.
RepresentationReport verify_intertwining(const PrimeField& f, const SL2Element& g,
                                         const HeisenbergElement& h, int samples,
                                         std::uint64_t seed);

/// rho(g1 g2) against rho(g1) o rho(g2) on seeded random sequences.
RepresentationReport homomorphism_check(const PrimeField& f, const SL2Element& g1,
                                        const SL2Element& g2, int samples, std::uint64_t seed);

}  // namespace seqlab
