#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "seqlab/error.hpp"
#include "seqlab/families.hpp"
#include "seqlab/random.hpp"
#include "seqlab/weil.hpp"

using namespace seqlab;

namespace {

double op_distance_up_to_scalar(const UnitaryOp& a, const UnitaryOp& b, cplx* scalar = nullptr) {
    const auto ma = a.matrix(), mb = b.matrix();
    std::size_t k = 0;
    for (std::size_t i = 1; i < ma.size(); ++i) {
        if (std::abs(ma[i]) > std::abs(ma[k])) k = i;
    }
    const cplx c = mb[k] / ma[k];
    double worst = 0.0;
    for (std::size_t i = 0; i < ma.size(); ++i) worst = std::max(worst, std::abs(mb[i] - c * ma[i]));
    if (scalar) *scalar = c;
    return worst;
}

// The torus normalizer consists of the diagonal and anti-diagonal matrices.
bool in_normalizer(const SL2Element& g) { return (g.b == 0 && g.c == 0) || (g.a == 0 && g.d == 0); }

}  // namespace

TEST(SL2, GroupBasics) {
    const auto f = make_field(5);
    const auto g = SL2Element::make(f, 2, 1, 1, 1);
    EXPECT_EQ(sl2_mul(g, SL2Element::identity(5)), g);
    EXPECT_EQ(sl2_mul(g, g.inverse()), SL2Element::identity(5));
    const auto w = SL2Element::weyl(f);
    EXPECT_EQ(sl2_mul(w, w), SL2Element::make(f, 4, 0, 0, 4));
    EXPECT_THROW(SL2Element::make(f, 1, 1, 1, 1), Error);
    EXPECT_THROW(sl2_mul(g, SL2Element::identity(7)), Error);
    const auto h = sl2_act_heisenberg(w, {1, 0, 0});
    EXPECT_EQ(h, (HeisenbergElement{0, 4, 0}));
    EXPECT_EQ(sl2_act_heisenberg(SL2Element::identity(5), {3, 2, 1}), (HeisenbergElement{3, 2, 1}));
}

TEST(SL2, CountsAndRandomDraws) {
    const auto f = make_field(5);
    EXPECT_EQ(all_sl2(f).size(), 120u);  // p(p^2-1)
    Rng rng(4);
    for (int k = 0; k < 200; ++k) EXPECT_EQ(random_sl2(f, rng).determinant(), 1);
}

TEST(Rho, GeneratorCases) {
    for (int p : {5, 7}) {
        const auto f = make_field(p);
        for (int a = 1; a < p; ++a) {
            EXPECT_LT(op_distance_up_to_scalar(rho(f, SL2Element::diagonal(f, a)), UnitaryOp::scale(f, a)), 1e-12);
        }
        for (int b = 0; b < p; ++b) {
            cplx c;
            EXPECT_LT(op_distance_up_to_scalar(rho(f, SL2Element::lower(f, b)), UnitaryOp::chirp(f, b), &c), 1e-12);
            EXPECT_LT(std::abs(c - 1.0), 1e-12);
        }
        cplx c;
        EXPECT_LT(op_distance_up_to_scalar(rho(f, SL2Element::weyl(f)), UnitaryOp::fourier(f), &c), 1e-12);
        EXPECT_NEAR(std::abs(c), 1.0, 1e-12);
    }
}

TEST(Torus, BasisExampleOrthonormalityAndEigenvalues) {
    const auto f5 = make_field(5, 2);
    const auto b5 = standard_torus_basis(f5);
    ASSERT_EQ(b5.size(), 3u);
    const std::vector<int> logs{0, 1, 3, 2};
    for (int i = 1; i < 5; ++i) EXPECT_LT(std::abs(b5[0][i] - 0.5 * oracle::mono(5, logs[i - 1], 0)), 1e-12);
    for (int p : {5, 7, 11}) {
        const auto f = make_field(p);
        const auto basis = standard_torus_basis(f);
        for (std::size_t x = 0; x < basis.size(); ++x) {
            EXPECT_EQ(basis[x][0], cplx(0.0));
            for (std::size_t y = 0; y < basis.size(); ++y) {
                EXPECT_LT(std::abs(inner_product(basis[x], basis[y]) - cplx(x == y ? 1.0 : 0.0)), 1e-9);
            }
            const auto lhs = scale(f, basis[x], f.generator());
            const cplx ev = oracle::mono(p, (p - 1) / 2 - static_cast<int>(x + 1), 0);
            for (int i = 0; i < p; ++i) EXPECT_LT(std::abs(lhs[i] - ev * basis[x][i]), 1e-9);
        }
    }
}

TEST(Cosets, RepresentativesAreDistinctClasses) {
    for (int p : {5, 7}) {
        const auto f = make_field(p);
        const auto reps = coset_representatives(f);
        ASSERT_EQ(reps.size(), static_cast<std::size_t>(p * (p + 1) / 2));
        for (const auto& g : reps) EXPECT_EQ(g.determinant(), 1);
        for (std::size_t i = 0; i < reps.size(); ++i) {
            for (std::size_t j = 0; j < reps.size(); ++j) {
                EXPECT_EQ(in_normalizer(sl2_mul(reps[i].inverse(), reps[j])), i == j);
            }
        }
        // and they cover the whole group
        std::set<std::tuple<int, int, int, int>> covered;
        const auto norm = torus_normalizer(f);
        EXPECT_EQ(norm.size(), static_cast<std::size_t>(2 * (p - 1)));
        for (const auto& n : norm) EXPECT_TRUE(in_normalizer(n));
        for (const auto& g : reps) {
            for (const auto& n : norm) {
                const auto gn = sl2_mul(g, n);
                covered.insert({gn.a, gn.b, gn.c, gn.d});
            }
        }
        EXPECT_EQ(covered.size(), all_sl2(f).size());
    }
}

TEST(SplitSystem, StructureAndOrthonormalSlices) {
    const auto f = make_field(5);
    const auto members = split_system_members(f);
    ASSERT_EQ(members.size(), 45u);
    const auto basis = standard_torus_basis(f);
    for (std::size_t k = 0; k < members.size(); ++k) {
        EXPECT_NEAR(members[k].sequence.norm(), 1.0, 1e-9);
        if (members[k].g == SL2Element::identity(5)) {
            EXPECT_LT(max_abs_diff(members[k].sequence, basis[members[k].x - 1]), 1e-12);
        }
    }
    for (std::size_t k = 0; k < members.size(); k += 3) {
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                const auto ip = inner_product(members[k + i].sequence, members[k + j].sequence);
                EXPECT_LT(std::abs(ip - cplx(i == j ? 1.0 : 0.0)), 1e-9);
            }
        }
    }
}

TEST(SplitSystem, MatchesClosedFormFamily) {
    for (int p : {5, 7}) {
        const auto rep = verify_theorem2(make_field(p));
        EXPECT_TRUE(rep.pass());
        EXPECT_EQ(rep.pairs.size(), static_cast<std::size_t>(p * (p + 1) * (p - 2) / 2));
        EXPECT_TRUE(rep.unmatched_family.empty());
        EXPECT_TRUE(rep.unmatched_system.empty());
        EXPECT_EQ(rep.scalars_other, 0u);
        EXPECT_EQ(rep.scalars_plus_one + rep.scalars_minus_one, rep.pairs.size());
        EXPECT_LT(rep.worst_unit_deviation, 1e-8);
        std::set<std::size_t> seen;
        for (const auto& pr : rep.pairs) seen.insert(pr.family_index);
        EXPECT_EQ(seen.size(), rep.pairs.size());
    }
}

TEST(Representation, IntertwiningExamples) {
    const auto f = make_field(5, 2);
    const auto id = verify_intertwining(f, SL2Element::identity(5), {1, 2, 3}, 5, 1);
    EXPECT_TRUE(id.pass);
    EXPECT_LT(std::abs(id.scalar - 1.0), 1e-12);
    const auto diag = verify_intertwining(f, SL2Element::diagonal(f, 2), {1, 0, 0}, 5, 1);
    EXPECT_TRUE(diag.pass);
    const auto center = verify_intertwining(f, SL2Element::make(f, 2, 1, 1, 1), {0, 0, 3}, 5, 1);
    EXPECT_TRUE(center.pass);
    EXPECT_LT(std::abs(center.scalar - 1.0), 1e-12);
}

TEST(Representation, IntertwiningRandomAtSeven) {
    const auto f = make_field(7);
    Rng rng(2024);
    for (int k = 0; k < 100; ++k) {
        const auto g = random_sl2(f, rng);
        const HeisenbergElement h{static_cast<int>(rng.below(7)), static_cast<int>(rng.below(7)),
                                  static_cast<int>(rng.below(7))};
        const auto rep = verify_intertwining(f, g, h, 3, k);
        EXPECT_TRUE(rep.pass) << g.str();
        EXPECT_LE(rep.worst_residual, 1e-8);
        EXPECT_NEAR(std::abs(rep.scalar), 1.0, 1e-9);
    }
}

TEST(Representation, HomomorphismIsProjective) {
    const auto f = make_field(7);
    const auto lower = SL2Element::lower(f, 1);
    const auto id = homomorphism_check(f, lower, SL2Element::identity(7), 4, 1);
    EXPECT_TRUE(id.exact_lift);
    const auto sq = homomorphism_check(f, lower, lower, 4, 1);
    EXPECT_TRUE(sq.exact_lift);
    Rng rng(77);
    for (int k = 0; k < 30; ++k) {
        const auto rep = homomorphism_check(f, random_sl2(f, rng), random_sl2(f, rng), 3, k);
        EXPECT_TRUE(rep.pass);
        EXPECT_NEAR(std::abs(rep.scalar), 1.0, 1e-9);
    }
}
