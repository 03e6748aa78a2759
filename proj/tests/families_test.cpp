#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "seqlab/error.hpp"
#include "seqlab/families.hpp"
#include "seqlab/operators.hpp"
#include "seqlab/verify.hpp"

using namespace seqlab;

namespace {

// Entries written as theta^u eta^v pairs at p = 5 (theta = i); {-1,-1} marks a zero.
std::vector<cplx> golden(std::initializer_list<std::pair<int, int>> entries) {
    std::vector<cplx> out;
    for (auto [u, v] : entries) out.push_back(u < 0 ? cplx{} : oracle::mono(5, u, v));
    return out;
}

std::vector<cplx> vec(const Sequence& s) { return {s.values().begin(), s.values().end()}; }

constexpr std::pair<int, int> Z{-1, -1};

}  // namespace

TEST(Omega, ExampleOneGoldenVectors) {
    const auto f = make_field(5, 2);
    // theta = i exactly
    EXPECT_LT(std::abs(oracle::mono(5, 1, 0) - cplx(0, 1)), 1e-15);
    const std::vector<std::pair<std::size_t, std::vector<cplx>>> cases{
        {0, golden({Z, {0, 0}, {1, 0}, {3, 0}, {2, 0}})},
        {1, golden({Z, {0, 1}, {1, 2}, {3, 3}, {2, 4}})},
        {2, golden({Z, {0, 2}, {1, 4}, {3, 1}, {2, 3}})},
        {73, golden({Z, {0, 2}, {3, 2}, {1, 0}, {2, 1}})},
        {74, golden({Z, {0, 3}, {3, 4}, {1, 3}, {2, 0}})},
    };
    for (const auto& [n, expected] : cases) {
        EXPECT_LT(oracle::max_diff(vec(omega_sequence(f, n)), expected), 1e-12) << "n=" << n;
    }
}

TEST(Omega, MatchesDirectFormula) {
    for (int p : {5, 7, 11}) {
        const auto f = make_field(p);
        const auto fam = omega_family(f);
        ASSERT_EQ(fam.size(), static_cast<std::size_t>(p * p * (p - 2)));
        for (std::size_t n = 0; n < fam.size(); n += 7) {
            const auto [x, y, z] = omega_index(p, n);
            EXPECT_EQ(static_cast<std::size_t>((x - 1) * p * p + y * p + z), n);
            EXPECT_LT(oracle::max_diff(vec(fam[n]), oracle::omega(p, f.generator(), x, y, z)), 1e-12);
        }
        EXPECT_LT(max_abs_diff(fam.front(), omega_sequence(f, 0)), 1e-15);
    }
}

TEST(Omega, RangeErrors) {
    EXPECT_THROW(omega_sequence(make_field(5), 75), Error);
    try {
        omega_sequence(make_field(3), 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::PTooSmall);
    }
}

TEST(Omega, Magnitudes) {
    const auto f = make_field(7);
    for (const auto& s : omega_family(f)) {
        EXPECT_EQ(s[0], cplx(0.0));
        for (int i = 1; i < 7; ++i) EXPECT_NEAR(std::abs(s[i]), 1.0, 1e-12);
    }
}

TEST(Omega, PhaseShiftStructure) {
    for (int p : {5, 7}) {
        const auto fam = omega_family(make_field(p));
        for (std::size_t i = 0; i < fam.size(); ++i) {
            for (std::size_t j = 0; j < fam.size(); ++j) {
                const auto a = omega_index(p, i), b = omega_index(p, j);
                const auto w = is_phase_shift_equiv(fam[i], fam[j]);
                if (a.x == b.x && a.y == b.y) {
                    ASSERT_TRUE(w);
                    EXPECT_EQ(*w, oracle::mod(b.z - a.z, p));
                } else {
                    EXPECT_FALSE(w);
                }
            }
        }
    }
}

TEST(Omega, NoTwoMembersAreTimeShifts) {
    const auto fam = omega_family(make_field(5));
    for (std::size_t i = 0; i < fam.size(); ++i) {
        for (std::size_t j = i + 1; j < fam.size(); ++j) EXPECT_FALSE(is_time_shift_equiv(fam[i], fam[j]));
    }
    EXPECT_EQ(count_time_shift_classes(fam), 75u);
}

TEST(Omega, IsScaledPhaseShiftOfSplitSlice) {
    const auto f = make_field(5);
    for (std::size_t n = 0; n < 75; ++n) {
        const auto [x, y, z] = omega_index(5, n);
        const auto base = phase_shift(split_oscillator_sequence(f, x, y, 0), z);
        std::vector<cplx> scaled(vec(base));
        for (auto& v : scaled) v *= 2.0;
        EXPECT_LT(oracle::max_diff(vec(omega_sequence(f, n)), scaled), 1e-12);
    }
}

TEST(Split, ZeroBranchExample) {
    const auto s = split_oscillator_sequence(make_field(5, 2), 1, 0, 0);
    const auto expected = golden({Z, {0, 0}, {1, 0}, {3, 0}, {2, 0}});
    for (int i = 0; i < 5; ++i) EXPECT_LT(std::abs(s[i] - 0.5 * expected[i]), 1e-12);
    EXPECT_TRUE(s.has_exact());
}

TEST(Split, NonzeroBranchMatchesDoubleSum) {
    for (int p : {5, 7, 11}) {
        const auto f = make_field(p);
        for (int x = 1; x <= p - 2; ++x) {
            for (int y = 0; y < p; y += 2) {
                for (int b = 1; b <= (p - 1) / 2; ++b) {
                    EXPECT_LT(oracle::max_diff(vec(split_oscillator_sequence(f, x, y, b)),
                                               oracle::split_b(p, f.generator(), x, y, b)),
                              1e-12);
                }
            }
        }
    }
}

TEST(Split, FamilyCardinalityAndNorms) {
    for (int p : {5, 7}) {
        const auto f = make_field(p);
        const auto fam = split_oscillator_family(f);
        EXPECT_EQ(fam.size(), static_cast<std::size_t>(p * (p - 2) * (p + 1) / 2));
        for (const auto& s : fam) EXPECT_NEAR(s.norm(), 1.0, 1e-9);
        const auto ext = extended_split_family(f);
        EXPECT_EQ(ext.size(), p * fam.size());
        for (std::size_t k = 0; k < fam.size(); ++k) {
            EXPECT_LT(max_abs_diff(ext[k * p], fam[k]), 1e-15);
            EXPECT_NEAR(ext[k * p + 1].norm(), 1.0, 1e-9);
        }
    }
}

TEST(Comparison, ChuRows) {
    const auto f = make_field(5);
    const auto y1 = chu_sequence(f, 1);
    const auto y2 = chu_sequence(f, 2);
    const std::vector<int> e1{0, 1, 4, 4, 1}, e2{0, 2, 3, 3, 2};
    for (int i = 0; i < 5; ++i) {
        EXPECT_LT(std::abs(y1[i] - oracle::mono(5, 0, e1[i])), 1e-12);
        EXPECT_LT(std::abs(y2[i] - oracle::mono(5, 0, e2[i])), 1e-12);
    }
    EXPECT_THROW(chu_sequence(f, 0), Error);
}

TEST(Comparison, AlltopAndHeisenbergRows) {
    const auto f = make_field(5);
    const auto a = alltop_cubic_sequence(f, 0);
    const std::vector<int> cubes{0, 1, 3, 2, 4};
    for (int i = 0; i < 5; ++i) EXPECT_LT(std::abs(a[i] - oracle::mono(5, 0, cubes[i])), 1e-12);
    const auto h = heisenberg_sequence(f, 0, 1);
    for (int i = 0; i < 5; ++i) EXPECT_LT(std::abs(h[i] - oracle::mono(5, 0, i)), 1e-12);
    const auto ones = heisenberg_sequence(f, 0, 0);
    for (int i = 0; i < 5; ++i) EXPECT_EQ(ones[i], cplx(1.0));
    for (int y = 1; y < 5; ++y) EXPECT_LT(max_abs_diff(heisenberg_sequence(f, y, 0), chu_sequence(f, y)), 1e-15);
}

TEST(Descriptor, SizesAndOrder) {
    const auto f = make_field(5);
    const std::vector<std::pair<FamilyKind, std::size_t>> sizes{
        {FamilyKind::omega, 75},  {FamilyKind::split_oscillator, 45}, {FamilyKind::extended_split, 225},
        {FamilyKind::chu, 4},     {FamilyKind::alltop_cubic, 5},      {FamilyKind::heisenberg, 25}};
    for (auto [kind, size] : sizes) {
        const FamilyDescriptor d(kind, f);
        EXPECT_EQ(d.size(), size) << d.name();
        const auto all = d.members();
        ASSERT_EQ(all.size(), size);
        for (std::size_t i = 0; i < size; i += 3) EXPECT_LT(max_abs_diff(all[i], d.member(i)), 1e-15);
        EXPECT_EQ(family_kind_from_string(d.name()), kind);
    }
    EXPECT_THROW(family_kind_from_string("gold"), Error);
    EXPECT_THROW(FamilyDescriptor(FamilyKind::omega, make_field(5)).member(75), Error);
}
