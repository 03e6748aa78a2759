#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "seqlab/error.hpp"
#include "seqlab/operators.hpp"
#include "seqlab/random.hpp"
#include "seqlab/weil.hpp"

using namespace seqlab;

namespace {

std::vector<cplx> vec(const Sequence& s) { return {s.values().begin(), s.values().end()}; }

double unitarity_defect(const UnitaryOp& op) {
    const int p = op.period();
    const auto m = op.matrix();
    double worst = 0.0;
    for (int j = 0; j < p; ++j) {
        for (int k = 0; k < p; ++k) {
            cplx acc{};
            for (int i = 0; i < p; ++i) acc += std::conj(m[j * p + i]) * m[k * p + i];
            worst = std::max(worst, std::abs(acc - cplx(j == k ? 1.0 : 0.0)));
        }
    }
    return worst;
}

}  // namespace

TEST(Sequence, RootOfUnityReducesFirst) {
    EXPECT_LT(std::abs(root_of_unity(7, 5) - oracle::expi(2.0 / 5)), 1e-15);
    EXPECT_LT(std::abs(root_of_unity(-1, 4) - cplx(0, -1)), 1e-15);
    EXPECT_LT(std::abs(root_of_unity(1'000'000'007LL * 3, 4) - root_of_unity(1, 4)), 1e-15);
}

TEST(Sequence, ExactFormReducesAndMatchesValues) {
    const auto s = Sequence::from_exact(5, {std::nullopt, Monomial{5, 7}, Monomial{-1, -1}, Monomial{0, 0}, Monomial{2, 3}}, 0.5);
    EXPECT_EQ(s.exact()[1], (Monomial{1, 2}));
    EXPECT_EQ(s.exact()[2], (Monomial{3, 4}));
    EXPECT_EQ(s[0], cplx(0.0));
    for (int i = 1; i < 5; ++i) {
        const auto m = *s.exact()[i];
        EXPECT_LT(std::abs(s[i] - 0.5 * oracle::mono(5, m.u, m.v)), 1e-15);
    }
}

TEST(Sequence, MaxAbsDiffRejectsMismatchedPeriods) {
    EXPECT_THROW(max_abs_diff(Sequence::delta(5, 0), Sequence::delta(7, 0)), Error);
}

TEST(Operators, ShiftExamples) {
    const Sequence phi(std::vector<cplx>{1, 2, 3, 4, 5});
    EXPECT_EQ(vec(time_shift(phi, 1)), (std::vector<cplx>{2, 3, 4, 5, 1}));
    EXPECT_EQ(vec(time_shift(phi, -1)), (std::vector<cplx>{5, 1, 2, 3, 4}));
    const auto m = phase_shift(Sequence::constant(5), 1);
    for (int i = 0; i < 5; ++i) EXPECT_LT(std::abs(m[i] - oracle::expi(i / 5.0)), 1e-15);
}

TEST(Operators, FourierMatchesDirectDft) {
    Rng rng(11);
    for (int p : {3, 5, 7, 13}) {
        const auto phi = random_sequence(p, rng);
        EXPECT_LT(oracle::max_diff(vec(fourier(phi)), oracle::dft(vec(phi))), 1e-12);
    }
    const auto f = fourier(Sequence::delta(5, 0));
    for (int i = 0; i < 5; ++i) EXPECT_NEAR(std::abs(f[i]), 1.0 / std::sqrt(5.0), 1e-15);
}

TEST(Operators, ChirpScaleHeisenbergMatchDefinitions) {
    Rng rng(3);
    for (int p : {5, 7, 11}) {
        const auto f = make_field(p);
        const auto phi = random_sequence(p, rng);
        const int h = oracle::inv(p, 2);
        for (int b = 0; b < p; ++b) {
            const auto n = chirp(phi, b);
            for (int i = 0; i < p; ++i) {
                EXPECT_LT(std::abs(n[i] - oracle::expi(oracle::mod(-1LL * h * b * i * i, p) / double(p)) * phi[i]), 1e-12);
            }
        }
        for (int a = 1; a < p; ++a) {
            const auto s = scale(f, phi, a);
            const int sigma = oracle::powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
            const int ai = oracle::inv(p, a);
            for (int i = 0; i < p; ++i) EXPECT_LT(std::abs(s[i] - double(sigma) * phi[oracle::mod(1LL * ai * i, p)]), 1e-15);
        }
        const int t = 2, w = 3, z = 1;
        const auto pi = heisenberg(phi, t, w, z);
        for (int i = 0; i < p; ++i) {
            const auto e = oracle::expi(oracle::mod(1LL * h * t * w + z + w * i, p) / double(p));
            EXPECT_LT(std::abs(pi[i] - e * phi[(i + t) % p]), 1e-12);
        }
    }
    EXPECT_THROW(scale(make_field(5), Sequence::constant(5), 0), Error);
}

TEST(Operators, UnitaryOpMatchesFreeFunctions) {
    const auto f = make_field(7);
    Rng rng(5);
    const auto phi = random_sequence(7, rng);
    EXPECT_LT(max_abs_diff(UnitaryOp::time_shift(f, 3)(phi), time_shift(phi, 3)), 1e-15);
    EXPECT_LT(max_abs_diff(UnitaryOp::phase_shift(f, 2)(phi), phase_shift(phi, 2)), 1e-15);
    EXPECT_LT(max_abs_diff(UnitaryOp::fourier(f)(phi), fourier(phi)), 1e-12);
    EXPECT_LT(max_abs_diff(UnitaryOp::chirp(f, 4)(phi), chirp(phi, 4)), 1e-15);
    EXPECT_LT(max_abs_diff(UnitaryOp::scale(f, 3)(phi), scale(f, phi, 3)), 1e-15);
    EXPECT_LT(max_abs_diff(UnitaryOp::heisenberg(f, 1, 2, 3)(phi), heisenberg(phi, 1, 2, 3)), 1e-15);
    // compose applies the rightmost operator first
    const auto c = UnitaryOp::compose({UnitaryOp::time_shift(f, 1), UnitaryOp::phase_shift(f, 1)});
    EXPECT_LT(max_abs_diff(c(phi), time_shift(phase_shift(phi, 1), 1)), 1e-15);
}

TEST(OperatorProperties, Unitarity) {
    for (int p : {5, 7}) {
        const auto f = make_field(p);
        for (int k = 0; k < p; ++k) {
            EXPECT_LT(unitarity_defect(UnitaryOp::time_shift(f, k)), 1e-9);
            EXPECT_LT(unitarity_defect(UnitaryOp::phase_shift(f, k)), 1e-9);
            EXPECT_LT(unitarity_defect(UnitaryOp::chirp(f, k)), 1e-9);
            EXPECT_LT(unitarity_defect(UnitaryOp::heisenberg(f, k, (k + 2) % p, 1)), 1e-9);
            if (k) EXPECT_LT(unitarity_defect(UnitaryOp::scale(f, k)), 1e-9);
        }
        EXPECT_LT(unitarity_defect(UnitaryOp::fourier(f)), 1e-9);
        Rng rng(99);
        for (int n = 0; n < 50; ++n) EXPECT_LT(unitarity_defect(rho(f, random_sl2(f, rng))), 1e-9);
    }
}

TEST(OperatorProperties, ShiftFourierIdentities) {
    Rng rng(17);
    for (int p : {5, 7}) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto phi = random_sequence(p, rng);
            for (int t = 0; t < p; ++t) {
                EXPECT_LT(max_abs_diff(time_shift(fourier(phi), t), fourier(phase_shift(phi, t))), 1e-9);
                EXPECT_LT(max_abs_diff(fourier(time_shift(phi, -t)), phase_shift(fourier(phi), t)), 1e-9);
            }
        }
    }
}

TEST(OperatorProperties, ParsevalWithShifts) {
    Rng rng(23);
    for (int p : {5, 7, 11}) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto phi = random_sequence(p, rng);
            const auto psi = random_sequence(p, rng);
            EXPECT_LT(std::abs(inner_product(fourier(phi), fourier(psi)) - inner_product(phi, psi)), 1e-9);
            for (int t = 0; t < p; ++t) {
                EXPECT_LT(std::abs(inner_product(fourier(phi), time_shift(fourier(psi), t)) -
                                   inner_product(phi, phase_shift(psi, t))),
                          1e-9);
                EXPECT_LT(std::abs(inner_product(fourier(phi), phase_shift(fourier(psi), t)) -
                                   inner_product(phi, time_shift(psi, -t))),
                          1e-9);
            }
        }
    }
}

TEST(OperatorProperties, FourierSquaredIsReflection) {
    Rng rng(29);
    for (int p : {3, 5, 7, 11}) {
        const auto phi = random_sequence(p, rng);
        const auto ff = fourier(fourier(phi));
        for (int i = 0; i < p; ++i) EXPECT_LT(std::abs(ff[i] - phi[(p - i) % p]), 1e-9);
    }
}

TEST(Equivalence, PhaseAndTimeShift) {
    Rng rng(31);
    const auto phi = random_sequence(7, rng);
    EXPECT_EQ(is_phase_shift_equiv(phi, phase_shift(phi, 4)), 4);
    EXPECT_EQ(is_phase_shift_equiv(phi, phi), 0);
    EXPECT_FALSE(is_phase_shift_equiv(phi, time_shift(phi, 1)));
    EXPECT_EQ(is_time_shift_equiv(phi, time_shift(phi, 5)), 5);
    EXPECT_FALSE(is_time_shift_equiv(phi, phase_shift(phi, 1)));
    const auto c = is_scalar_multiple(phi, Sequence(std::vector<cplx>(vec(phase_shift(phi, 0)))), true);
    ASSERT_TRUE(c);
    EXPECT_LT(std::abs(*c - 1.0), 1e-12);
}

TEST(Equivalence, ScalarFitRecoversUnitScalar) {
    Rng rng(37);
    const auto phi = random_sequence(11, rng);
    std::vector<cplx> scaled(vec(phi));
    const cplx z = oracle::expi(0.3);
    for (auto& v : scaled) v *= z;
    const auto fit = fit_scalar(phi, Sequence(scaled));
    EXPECT_LT(std::abs(fit.scalar - z), 1e-12);
    EXPECT_LT(fit.residual, 1e-12);
    EXPECT_EQ(mod_inverse(3, 7), 5);
}
