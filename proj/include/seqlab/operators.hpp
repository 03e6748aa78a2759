#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqlab/field.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

/// Absolute per-entry tolerance for numeric equivalence tests.
inline constexpr double kEquivTol = 1e-9;

/// sum_i phi(i) * conj(psi(i)).
cplx inner_product(const Sequence& phi, const Sequence& psi);

/// L_t: result(i) = phi(i + t).
Sequence time_shift(const Sequence& phi, int t);
/// M_w: result(i) = eta^{w i} phi(i).
Sequence phase_shift(const Sequence& phi, int w);
/// F: result(j) = p^{-1/2} sum_i eta^{j i} phi(i). Drops the exact form.
Sequence fourier(const Sequence& phi);
/// N_b: result(i) = eta^{-2^{-1} b i^2} phi(i).
Sequence chirp(const Sequence& phi, int b);
/// S_a: result(i) = sigma(a) phi(a^{-1} i).
Sequence scale(const PrimeField& f, const Sequence& phi, int a);
/// pi(t,w,z): result(i) = eta^{2^{-1} t w + z + w i} phi(i + t).
Sequence heisenberg(const Sequence& phi, int t, int w, int z);

std::optional<int> is_phase_shift_equiv(const Sequence& phi, const Sequence& psi);
std::optional<int> is_time_shift_equiv(const Sequence& phi, const Sequence& psi);
std::optional<cplx> is_scalar_multiple(const Sequence& phi, const Sequence& psi, bool unit_only);

struct ScalarFit {
    cplx scalar;
    double residual;  // max_i |to(i) - scalar * from(i)|
};

/// Fits `to ~ c * from` from the largest-magnitude entry of `from` (lowest index
/// on ties) and reports the residual over all entries.
ScalarFit fit_scalar(const Sequence& from, const Sequence& to);

/// Modular inverse by extended Euclid; `x` must be nonzero mod `m`.
int mod_inverse(std::int64_t x, int m);

/// A unitary map on period-p sequences, kept as a product of primitive
/// operators rather than a materialized matrix.
class UnitaryOp {
public:
    enum class Kind { identity, time_shift, phase_shift, fourier, chirp, scale, heisenberg, composed };

    static UnitaryOp identity(const PrimeField& f);
    static UnitaryOp time_shift(const PrimeField& f, int t);
    static UnitaryOp phase_shift(const PrimeField& f, int w);
    static UnitaryOp fourier(const PrimeField& f);
    static UnitaryOp chirp(const PrimeField& f, int b);
    static UnitaryOp scale(const PrimeField& f, int a);
    static UnitaryOp heisenberg(const PrimeField& f, int t, int w, int z);
    /// Operator composition in written order: compose({A, B, C}) = A o B o C,
    /// so C is applied first.
    static UnitaryOp compose(const std::vector<UnitaryOp>& ops);

    Kind kind() const noexcept { return kind_; }
    int period() const noexcept { return p_; }
    Sequence apply(const Sequence& phi) const;
    Sequence operator()(const Sequence& phi) const { return apply(phi); }

    /// Column-major p x p matrix whose column j is apply(delta_j).
    std::vector<cplx> matrix() const;
    std::string describe() const;

private:
    struct Step {
        Kind kind;
        int a = 0, b = 0, c = 0;
        int sign = 1;
    };

    UnitaryOp(int p, Kind kind, std::vector<Step> steps)
        : p_(p), kind_(kind), steps_(std::move(steps)) {}

    int p_;
    Kind kind_;
    std::vector<Step> steps_;  // applied first to last
};

}  // namespace seqlab
