#include "seqlab/operators.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "seqlab/error.hpp"

namespace seqlab {

namespace {

void require_same_period(const Sequence& a, const Sequence& b) {
    if (a.period() != b.period()) {
        throw Error(Errc::PeriodMismatch, "periods " + std::to_string(a.period()) + " and " +
                                              std::to_string(b.period()) + " differ");
    }
}

int reduce(std::int64_t v, int m) {
    std::int64_t r = v % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

std::vector<cplx> eta_table(int p) {
    std::vector<cplx> t(p);
    for (int k = 0; k < p; ++k) t[k] = root_of_unity(k, p);
    return t;
}

// result(i) = mult(i) * phi(perm(i)), with the exact form updated by (du(i), dv(i)).
template <typename Perm, typename Dv>
Sequence remap(const Sequence& phi, Perm perm, Dv dv, int du_all, std::string label) {
    const int p = phi.period();
    if (phi.has_exact()) {
        std::vector<ExactEntry> ex(p);
        for (int i = 0; i < p; ++i) {
            const auto& src = phi.exact()[perm(i)];
            if (src) ex[i] = Monomial{src->u + du_all, static_cast<int>(src->v + dv(i))};
        }
        return Sequence::from_exact(p, std::move(ex), phi.exact_scale(), std::move(label));
    }
    std::vector<cplx> out(p);
    const cplx sign = root_of_unity(du_all, p - 1);
    for (int i = 0; i < p; ++i) out[i] = sign * root_of_unity(dv(i), p) * phi[perm(i)];
    return Sequence(std::move(out), std::move(label));
}

}  // namespace

int mod_inverse(std::int64_t x, int m) {
    std::int64_t a = reduce(x, m), b = m, s0 = 1, s1 = 0;
    if (a == 0) throw Error(Errc::DivisionByZero, "no inverse of 0");
    while (b != 0) {
        std::int64_t q = a / b;
        std::swap(a, b);
        b -= q * a;
        std::swap(s0, s1);
        s1 -= q * s0;
    }
    if (a != 1) throw Error(Errc::DivisionByZero, "argument not invertible");
    return reduce(s0, m);
}

cplx inner_product(const Sequence& phi, const Sequence& psi) {
    require_same_period(phi, psi);
    cplx acc{};
    for (int i = 0; i < phi.period(); ++i) acc += phi[i] * std::conj(psi[i]);
    return acc;
}

Sequence time_shift(const Sequence& phi, int t) {
    const int p = phi.period();
    t = reduce(t, p);
    return remap(
        phi, [&](int i) { return (i + t) % p; }, [](int) { return 0; }, 0, phi.label());
}

Sequence phase_shift(const Sequence& phi, int w) {
    const int p = phi.period();
    w = reduce(w, p);
    return remap(
        phi, [](int i) { return i; },
        [&](int i) { return static_cast<std::int64_t>(w) * i % p; }, 0, phi.label());
}

Sequence fourier(const Sequence& phi) {
    const int p = phi.period();
    const auto eta = eta_table(p);
    const double norm = 1.0 / std::sqrt(static_cast<double>(p));
    std::vector<cplx> out(p);
    for (int j = 0; j < p; ++j) {
        cplx acc{};
        for (int i = 0; i < p; ++i) acc += eta[static_cast<std::int64_t>(j) * i % p] * phi[i];
        out[j] = norm * acc;
    }
    return Sequence(std::move(out), phi.label());
}

Sequence chirp(const Sequence& phi, int b) {
    const int p = phi.period();
    const std::int64_t coef = reduce(-static_cast<std::int64_t>((p + 1) / 2) * reduce(b, p), p);
    return remap(
        phi, [](int i) { return i; },
        [&](int i) { return coef * (static_cast<std::int64_t>(i) * i % p) % p; }, 0, phi.label());
}

Sequence scale(const PrimeField& f, const Sequence& phi, int a) {
    if (phi.period() != f.p()) throw Error(Errc::PeriodMismatch, "sequence period differs from field");
    const int p = f.p();
    if (f.reduce(a) == 0) throw Error(Errc::ScaleByZero, "scale by 0 is not invertible");
    const int a_inv = f.inv(a);
    const int du = f.legendre(a) == 1 ? 0 : (p - 1) / 2;
    return remap(
        phi, [&](int i) { return f.mul(a_inv, i); }, [](int) { return 0; }, du, phi.label());
}

Sequence heisenberg(const Sequence& phi, int t, int w, int z) {
    const int p = phi.period();
    t = reduce(t, p);
    w = reduce(w, p);
    z = reduce(z, p);
    const std::int64_t base =
        (static_cast<std::int64_t>((p + 1) / 2) * t % p * w + z) % p;
    return remap(
        phi, [&](int i) { return (i + t) % p; },
        [&](int i) { return (base + static_cast<std::int64_t>(w) * i) % p; }, 0, phi.label());
}

std::optional<int> is_phase_shift_equiv(const Sequence& phi, const Sequence& psi) {
    require_same_period(phi, psi);
    const int p = phi.period();
    if (phi.has_exact() && psi.has_exact() && phi.exact_scale() == psi.exact_scale()) {
        auto ex_phi = phi.exact();
        auto ex_psi = psi.exact();
        std::optional<int> w;
        for (int i = 0; i < p; ++i) {
            const auto& a = ex_phi[i];
            const auto& b = ex_psi[i];
            if (a.has_value() != b.has_value()) return std::nullopt;
            if (!a) continue;
            if (a->u != b->u) return std::nullopt;
            const int dv = reduce(b->v - a->v, p);
            if (i == 0) {
                if (dv != 0) return std::nullopt;
                continue;
            }
            const int cand = static_cast<int>(static_cast<std::int64_t>(dv) * mod_inverse(i, p) % p);
            if (w && *w != cand) return std::nullopt;
            w = cand;
        }
        return w.value_or(0);
    }
    // Numeric: fit w on the first nonzero entry away from i = 0, then validate.
    int w = 0;
    for (int i = 1; i < p; ++i) {
        if (std::abs(phi[i]) <= kEquivTol) continue;
        const cplx ratio = psi[i] / phi[i];
        const double turns = std::arg(ratio) / (2.0 * std::numbers::pi) * p;
        const auto k = static_cast<std::int64_t>(std::llround(turns));
        w = static_cast<int>(reduce(k, p) * static_cast<std::int64_t>(mod_inverse(i, p)) % p);
        break;
    }
    if (max_abs_diff(phase_shift(phi.without_exact(), w), psi) <= kEquivTol) return w;
    return std::nullopt;
}

std::optional<int> is_time_shift_equiv(const Sequence& phi, const Sequence& psi) {
    require_same_period(phi, psi);
    const int p = phi.period();
    const bool exact = phi.has_exact() && psi.has_exact() && phi.exact_scale() == psi.exact_scale();
    for (int t = 0; t < p; ++t) {
        bool match = true;
        for (int i = 0; i < p && match; ++i) {
            const int j = (i + t) % p;
            if (exact) {
                match = psi.exact()[i] == phi.exact()[j];
            } else {
                match = std::abs(psi[i] - phi[j]) <= kEquivTol;
            }
        }
        if (match) return t;
    }
    return std::nullopt;
}

ScalarFit fit_scalar(const Sequence& from, const Sequence& to) {
    require_same_period(from, to);
    int best = 0;
    for (int i = 1; i < from.period(); ++i) {
        if (std::abs(from[i]) > std::abs(from[best])) best = i;
    }
    if (std::abs(from[best]) == 0.0) throw Error(Errc::InvalidArgument, "cannot fit scalar against zero sequence");
    const cplx c = to[best] / from[best];
    double residual = 0.0;
    for (int i = 0; i < from.period(); ++i) residual = std::max(residual, std::abs(to[i] - c * from[i]));
    return {c, residual};
}

std::optional<cplx> is_scalar_multiple(const Sequence& phi, const Sequence& psi, bool unit_only) {
    require_same_period(phi, psi);
    if (phi.norm_squared() == 0.0 || psi.norm_squared() == 0.0) {
        throw Error(Errc::InvalidArgument, "scalar multiple test needs nonzero sequences");
    }
    const auto fit = fit_scalar(phi, psi);
    if (fit.residual > kEquivTol) return std::nullopt;
    if (unit_only && std::abs(std::abs(fit.scalar) - 1.0) > kEquivTol) return std::nullopt;
    return fit.scalar;
}

// ---------------------------------------------------------------------------

UnitaryOp UnitaryOp::identity(const PrimeField& f) { return UnitaryOp(f.p(), Kind::identity, {}); }

UnitaryOp UnitaryOp::time_shift(const PrimeField& f, int t) {
    return UnitaryOp(f.p(), Kind::time_shift, {Step{Kind::time_shift, f.reduce(t)}});
}

UnitaryOp UnitaryOp::phase_shift(const PrimeField& f, int w) {
    return UnitaryOp(f.p(), Kind::phase_shift, {Step{Kind::phase_shift, f.reduce(w)}});
}

UnitaryOp UnitaryOp::fourier(const PrimeField& f) {
    return UnitaryOp(f.p(), Kind::fourier, {Step{Kind::fourier}});
}

UnitaryOp UnitaryOp::chirp(const PrimeField& f, int b) {
    return UnitaryOp(f.p(), Kind::chirp, {Step{Kind::chirp, f.reduce(b)}});
}

UnitaryOp UnitaryOp::scale(const PrimeField& f, int a) {
    if (f.reduce(a) == 0) throw Error(Errc::ScaleByZero, "scale by 0 is not invertible");
    Step s{Kind::scale, f.reduce(a), f.inv(a)};
    s.sign = f.legendre(a);
    return UnitaryOp(f.p(), Kind::scale, {s});
}

UnitaryOp UnitaryOp::heisenberg(const PrimeField& f, int t, int w, int z) {
    return UnitaryOp(f.p(), Kind::heisenberg,
                     {Step{Kind::heisenberg, f.reduce(t), f.reduce(w), f.reduce(z)}});
}

UnitaryOp UnitaryOp::compose(const std::vector<UnitaryOp>& ops) {
    if (ops.empty()) throw Error(Errc::InvalidArgument, "empty composition");
    const int p = ops.front().p_;
    std::vector<Step> steps;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (it->p_ != p) throw Error(Errc::FieldMismatch, "composed operators act on different periods");
        steps.insert(steps.end(), it->steps_.begin(), it->steps_.end());
    }
    return UnitaryOp(p, Kind::composed, std::move(steps));
}

Sequence UnitaryOp::apply(const Sequence& phi) const {
    if (phi.period() != p_) throw Error(Errc::PeriodMismatch, "operator period differs from sequence");
    Sequence cur = phi;
    for (const auto& s : steps_) {
        switch (s.kind) {
            case Kind::time_shift: cur = seqlab::time_shift(cur, s.a); break;
            case Kind::phase_shift: cur = seqlab::phase_shift(cur, s.a); break;
            case Kind::fourier: cur = seqlab::fourier(cur); break;
            case Kind::chirp: cur = seqlab::chirp(cur, s.a); break;
            case Kind::heisenberg: cur = seqlab::heisenberg(cur, s.a, s.b, s.c); break;
            case Kind::scale: {
                const int p = p_;
                auto perm = [&](int i) { return static_cast<int>(static_cast<std::int64_t>(s.b) * i % p); };
                cur = remap(cur, perm, [](int) { return 0; }, s.sign == 1 ? 0 : (p - 1) / 2, cur.label());
                break;
            }
            case Kind::identity:
            case Kind::composed: break;
        }
    }
    return cur;
}

std::vector<cplx> UnitaryOp::matrix() const {
    std::vector<cplx> m(static_cast<std::size_t>(p_) * p_);
    for (int j = 0; j < p_; ++j) {
        const Sequence col = apply(Sequence::delta(p_, j));
        for (int i = 0; i < p_; ++i) m[static_cast<std::size_t>(j) * p_ + i] = col[i];
    }
    return m;
}

std::string UnitaryOp::describe() const {
    if (steps_.empty()) return "I";
    std::ostringstream os;
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        if (it != steps_.rbegin()) os << " o ";
        switch (it->kind) {
            case Kind::time_shift: os << "L_" << it->a; break;
            case Kind::phase_shift: os << "M_" << it->a; break;
            case Kind::fourier: os << "F"; break;
            case Kind::chirp: os << "N_" << it->a; break;
            case Kind::scale: os << "S_" << it->a; break;
            case Kind::heisenberg: os << "pi(" << it->a << "," << it->b << "," << it->c << ")"; break;
            default: break;
        }
    }
    return os.str();
}

}  // namespace seqlab
