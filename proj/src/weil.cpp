#include "seqlab/weil.hpp"

#include <cmath>
#include <sstream>

#include "seqlab/error.hpp"
#include "seqlab/families.hpp"
#include "seqlab/random.hpp"

namespace seqlab {

namespace {

int red(std::int64_t v, int p) {
    std::int64_t r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

void require_field(const PrimeField& f, const SL2Element& g) {
    if (g.p != f.p()) throw Error(Errc::FieldMismatch, "matrix over F_" + std::to_string(g.p));
    if (g.determinant() != 1) throw Error(Errc::InvalidMatrix, g.str() + " has determinant != 1");
}

}  // namespace

SL2Element SL2Element::make(const PrimeField& f, int a, int b, int c, int d) {
    SL2Element g{f.p(), f.reduce(a), f.reduce(b), f.reduce(c), f.reduce(d)};
    if (g.determinant() != 1) throw Error(Errc::InvalidMatrix, g.str() + " has determinant != 1");
    return g;
}

SL2Element SL2Element::diagonal(const PrimeField& f, int a) {
    return make(f, a, 0, 0, f.inv(a));
}

SL2Element SL2Element::lower(const PrimeField& f, int b) { return make(f, 1, 0, b, 1); }

SL2Element SL2Element::weyl(const PrimeField& f) { return make(f, 0, 1, -1, 0); }

SL2Element SL2Element::inverse() const { return {p, d, red(-b, p), red(-c, p), a}; }

int SL2Element::determinant() const {
    return red(static_cast<std::int64_t>(a) * d - static_cast<std::int64_t>(b) * c, p);
}

std::string SL2Element::str() const {
    std::ostringstream os;
    os << "(" << a << "," << b << ";" << c << "," << d << ")";
    return os.str();
}

SL2Element sl2_mul(const SL2Element& g1, const SL2Element& g2) {
    if (g1.p != g2.p) throw Error(Errc::FieldMismatch, "matrices over different fields");
    const int p = g1.p;
    auto dot = [p](int x1, int y1, int x2, int y2) {
        return red(static_cast<std::int64_t>(x1) * y1 + static_cast<std::int64_t>(x2) * y2, p);
    };
    return {p, dot(g1.a, g2.a, g1.b, g2.c), dot(g1.a, g2.b, g1.b, g2.d),
            dot(g1.c, g2.a, g1.d, g2.c), dot(g1.c, g2.b, g1.d, g2.d)};
}

SL2Element random_sl2(const PrimeField& f, Rng& rng) {
    const int p = f.p();
    // Rejection over all p^4 matrices keeps the draw uniform on SL_2.
    for (;;) {
        const int a = static_cast<int>(rng.below(p));
        const int b = static_cast<int>(rng.below(p));
        const int c = static_cast<int>(rng.below(p));
        const int d = static_cast<int>(rng.below(p));
        SL2Element g{p, a, b, c, d};
        if (g.determinant() == 1) return g;
    }
}

HeisenbergElement sl2_act_heisenberg(const SL2Element& g, const HeisenbergElement& h) {
    const int p = g.p;
    return {red(static_cast<std::int64_t>(g.a) * h.t + static_cast<std::int64_t>(g.b) * h.w, p),
            red(static_cast<std::int64_t>(g.c) * h.t + static_cast<std::int64_t>(g.d) * h.w, p),
            red(h.z, p)};
}

UnitaryOp rho(const PrimeField& f, const SL2Element& g) {
    require_field(f, g);
    if (g.b != 0) {
        const int b_inv = f.inv(g.b);
        return UnitaryOp::compose({UnitaryOp::scale(f, g.b), UnitaryOp::chirp(f, f.mul(g.b, g.d)),
                                   UnitaryOp::fourier(f), UnitaryOp::chirp(f, f.mul(g.a, b_inv))});
    }
    return UnitaryOp::compose({UnitaryOp::scale(f, g.a), UnitaryOp::chirp(f, f.mul(g.a, g.c))});
}

std::vector<Sequence> standard_torus_basis(const PrimeField& f) {
    const int p = f.p();
    if (p < 5) throw Error(Errc::PTooSmall, "torus basis needs p >= 5");
    std::vector<Sequence> basis;
    basis.reserve(p - 2);
    const double s = 1.0 / std::sqrt(p - 1.0);
    for (int x = 1; x <= p - 2; ++x) {
        std::vector<ExactEntry> ex(p);
        for (int i = 1; i < p; ++i) {
            ex[i] = Monomial{static_cast<int>(static_cast<std::int64_t>(x) * f.dlog(i) % (p - 1)), 0};
        }
        basis.push_back(Sequence::from_exact(p, std::move(ex), s, "torus(x=" + std::to_string(x) + ")"));
    }
    return basis;
}

std::vector<SL2Element> coset_representatives(const PrimeField& f) {
    const int p = f.p();
    if (p < 5) throw Error(Errc::PTooSmall, "coset representatives need p >= 5");
    std::vector<SL2Element> reps;
    reps.reserve(static_cast<std::size_t>(p) * (p + 1) / 2);
    for (int b = 0; b <= (p - 1) / 2; ++b) {
        for (int c = 0; c < p; ++c) {
            reps.push_back(SL2Element::make(f, 1, b, c, 1 + b * c));
        }
    }
    return reps;
}

std::vector<SL2Element> torus_normalizer(const PrimeField& f) {
    std::vector<SL2Element> out;
    for (int a = 1; a < f.p(); ++a) out.push_back(SL2Element::diagonal(f, a));
    std::vector<SL2Element> swaps;
    for (const auto& d : out) {
        for (int b = 1; b < f.p(); ++b) {
            swaps.push_back(sl2_mul(d, SL2Element::make(f, 0, -b, f.inv(b), 0)));
        }
    }
    // A * B contains each anti-diagonal element p-1 times; keep one copy.
    std::vector<SL2Element> unique;
    for (const auto& s : swaps) {
        bool seen = false;
        for (const auto& u : unique) seen = seen || (u == s);
        if (!seen) unique.push_back(s);
    }
    out.insert(out.end(), unique.begin(), unique.end());
    return out;
}

std::vector<SL2Element> all_sl2(const PrimeField& f) {
    const int p = f.p();
    std::vector<SL2Element> out;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d) {
                    SL2Element g{p, a, b, c, d};
                    if (g.determinant() == 1) out.push_back(g);
                }
    return out;
}

std::vector<SplitMember> split_system_members(const PrimeField& f) {
    const auto basis = standard_torus_basis(f);
    std::vector<SplitMember> out;
    for (const auto& g : coset_representatives(f)) {
        const UnitaryOp op = rho(f, g);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const int x = static_cast<int>(k) + 1;
            auto seq = op(basis[k]).with_label("rho" + g.str() + ".torus(x=" + std::to_string(x) + ")");
            out.push_back({g, x, std::move(seq)});
        }
    }
    return out;
}

std::vector<Sequence> split_system(const PrimeField& f) {
    std::vector<Sequence> out;
    for (auto& m : split_system_members(f)) out.push_back(std::move(m.sequence));
    return out;
}

Theorem2Report verify_theorem2(const PrimeField& f) {
    const auto system = split_system(f);
    const auto family = split_oscillator_family(f);
    Theorem2Report rep;
    rep.p = f.p();
    rep.generator = f.generator();
    rep.system_size = system.size();
    rep.family_size = family.size();

    // Row i lists every family member that is a unit multiple of system member i.
    const auto rows = static_cast<std::int64_t>(system.size());
    std::vector<std::vector<std::pair<std::size_t, ScalarFit>>> candidates(system.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < family.size(); ++j) {
            const auto fit = fit_scalar(system[i], family[j]);
            if (fit.residual <= kEquivTol && std::abs(std::abs(fit.scalar) - 1.0) <= kEquivTol) {
                candidates[i].emplace_back(j, fit);
            }
        }
    }

    std::vector<bool> used(family.size(), false);
    for (std::size_t i = 0; i < system.size(); ++i) {
        bool matched = false;
        for (const auto& [j, fit] : candidates[i]) {
            if (used[j]) continue;
            used[j] = true;
            matched = true;
            rep.pairs.push_back({i, j, fit.scalar, fit.residual});
            rep.worst_residual = std::max(rep.worst_residual, fit.residual);
            rep.worst_unit_deviation =
                std::max(rep.worst_unit_deviation, std::abs(std::abs(fit.scalar) - 1.0));
            if (std::abs(fit.scalar - 1.0) <= kEquivTol) {
                ++rep.scalars_plus_one;
            } else if (std::abs(fit.scalar + 1.0) <= kEquivTol) {
                ++rep.scalars_minus_one;
            } else {
                ++rep.scalars_other;
            }
            break;
        }
        if (!matched) rep.unmatched_system.push_back(i);
    }
    for (std::size_t j = 0; j < family.size(); ++j) {
        if (!used[j]) rep.unmatched_family.push_back(j);
    }
    rep.bijection = rep.unmatched_system.empty() && rep.unmatched_family.empty() &&
                    rep.system_size == rep.family_size;
    return rep;
}

namespace {

template <typename Lhs, typename Rhs>
RepresentationReport compare_projectively(std::string check, int p, int samples, std::uint64_t seed,
                                          Lhs lhs, Rhs rhs) {
    RepresentationReport rep;
    rep.check = std::move(check);
    rep.p = p;
    rep.samples = samples;
    rep.seed = seed;
    Rng rng(seed);
    bool first = true;
    for (int s = 0; s < samples; ++s) {
        const Sequence phi = random_sequence(p, rng);
        const Sequence left = lhs(phi);
        const Sequence right = rhs(phi);
        const ScalarFit fit = fit_scalar(right, left);
        if (first) {
            rep.scalar = fit.scalar;
            first = false;
        }
        rep.scalar_spread = std::max(rep.scalar_spread, std::abs(fit.scalar - rep.scalar));
        // Residual against the common scalar, so a per-sample fit cannot hide drift.
        double resid = 0.0;
        for (int i = 0; i < p; ++i) resid = std::max(resid, std::abs(left[i] - rep.scalar * right[i]));
        rep.worst_residual = std::max(rep.worst_residual, resid);
    }
    rep.exact_lift = std::abs(rep.scalar - 1.0) <= RepresentationReport::kResidualTol;
    rep.pass = samples > 0 && rep.worst_residual <= RepresentationReport::kResidualTol &&
               std::abs(std::abs(rep.scalar) - 1.0) <= RepresentationReport::kResidualTol;
    return rep;
}

}  // namespace

RepresentationReport verify_intertwining(const PrimeField& f, const SL2Element& g,
                                         const HeisenbergElement& h, int samples,
                                         std::uint64_t seed) {
    require_field(f, g);
    const UnitaryOp rg = rho(f, g);
    const UnitaryOp rg_inv = rho(f, g.inverse());
    const HeisenbergElement gh = sl2_act_heisenberg(g, h);
    return compare_projectively(
        "intertwining", f.p(), samples, seed,
        [&](const Sequence& phi) { return rg(heisenberg(rg_inv(phi), h.t, h.w, h.z)); },
        [&](const Sequence& phi) { return heisenberg(phi, gh.t, gh.w, gh.z); });
}

RepresentationReport homomorphism_check(const PrimeField& f, const SL2Element& g1,
                                        const SL2Element& g2, int samples, std::uint64_t seed) {
    require_field(f, g1);
    require_field(f, g2);
    const UnitaryOp r12 = rho(f, sl2_mul(g1, g2));
    const UnitaryOp r1 = rho(f, g1);
    const UnitaryOp r2 = rho(f, g2);
    return compare_projectively(
        "homomorphism", f.p(), samples, seed, [&](const Sequence& phi) { return r12(phi); },
        [&](const Sequence& phi) { return r1(r2(phi)); });
}

}  // namespace seqlab
