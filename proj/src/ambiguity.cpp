#include "seqlab/ambiguity.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>

#include "seqlab/error.hpp"
#include "seqlab/operators.hpp"

namespace seqlab {

namespace {

void require_same_period(const Sequence& a, const Sequence& b) {
    if (a.period() != b.period()) throw Error(Errc::PeriodMismatch, "ambiguity operands differ in period");
}

// FFTW planning is not thread-safe; execution through the new-array interface is.
class PlanCache {
public:
    ~PlanCache() {
        for (auto& [p, plan] : plans_) fftw_destroy_plan(plan);
    }

    fftw_plan forward(int p) {
        std::lock_guard lock(mu_);
        auto it = plans_.find(p);
        if (it != plans_.end()) return it->second;
        std::vector<cplx> in(p), out(p);
        fftw_plan plan = fftw_plan_dft_1d(p, reinterpret_cast<fftw_complex*>(in.data()),
                                          reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD,
                                          FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(p, plan);
        return plan;
    }

private:
    std::mutex mu_;
    std::map<int, fftw_plan> plans_;
};

PlanCache& plan_cache() {
    static PlanCache cache;
    return cache;
}

}  // namespace

std::vector<cplx> crosscorrelation(const Sequence& phi, const Sequence& psi) {
    require_same_period(phi, psi);
    const int p = phi.period();
    std::vector<cplx> out(p);
    for (int t = 0; t < p; ++t) {
        cplx acc{};
        for (int i = 0; i < p; ++i) acc += phi[i] * std::conj(psi[(i + t) % p]);
        out[t] = acc;
    }
    return out;
}

std::vector<cplx> autocorrelation(const Sequence& phi) { return crosscorrelation(phi, phi); }

void ambiguity_grid(const Sequence& phi, const Sequence& psi, AmbiguityPath path,
                    std::vector<cplx>& out) {
    require_same_period(phi, psi);
    const int p = phi.period();
    out.assign(static_cast<std::size_t>(p) * p, cplx{});
    std::vector<cplx> prod(p);
    if (path == AmbiguityPath::naive) {
        // conj(eta^{w i}) = eta^{-w i}
        std::vector<cplx> eta_conj(p);
        for (int k = 0; k < p; ++k) eta_conj[k] = root_of_unity(-k, p);
        for (int t = 0; t < p; ++t) {
            for (int i = 0; i < p; ++i) prod[i] = phi[i] * std::conj(psi[(i + t) % p]);
            for (int w = 0; w < p; ++w) {
                cplx acc{};
                for (int i = 0; i < p; ++i) acc += prod[i] * eta_conj[static_cast<std::int64_t>(w) * i % p];
                out[static_cast<std::size_t>(t) * p + w] = acc;
            }
        }
        return;
    }
    // Row t is sum_i prod_t(i) exp(-2 pi i w i / p): FFTW's forward sign.
    fftw_plan plan = plan_cache().forward(p);
    for (int t = 0; t < p; ++t) {
        for (int i = 0; i < p; ++i) prod[i] = phi[i] * std::conj(psi[(i + t) % p]);
        fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(prod.data()),
                         reinterpret_cast<fftw_complex*>(out.data() + static_cast<std::size_t>(t) * p));
    }
}

AmbiguityPeak grid_peak(const std::vector<cplx>& grid, int p, bool exclude_origin) {
    AmbiguityPeak peak{-1.0, 0, 0};
    for (int t = 0; t < p; ++t) {
        for (int w = 0; w < p; ++w) {
            if (exclude_origin && t == 0 && w == 0) continue;
            const double m = std::abs(grid[static_cast<std::size_t>(t) * p + w]);
            if (m > peak.magnitude) peak = {m, t, w};
        }
    }
    if (peak.magnitude < 0.0) peak.magnitude = 0.0;
    return peak;
}

AmbiguitySurface ambiguity_surface(const Sequence& phi, const Sequence& psi, AmbiguityPath path) {
    AmbiguitySurface s;
    s.p = phi.period();
    s.phi_label = phi.label();
    s.psi_label = psi.label();
    ambiguity_grid(phi, psi, path, s.values);
    s.same_sequence = &phi == &psi || max_abs_diff(phi, psi) == 0.0;
    s.peak = grid_peak(s.values, s.p, s.same_sequence);
    return s;
}

AmbiguitySurface ambiguity_surface(const Sequence& phi, AmbiguityPath path) {
    return ambiguity_surface(phi, phi, path);
}

double spectrum_max(const Sequence& phi) {
    const Sequence spec = fourier(phi);
    double m = 0.0;
    for (const auto& v : spec.values()) m = std::max(m, std::abs(v));
    return m;
}

std::string surface_to_csv(const AmbiguitySurface& surface) {
    std::string out = "t,w,re,im,abs\n";
    char buf[160];
    for (int t = 0; t < surface.p; ++t) {
        for (int w = 0; w < surface.p; ++w) {
            const cplx v = surface.at(t, w);
            std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,%.17g\n", t, w, v.real(), v.imag(),
                          std::abs(v));
            out += buf;
        }
    }
    return out;
}

}  // namespace seqlab
