#pragma once

#include <string>
#include <vector>

#include "seqlab/sequence.hpp"

namespace seqlab {

/// C(t) = sum_i phi(i) conj(phi(i + t)).
std::vector<cplx> autocorrelation(const Sequence& phi);
/// C(t) = sum_i phi(i) conj(psi(i + t)).
std::vector<cplx> crosscorrelation(const Sequence& phi, const Sequence& psi);

enum class AmbiguityPath {
    naive,  // O(p) defining sum per grid point
    fast,   // one length-p DFT per time shift
};

struct AmbiguityPeak {
    double magnitude = 0.0;
    int t = 0;
    int w = 0;
};

/// A(t, w) = <phi, M_w L_t psi> on the full p x p grid, row-major in t.
struct AmbiguitySurface {
    int p = 0;
    std::vector<cplx> values;
    std::string phi_label;
    std::string psi_label;
    bool same_sequence = false;
    AmbiguityPeak peak;  // excludes (0,0) when same_sequence

    cplx at(int t, int w) const { return values[static_cast<std::size_t>(t) * p + w]; }
};

AmbiguitySurface ambiguity_surface(const Sequence& phi, const Sequence& psi,
                                   AmbiguityPath path = AmbiguityPath::fast);
AmbiguitySurface ambiguity_surface(const Sequence& phi, AmbiguityPath path = AmbiguityPath::fast);

/// Raw grid without labels or peak bookkeeping; the verification hot path.
void ambiguity_grid(const Sequence& phi, const Sequence& psi, AmbiguityPath path,
                    std::vector<cplx>& out);

/// Largest |A(t,w)|, scanning t then w and keeping the first maximum.
AmbiguityPeak grid_peak(const std::vector<cplx>& grid, int p, bool exclude_origin);

/// max_i |F(phi)(i)|.
double spectrum_max(const Sequence& phi);

/// CSV with header "t,w,re,im,abs", values printed with 17 significant digits.
std::string surface_to_csv(const AmbiguitySurface& surface);

}  // namespace seqlab
