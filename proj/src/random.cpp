#include "seqlab/random.hpp"

#include <limits>
#include <vector>

namespace seqlab {

std::uint64_t Rng::below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Sequence random_sequence(int p, Rng& rng) {
    std::vector<cplx> v(p);
    for (auto& e : v) {
        const double re = 2.0 * rng.uniform() - 1.0;
        const double im = 2.0 * rng.uniform() - 1.0;
        e = {re, im};
    }
    return Sequence(std::move(v), "random");
}

}  // namespace seqlab
