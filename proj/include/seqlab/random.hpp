#pragma once

#include <cstdint>
#include <random>

#include "seqlab/field.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

/// Seeded generator whose outputs are identical on every platform: the engine
/// is mt19937_64 and all derived draws are computed here rather than through
/// the implementation-defined standard distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform integer in [0, n), n > 0, by rejection.
    std::uint64_t below(std::uint64_t n);
    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform();

private:
    std::mt19937_64 engine_;
};

/// Entries with real and imaginary parts uniform in [-1, 1).
Sequence random_sequence(int p, Rng& rng);

}  // namespace seqlab
