#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "seqlab/field.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

enum class FamilyKind { omega, split_oscillator, extended_split, chu, alltop_cubic, heisenberg };

const char* to_string(FamilyKind kind) noexcept;
FamilyKind family_kind_from_string(const std::string& name);

/// (x, y, z) digits of an Omega index n = (x-1) p^2 + y p + z.
struct OmegaIndex {
    int x, y, z;
};
OmegaIndex omega_index(int p, std::size_t n);

struct SplitIndex {
    int x, y, b;
};
SplitIndex split_index(int p, std::size_t n);

/// theta^{x log_a i} eta^{y i^2 + z i}, zero at i = 0; unnormalized.
Sequence omega_sequence(const PrimeField& f, std::size_t n);
Sequence omega_sequence(const PrimeField& f, int x, int y, int z);
std::vector<Sequence> omega_family(const PrimeField& f);

/// Unit-norm split oscillator sequence phi_{x,y,b}. The b = 0 branch keeps an
/// exact form with scale 1/sqrt(p-1); b != 0 is a direct O(p) sum per entry.
Sequence split_oscillator_sequence(const PrimeField& f, int x, int y, int b);
std::vector<Sequence> split_oscillator_family(const PrimeField& f);

/// { M_w phi : phi in split family, w in F_p }, ordered by (phi index, w).
std::vector<Sequence> extended_split_family(const PrimeField& f);

Sequence chu_sequence(const PrimeField& f, int y);
Sequence alltop_cubic_sequence(const PrimeField& f, int y);
Sequence heisenberg_sequence(const PrimeField& f, int y, int z);

/// A family at a fixed field, with random access to its members in the
/// documented enumeration order.
class FamilyDescriptor {
public:
    FamilyDescriptor(FamilyKind kind, PrimeField field);

    FamilyKind kind() const noexcept { return kind_; }
    const PrimeField& field() const noexcept { return field_; }
    int p() const noexcept { return field_.p(); }
    bool normalized() const noexcept;
    std::size_t size() const noexcept;

    Sequence member(std::size_t index) const;
    std::vector<Sequence> members() const;
    std::string name() const { return to_string(kind_); }

    /// Human-readable index ranges, e.g. "x in [1,3], y,z in [0,4]".
    std::string index_ranges() const;

private:
    FamilyKind kind_;
    PrimeField field_;
};

/// Minimum p accepted by each family.
int minimum_prime(FamilyKind kind) noexcept;

}  // namespace seqlab
