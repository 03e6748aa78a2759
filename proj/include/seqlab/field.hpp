#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace seqlab {

inline constexpr int kMinPrime = 3;
inline constexpr int kMaxPrime = 10007;

/// Deterministic trial-division primality test.
bool is_prime(std::int64_t n) noexcept;

/// Multiplicative order of `a` modulo prime `p`, by exhaustive powering.
int multiplicative_order(int a, int p);

int smallest_primitive_root(int p);

/// Arithmetic over F_p with a fixed primitive root `a` and its discrete-log
/// tables. Immutable after construction.
class PrimeField {
public:
    /// Sentinel stored at dlog index 0; log_a 0 is undefined.
    static constexpr int kUndefinedLog = -1;

    static PrimeField make(int p, std::optional<int> generator = std::nullopt);

    int p() const noexcept { return p_; }
    int generator() const noexcept { return a_; }

    /// log_a b for b in [1, p-1]. Throws LogOfZero for b == 0.
    int dlog(int b) const;
    /// a^k for any integer k (reduced mod p-1).
    int pow_gen(std::int64_t k) const noexcept;
    /// Legendre character: +1 on quadratic residues, -1 otherwise.
    int legendre(int b) const;
    int inv(int b) const;

    int reduce(std::int64_t v) const noexcept {
        std::int64_t r = v % p_;
        return static_cast<int>(r < 0 ? r + p_ : r);
    }
    int add(int x, int y) const noexcept { return reduce(std::int64_t{x} + y); }
    int sub(int x, int y) const noexcept { return reduce(std::int64_t{x} - y); }
    int mul(int x, int y) const noexcept { return reduce(std::int64_t{x} * y); }
    int neg(int x) const noexcept { return reduce(-std::int64_t{x}); }
    /// 2^{-1} mod p.
    int half() const noexcept { return (p_ + 1) / 2; }

    const std::vector<int>& dlog_table() const noexcept { return dlog_; }
    const std::vector<int>& pow_table() const noexcept { return apow_; }

    bool operator==(const PrimeField& other) const noexcept {
        return p_ == other.p_ && a_ == other.a_;
    }

private:
    PrimeField(int p, int a);

    int p_;
    int a_;
    std::vector<int> dlog_;
    std::vector<int> apow_;
};

inline PrimeField make_field(int p, std::optional<int> generator = std::nullopt) {
    return PrimeField::make(p, generator);
}

}  // namespace seqlab
