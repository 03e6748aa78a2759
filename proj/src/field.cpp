#include "seqlab/field.hpp"

#include <string>

#include "seqlab/error.hpp"

namespace seqlab {

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

int multiplicative_order(int a, int p) {
    a %= p;
    if (a == 0) throw Error(Errc::LogOfZero, "0 has no multiplicative order");
    int k = 1;
    std::int64_t x = a;
    while (x != 1) {
        x = x * a % p;
        ++k;
    }
    return k;
}

int smallest_primitive_root(int p) {
    if (p == 2) return 1;
    for (int g = 2; g < p; ++g) {
        if (multiplicative_order(g, p) == p - 1) return g;
    }
    throw Error(Errc::NotPrime, std::to_string(p) + " has no primitive root");
}

PrimeField PrimeField::make(int p, std::optional<int> generator) {
    if (p < kMinPrime || !is_prime(p)) {
        throw Error(Errc::NotPrime, std::to_string(p) + " is not an odd prime");
    }
    if (p > kMaxPrime) {
        throw Error(Errc::InvalidArgument,
                    "p = " + std::to_string(p) + " exceeds supported maximum " +
                        std::to_string(kMaxPrime));
    }
    int a = 0;
    if (generator) {
        a = *generator;
        if (a < 2 || a > p - 1 || multiplicative_order(a, p) != p - 1) {
            throw Error(Errc::NotGenerator, std::to_string(a) + " is not a primitive root mod " +
                                                std::to_string(p));
        }
    } else {
        a = smallest_primitive_root(p);
    }
    return PrimeField(p, a);
}

PrimeField::PrimeField(int p, int a) : p_(p), a_(a), dlog_(p, kUndefinedLog), apow_(p - 1) {
    std::int64_t x = 1;
    for (int k = 0; k < p - 1; ++k) {
        apow_[k] = static_cast<int>(x);
        dlog_[x] = k;
        x = x * a % p;
    }
}

int PrimeField::dlog(int b) const {
    int r = reduce(b);
    if (r == 0) throw Error(Errc::LogOfZero, "log_a 0 is undefined");
    return dlog_[r];
}

int PrimeField::pow_gen(std::int64_t k) const noexcept {
    std::int64_t m = k % (p_ - 1);
    if (m < 0) m += p_ - 1;
    return apow_[m];
}

int PrimeField::legendre(int b) const {
    return dlog(b) % 2 == 0 ? 1 : -1;
}

int PrimeField::inv(int b) const {
    int r = reduce(b);
    if (r == 0) throw Error(Errc::DivisionByZero, "0 has no inverse");
    return apow_[(p_ - 1 - dlog_[r]) % (p_ - 1)];
}

}  // namespace seqlab
