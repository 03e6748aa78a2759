#include "seqlab/families.hpp"

#include <cmath>
#include <sstream>

#include "seqlab/error.hpp"
#include "seqlab/operators.hpp"

namespace seqlab {

namespace {

void require_min_p(const PrimeField& f, FamilyKind kind) {
    if (f.p() < minimum_prime(kind)) {
        throw Error(Errc::PTooSmall, std::string(to_string(kind)) + " needs p >= " +
                                         std::to_string(minimum_prime(kind)));
    }
}

void require_range(int v, int lo, int hi, const char* name) {
    if (v < lo || v > hi) {
        throw Error(Errc::IndexOutOfRange, std::string(name) + " = " + std::to_string(v) +
                                               " outside [" + std::to_string(lo) + ", " +
                                               std::to_string(hi) + "]");
    }
}

std::int64_t sq(std::int64_t i) { return i * i; }

}  // namespace

const char* to_string(FamilyKind kind) noexcept {
    switch (kind) {
        case FamilyKind::omega: return "omega";
        case FamilyKind::split_oscillator: return "split_oscillator";
        case FamilyKind::extended_split: return "extended_split";
        case FamilyKind::chu: return "chu";
        case FamilyKind::alltop_cubic: return "alltop_cubic";
        case FamilyKind::heisenberg: return "heisenberg";
    }
    return "unknown";
}

FamilyKind family_kind_from_string(const std::string& name) {
    for (auto k : {FamilyKind::omega, FamilyKind::split_oscillator, FamilyKind::extended_split,
                   FamilyKind::chu, FamilyKind::alltop_cubic, FamilyKind::heisenberg}) {
        if (name == to_string(k)) return k;
    }
    throw Error(Errc::UnsupportedFamily, "unknown family '" + name + "'");
}

int minimum_prime(FamilyKind kind) noexcept {
    switch (kind) {
        case FamilyKind::chu:
        case FamilyKind::heisenberg: return 3;
        default: return 5;
    }
}

OmegaIndex omega_index(int p, std::size_t n) {
    const std::size_t pp = static_cast<std::size_t>(p) * p;
    if (n >= pp * (p - 2)) {
        throw Error(Errc::IndexOutOfRange, "omega index " + std::to_string(n) + " >= p^2(p-2)");
    }
    return {static_cast<int>(n / pp) + 1, static_cast<int>(n / p % p), static_cast<int>(n % p)};
}

SplitIndex split_index(int p, std::size_t n) {
    const std::size_t nb = static_cast<std::size_t>(p + 1) / 2;
    const std::size_t total = static_cast<std::size_t>(p - 2) * p * nb;
    if (n >= total) throw Error(Errc::IndexOutOfRange, "split index out of range");
    return {static_cast<int>(n / (nb * p)) + 1, static_cast<int>(n / nb % p), static_cast<int>(n % nb)};
}

Sequence omega_sequence(const PrimeField& f, int x, int y, int z) {
    require_min_p(f, FamilyKind::omega);
    const int p = f.p();
    require_range(x, 1, p - 2, "x");
    require_range(y, 0, p - 1, "y");
    require_range(z, 0, p - 1, "z");
    std::vector<ExactEntry> ex(p);
    for (int i = 1; i < p; ++i) {
        const int u = static_cast<int>(static_cast<std::int64_t>(x) * f.dlog(i) % (p - 1));
        const int v = static_cast<int>((y * sq(i) + static_cast<std::int64_t>(z) * i) % p);
        ex[i] = Monomial{u, v};
    }
    std::ostringstream label;
    label << "omega(x=" << x << ",y=" << y << ",z=" << z << ")";
    return Sequence::from_exact(p, std::move(ex), 1.0, label.str());
}

Sequence omega_sequence(const PrimeField& f, std::size_t n) {
    require_min_p(f, FamilyKind::omega);
    const auto [x, y, z] = omega_index(f.p(), n);
    return omega_sequence(f, x, y, z);
}

std::vector<Sequence> omega_family(const PrimeField& f) {
    return FamilyDescriptor(FamilyKind::omega, f).members();
}

Sequence split_oscillator_sequence(const PrimeField& f, int x, int y, int b) {
    require_min_p(f, FamilyKind::split_oscillator);
    const int p = f.p();
    require_range(x, 1, p - 2, "x");
    require_range(y, 0, p - 1, "y");
    require_range(b, 0, (p - 1) / 2, "b");
    std::ostringstream label;
    label << "split(x=" << x << ",y=" << y << ",b=" << b << ")";
    if (b == 0) {
        std::vector<ExactEntry> ex(p);
        for (int i = 1; i < p; ++i) {
            const int u = static_cast<int>(static_cast<std::int64_t>(x) * f.dlog(i) % (p - 1));
            ex[i] = Monomial{u, static_cast<int>(y * sq(i) % p)};
        }
        return Sequence::from_exact(p, std::move(ex), 1.0 / std::sqrt(p - 1.0), label.str());
    }
    // eta^{y i^2} / sqrt(p(p-1)) * sum_{j=1}^{p-1} theta^{x log j} eta^{-(2b)^{-1} (j-i)^2}
    const std::int64_t c = f.neg(f.inv(f.mul(2, b)));
    std::vector<cplx> theta_x(p);
    for (int j = 1; j < p; ++j) theta_x[j] = root_of_unity(static_cast<std::int64_t>(x) * f.dlog(j), p - 1);
    const double norm = 1.0 / std::sqrt(static_cast<double>(p) * (p - 1));
    std::vector<cplx> out(p);
    for (int i = 0; i < p; ++i) {
        cplx acc{};
        for (int j = 1; j < p; ++j) {
            const std::int64_t d = j - i;
            acc += theta_x[j] * root_of_unity(c * (sq(d) % p), p);
        }
        out[i] = norm * root_of_unity(y * sq(i), p) * acc;
    }
    return Sequence(std::move(out), label.str());
}

std::vector<Sequence> split_oscillator_family(const PrimeField& f) {
    return FamilyDescriptor(FamilyKind::split_oscillator, f).members();
}

std::vector<Sequence> extended_split_family(const PrimeField& f) {
    return FamilyDescriptor(FamilyKind::extended_split, f).members();
}

Sequence chu_sequence(const PrimeField& f, int y) {
    const int p = f.p();
    require_range(y, 1, p - 1, "y");
    std::vector<ExactEntry> ex(p);
    for (int i = 0; i < p; ++i) ex[i] = Monomial{0, static_cast<int>(y * sq(i) % p)};
    return Sequence::from_exact(p, std::move(ex), 1.0, "chu(y=" + std::to_string(y) + ")");
}

Sequence alltop_cubic_sequence(const PrimeField& f, int y) {
    require_min_p(f, FamilyKind::alltop_cubic);
    const int p = f.p();
    require_range(y, 0, p - 1, "y");
    std::vector<ExactEntry> ex(p);
    for (int i = 0; i < p; ++i) {
        const std::int64_t cube = sq(i) % p * i % p;
        ex[i] = Monomial{0, static_cast<int>((cube + static_cast<std::int64_t>(y) * i) % p)};
    }
    return Sequence::from_exact(p, std::move(ex), 1.0, "alltop_cubic(y=" + std::to_string(y) + ")");
}

Sequence heisenberg_sequence(const PrimeField& f, int y, int z) {
    const int p = f.p();
    require_range(y, 0, p - 1, "y");
    require_range(z, 0, p - 1, "z");
    std::vector<ExactEntry> ex(p);
    for (int i = 0; i < p; ++i) {
        ex[i] = Monomial{0, static_cast<int>((y * sq(i) + static_cast<std::int64_t>(z) * i) % p)};
    }
    return Sequence::from_exact(p, std::move(ex), 1.0,
                                "heisenberg(y=" + std::to_string(y) + ",z=" + std::to_string(z) + ")");
}

// ---------------------------------------------------------------------------

FamilyDescriptor::FamilyDescriptor(FamilyKind kind, PrimeField field)
    : kind_(kind), field_(std::move(field)) {
    require_min_p(field_, kind_);
}

bool FamilyDescriptor::normalized() const noexcept {
    return kind_ == FamilyKind::split_oscillator || kind_ == FamilyKind::extended_split;
}

std::size_t FamilyDescriptor::size() const noexcept {
    const std::size_t p = static_cast<std::size_t>(field_.p());
    const std::size_t split = p * (p - 2) * (p + 1) / 2;
    switch (kind_) {
        case FamilyKind::omega: return p * p * (p - 2);
        case FamilyKind::split_oscillator: return split;
        case FamilyKind::extended_split: return p * split;
        case FamilyKind::chu: return p - 1;
        case FamilyKind::alltop_cubic: return p;
        case FamilyKind::heisenberg: return p * p;
    }
    return 0;
}

Sequence FamilyDescriptor::member(std::size_t index) const {
    if (index >= size()) {
        throw Error(Errc::IndexOutOfRange, name() + " index " + std::to_string(index) + " >= " +
                                               std::to_string(size()));
    }
    const int p = field_.p();
    switch (kind_) {
        case FamilyKind::omega: return omega_sequence(field_, index);
        case FamilyKind::split_oscillator: {
            const auto [x, y, b] = split_index(p, index);
            return split_oscillator_sequence(field_, x, y, b);
        }
        case FamilyKind::extended_split: {
            const auto [x, y, b] = split_index(p, index / p);
            const int w = static_cast<int>(index % p);
            auto s = phase_shift(split_oscillator_sequence(field_, x, y, b), w);
            return s.with_label(s.label() + ".M" + std::to_string(w));
        }
        case FamilyKind::chu: return chu_sequence(field_, static_cast<int>(index) + 1);
        case FamilyKind::alltop_cubic: return alltop_cubic_sequence(field_, static_cast<int>(index));
        case FamilyKind::heisenberg:
            return heisenberg_sequence(field_, static_cast<int>(index / p), static_cast<int>(index % p));
    }
    throw Error(Errc::UnsupportedFamily, "unknown family");
}

std::vector<Sequence> FamilyDescriptor::members() const {
    std::vector<Sequence> out;
    out.reserve(size());
    if (kind_ == FamilyKind::extended_split) {
        // Reuse each base sequence across its p phase shifts.
        for (const auto& base : split_oscillator_family(field_)) {
            for (int w = 0; w < field_.p(); ++w) {
                auto s = phase_shift(base, w);
                out.push_back(s.with_label(s.label() + ".M" + std::to_string(w)));
            }
        }
        return out;
    }
    for (std::size_t i = 0; i < size(); ++i) out.push_back(member(i));
    return out;
}

std::string FamilyDescriptor::index_ranges() const {
    const int p = field_.p();
    std::ostringstream os;
    switch (kind_) {
        case FamilyKind::omega:
            os << "x in [1," << p - 2 << "], y,z in [0," << p - 1 << "]; n = (x-1)p^2 + yp + z";
            break;
        case FamilyKind::split_oscillator:
            os << "x in [1," << p - 2 << "], y in [0," << p - 1 << "], b in [0," << (p - 1) / 2
               << "]; lexicographic (x,y,b)";
            break;
        case FamilyKind::extended_split:
            os << "split index in [0," << size() / p - 1 << "], w in [0," << p - 1 << "]; index = split*p + w";
            break;
        case FamilyKind::chu: os << "y in [1," << p - 1 << "]; index = y-1"; break;
        case FamilyKind::alltop_cubic: os << "y in [0," << p - 1 << "]"; break;
        case FamilyKind::heisenberg: os << "y,z in [0," << p - 1 << "]; index = yp + z"; break;
    }
    return os.str();
}

}  // namespace seqlab
