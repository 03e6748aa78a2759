#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace seqlab {

using cplx = std::complex<double>;

/// exp(2*pi*i*k/m), with k reduced mod m before evaluation.
cplx root_of_unity(std::int64_t k, std::int64_t m);

/// theta^u * eta^v with theta = exp(2 pi i/(p-1)) and eta = exp(2 pi i/p).
struct Monomial {
    int u = 0;  // mod p-1
    int v = 0;  // mod p

    bool operator==(const Monomial&) const = default;
    auto operator<=>(const Monomial&) const = default;
};

/// One symbolic entry; nullopt stands for the zero entry.
using ExactEntry = std::optional<Monomial>;

/// A period-p complex sequence. Values are stored as given; `exact`, when
/// present, records each entry as scale * theta^u * eta^v (or zero).
class Sequence {
public:
    Sequence() = default;
    explicit Sequence(std::vector<cplx> values, std::string label = {});

    /// Builds the numeric values from the symbolic form; exponents are reduced
    /// mod (p-1, p).
    static Sequence from_exact(int p, std::vector<ExactEntry> exact, double scale = 1.0,
                               std::string label = {});

    static Sequence delta(int p, int index);
    static Sequence constant(int p, cplx value = 1.0);

    int period() const noexcept { return static_cast<int>(values_.size()); }
    std::span<const cplx> values() const noexcept { return values_; }
    cplx operator[](int i) const noexcept { return values_[i]; }

    bool has_exact() const noexcept { return exact_.has_value(); }
    std::span<const ExactEntry> exact() const noexcept {
        return exact_ ? std::span<const ExactEntry>(*exact_) : std::span<const ExactEntry>();
    }
    double exact_scale() const noexcept { return exact_scale_; }

    const std::string& label() const noexcept { return label_; }
    Sequence with_label(std::string label) const;
    Sequence without_exact() const;

    double norm() const noexcept;
    double norm_squared() const noexcept;

private:
    std::vector<cplx> values_;
    std::optional<std::vector<ExactEntry>> exact_;
    double exact_scale_ = 1.0;
    std::string label_;
};

/// Largest absolute entrywise difference; PeriodMismatch if lengths differ.
double max_abs_diff(const Sequence& a, const Sequence& b);

}  // namespace seqlab
