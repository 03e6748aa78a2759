#include "seqlab/sequence.hpp"

#include <cmath>
#include <numbers>

#include "seqlab/error.hpp"

namespace seqlab {

cplx root_of_unity(std::int64_t k, std::int64_t m) {
    std::int64_t r = k % m;
    if (r < 0) r += m;
    if (r == 0) return {1.0, 0.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m));
}

Sequence::Sequence(std::vector<cplx> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {}

Sequence Sequence::from_exact(int p, std::vector<ExactEntry> exact, double scale, std::string label) {
    if (static_cast<int>(exact.size()) != p) {
        throw Error(Errc::PeriodMismatch, "exact form length differs from period");
    }
    std::vector<cplx> values(p);
    for (int i = 0; i < p; ++i) {
        auto& e = exact[i];
        if (!e) continue;
        e->u = ((e->u % (p - 1)) + (p - 1)) % (p - 1);
        e->v = ((e->v % p) + p) % p;
        values[i] = scale * root_of_unity(e->u, p - 1) * root_of_unity(e->v, p);
    }
    Sequence s(std::move(values), std::move(label));
    s.exact_ = std::move(exact);
    s.exact_scale_ = scale;
    return s;
}

Sequence Sequence::delta(int p, int index) {
    std::vector<cplx> v(p);
    v.at(index) = 1.0;
    return Sequence(std::move(v), "delta_" + std::to_string(index));
}

Sequence Sequence::constant(int p, cplx value) {
    return Sequence(std::vector<cplx>(p, value), "constant");
}

Sequence Sequence::with_label(std::string label) const {
    Sequence s = *this;
    s.label_ = std::move(label);
    return s;
}

Sequence Sequence::without_exact() const {
    Sequence s = *this;
    s.exact_.reset();
    s.exact_scale_ = 1.0;
    return s;
}

double Sequence::norm_squared() const noexcept {
    double acc = 0.0;
    for (const auto& v : values_) acc += std::norm(v);
    return acc;
}

double Sequence::norm() const noexcept { return std::sqrt(norm_squared()); }

double max_abs_diff(const Sequence& a, const Sequence& b) {
    if (a.period() != b.period()) throw Error(Errc::PeriodMismatch, "sequences differ in period");
    double worst = 0.0;
    for (int i = 0; i < a.period(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace seqlab
