#include "seqlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <regex>
#include <set>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "seqlab/error.hpp"
#include "seqlab/operators.hpp"
#include "seqlab/random.hpp"

namespace seqlab {

namespace {

template <typename Body>
void for_each_index(std::size_t n, const VerifyOptions& opt, Body&& body) {
    const auto count = static_cast<std::int64_t>(n);
    if (opt.execution == Execution::serial) {
        for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
        return;
    }
#ifdef _OPENMP
    const int threads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
    for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
#else
    for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
#endif
}

// Larger magnitude wins; exact ties go to the lexicographically smallest
// witness, so the merge result does not depend on visiting order.
bool better(const Witness& a, const Witness& b) {
    if (a.magnitude != b.magnitude) return a.magnitude > b.magnitude;
    return std::tie(a.first, a.second, a.t, a.w) < std::tie(b.first, b.second, b.t, b.w);
}

std::vector<cplx>& scratch_grid() {
    thread_local std::vector<cplx> grid;
    return grid;
}

BoundCheck finish(std::string name, const std::optional<Bound>& bound, const std::vector<Witness>& items) {
    BoundCheck check;
    check.name = std::move(name);
    check.bound = bound;
    check.evaluated = items.size();
    bool first = true;
    for (const auto& w : items) {
        if (first || better(w, check.witness)) check.witness = w;
        first = false;
    }
    check.measured = check.witness.magnitude;
    check.pass = !bound || check.measured <= bound->value + kBoundSlack;
    return check;
}

}  // namespace

Bound parse_bound(const std::string& expr, int p) {
    static const std::regex re(R"(^\s*([0-9]*\.?[0-9]*)\s*(sqrtp|/sqrtp|p)?\s*(/\(p([-+])1\))?\s*$)");
    std::smatch m;
    if (expr.empty() || !std::regex_match(expr, m, re) || (m[1].length() == 0 && m[2].length() == 0)) {
        throw Error(Errc::InvalidArgument, "cannot parse bound '" + expr + "'");
    }
    double k = 1.0;
    if (m[1].length() > 0) {
        try {
            k = std::stod(m[1].str());
        } catch (const std::exception&) {
            throw Error(Errc::InvalidArgument, "cannot parse bound '" + expr + "'");
        }
    }
    double value = k;
    const std::string unit = m[2].str();
    const double sp = std::sqrt(static_cast<double>(p));
    if (unit == "sqrtp") value = k * sp;
    else if (unit == "/sqrtp") value = k / sp;
    else if (unit == "p") value = k * p;
    if (m[3].length() > 0) {
        if (unit != "sqrtp") throw Error(Errc::InvalidArgument, "denominator only follows sqrtp: '" + expr + "'");
        value /= m[4].str() == "-" ? p - 1.0 : p + 1.0;
    }
    return {expr, value};
}

FamilyBounds default_bounds(FamilyKind kind, int p) {
    FamilyBounds b;
    switch (kind) {
        case FamilyKind::omega:
            b.auto_bound = parse_bound("2sqrtp", p);
            b.cross_bound = parse_bound("4sqrtp", p);
            b.ft_bound = parse_bound("2", p);
            break;
        case FamilyKind::split_oscillator:
        case FamilyKind::extended_split:
            b.auto_bound = parse_bound("2sqrtp/(p-1)", p);
            b.cross_bound = parse_bound("4sqrtp/(p-1)", p);
            break;
        case FamilyKind::chu:
            b.cross_bound = parse_bound("sqrtp", p);
            b.ft_bound = parse_bound("1", p);
            break;
        case FamilyKind::heisenberg:
            b.cross_bound = parse_bound("sqrtp", p);
            break;
        case FamilyKind::alltop_cubic: break;
    }
    return b;
}

bool VerificationReport::pass() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
}

const BoundCheck* VerificationReport::find(const std::string& name) const noexcept {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

std::size_t count_time_shift_classes(const std::vector<Sequence>& members) {
    const bool exact = !members.empty() && std::all_of(members.begin(), members.end(), [&](const Sequence& s) {
        return s.has_exact() && s.exact_scale() == members.front().exact_scale();
    });
    if (exact) {
        // Canonical form: lexicographically least rotation of the symbolic entries.
        std::set<std::vector<ExactEntry>> classes;
        for (const auto& s : members) {
            const auto ex = s.exact();
            const int p = s.period();
            std::vector<ExactEntry> best(ex.begin(), ex.end());
            std::vector<ExactEntry> rot(p);
            for (int t = 1; t < p; ++t) {
                for (int i = 0; i < p; ++i) rot[i] = ex[(i + t) % p];
                if (rot < best) best = rot;
            }
            classes.insert(std::move(best));
        }
        return classes.size();
    }
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < members.size(); ++i) {
        bool found = false;
        for (auto r : reps) {
            if (is_time_shift_equiv(members[r], members[i])) {
                found = true;
                break;
            }
        }
        if (!found) reps.push_back(i);
    }
    return reps.size();
}

std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(std::size_t n, std::uint64_t seed,
                                                               std::size_t count,
                                                               const DistinctPredicate& distinct) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (n < 2) return out;
    const std::size_t total = n * (n - 1) / 2;
    if (count >= total) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!distinct || distinct(i, j)) out.emplace_back(i, j);
        return out;
    }
    Rng rng(seed);
    std::unordered_set<std::uint64_t> seen;
    const std::size_t max_draws = 50 * count + 1000;
    for (std::size_t draw = 0; draw < max_draws && out.size() < count; ++draw) {
        auto i = static_cast<std::size_t>(rng.below(n));
        auto j = static_cast<std::size_t>(rng.below(n));
        if (i == j) continue;
        if (i > j) std::swap(i, j);
        if (!seen.insert(static_cast<std::uint64_t>(i) * n + j).second) continue;
        if (!distinct || distinct(i, j)) out.emplace_back(i, j);
    }
    return out;
}

VerificationReport verify_members(const std::vector<Sequence>& members, const std::string& family,
                                  int p, int generator, const FamilyBounds& bounds,
                                  const VerifyOptions& options, DistinctPredicate distinct) {
    const auto start = std::chrono::steady_clock::now();
    for (const auto& s : members) {
        if (s.period() != p) throw Error(Errc::PeriodMismatch, "member period differs from p");
    }
    VerificationReport rep;
    rep.family = family;
    rep.p = p;
    rep.generator = generator;
    rep.size = members.size();
    rep.pairs = options.pairs;
    for (const auto& s : members) rep.labels.push_back(s.label());

    if (!distinct) {
        distinct = [&members](std::size_t i, std::size_t j) {
            return !is_phase_shift_equiv(members[i], members[j]).has_value();
        };
    }

    if (options.check_auto) {
        std::vector<Witness> items(members.size());
        for_each_index(members.size(), options, [&](std::size_t i) {
            auto& grid = scratch_grid();
            ambiguity_grid(members[i], members[i], options.path, grid);
            const auto pk = grid_peak(grid, p, true);
            items[i] = {i, i, pk.t, pk.w, pk.magnitude};
        });
        rep.checks.push_back(finish("auto_ambiguity", bounds.auto_bound, items));
    }

    if (options.check_cross && members.size() > 1) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        std::vector<std::pair<std::size_t, std::size_t>> equivalent;
        if (options.pairs.kind == PairMode::Kind::exhaustive) {
            std::vector<std::pair<std::size_t, std::size_t>> all;
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j) all.emplace_back(i, j);
            std::vector<char> is_distinct(all.size());
            for_each_index(all.size(), options,
                           [&](std::size_t k) { is_distinct[k] = distinct(all[k].first, all[k].second); });
            for (std::size_t k = 0; k < all.size(); ++k) {
                (is_distinct[k] ? pairs : equivalent).push_back(all[k]);
            }
        } else {
            pairs = sample_pairs(members.size(), options.pairs.seed, options.pairs.count, distinct);
        }

        std::vector<Witness> items(pairs.size());
        for_each_index(pairs.size(), options, [&](std::size_t k) {
            const auto [i, j] = pairs[k];
            auto& grid = scratch_grid();
            ambiguity_grid(members[i], members[j], options.path, grid);
            const auto pk = grid_peak(grid, p, false);
            items[k] = {i, j, pk.t, pk.w, pk.magnitude};
        });
        rep.checks.push_back(finish("cross_ambiguity", bounds.cross_bound, items));

        std::vector<double> eq(equivalent.size());
        for_each_index(equivalent.size(), options, [&](std::size_t k) {
            auto& grid = scratch_grid();
            ambiguity_grid(members[equivalent[k].first], members[equivalent[k].second], options.path, grid);
            eq[k] = grid_peak(grid, p, false).magnitude;
        });
        rep.equivalent_pairs = equivalent.size();
        for (double v : eq) rep.equivalent_pairs_max = std::max(rep.equivalent_pairs_max, v);
    }

    if (options.check_ft) {
        std::vector<Witness> items(members.size());
        for_each_index(members.size(), options,
                       [&](std::size_t i) { items[i] = {i, i, 0, 0, spectrum_max(members[i])}; });
        rep.checks.push_back(finish("fourier", bounds.ft_bound, items));
    }

    if (options.count_classes) {
        const bool exact = std::all_of(members.begin(), members.end(),
                                       [](const Sequence& s) { return s.has_exact(); });
        if (exact || members.size() <= options.class_count_limit) {
            rep.time_shift_classes = count_time_shift_classes(members);
        }
    }

    rep.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

VerificationReport verify_family(const FamilyDescriptor& family, const FamilyBounds& bounds,
                                 const VerifyOptions& options) {
    const auto members = family.members();
    DistinctPredicate distinct;
    if (family.kind() == FamilyKind::omega) {
        // n = (x-1)p^2 + yp + z, so n / p identifies (x, y).
        const std::size_t p = static_cast<std::size_t>(family.p());
        distinct = [p](std::size_t i, std::size_t j) { return i / p != j / p; };
    }
    auto rep = verify_members(members, family.name(), family.p(), family.field().generator(), bounds,
                              options, distinct);
    rep.normalized = family.normalized();
    rep.index_ranges = family.index_ranges();
    return rep;
}

std::vector<ComparisonRow> compare_families(const PrimeField& f, const ComparisonOptions& options) {
    if (f.p() < 5) throw Error(Errc::PTooSmall, "comparison includes omega, which needs p >= 5");
    std::vector<ComparisonRow> rows;
    for (auto kind : {FamilyKind::chu, FamilyKind::alltop_cubic, FamilyKind::heisenberg, FamilyKind::omega}) {
        const FamilyDescriptor fam(kind, f);
        VerifyOptions vo;
        vo.threads = options.threads;
        vo.count_classes = false;
        const bool sampled = fam.size() > options.exhaustive_limit;
        vo.pairs = sampled ? PairMode::sampled(options.seed, options.sample_count) : PairMode::exhaustive();
        const auto rep = verify_family(fam, FamilyBounds{}, vo);
        ComparisonRow row;
        row.family = fam.name();
        row.size = fam.size();
        row.auto_max = rep.find("auto_ambiguity")->measured;
        if (const auto* c = rep.find("cross_ambiguity"); c && c->evaluated > 0) row.cross_max = c->measured;
        row.ft_max = rep.find("fourier")->measured;
        row.cross_mode = sampled ? "sampled" : "exhaustive";
        rows.push_back(row);
    }
    return rows;
}

}  // namespace seqlab
