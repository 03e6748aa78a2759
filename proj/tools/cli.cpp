#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "seqlab/error.hpp"
#include "seqlab/families.hpp"
#include "seqlab/io.hpp"
#include "seqlab/random.hpp"
#include "seqlab/verify.hpp"
#include "seqlab/weil.hpp"

namespace seqlab::cli {

namespace {

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MemberSelector {
    std::string family;
    std::optional<long long> n, x, y, z, b, w;
    std::optional<int> p;  // only for the second selector

    bool any_param() const { return n || x || y || z || b || w; }
};

struct RunConfig {
    int p = 0;
    std::optional<int> generator;
    std::optional<std::uint64_t> seed;
    int threads = 0;
    std::string format;
    std::string out;
    int verbosity = 0;

    MemberSelector first;
    MemberSelector second;

    // verify
    bool theorem2 = false;
    std::string checks = "ambiguity,ft,classes";
    std::string pairs = "exhaustive";
    std::size_t count = 20000;
    std::optional<std::string> auto_bound, cross_bound, ft_bound;
    bool timing = false;

    // ambiguity
    bool naive = false;

    // compare
    std::size_t exhaustive_limit = 300;

    // weil-check
    int samples = 100;
};

int default_threads() {
    if (const char* env = std::getenv("SEQLAB_THREADS")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (const std::exception&) {
            return 0;
        }
    }
    return 0;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--p", cfg.p, "prime period")->required();
    sub->add_option("--generator", cfg.generator, "primitive root override");
    sub->add_option("--seed", cfg.seed, "64-bit seed for all sampling");
    sub->add_option("--threads", cfg.threads, "worker cap (default: SEQLAB_THREADS or all cores)");
    sub->add_option("--format", cfg.format, "output format (json | csv | jsonl)");
    sub->add_option("--out", cfg.out, "output path (default: stdout)");
    sub->add_flag("-v,--verbose", cfg.verbosity, "diagnostics on stderr");
}

void add_selector(CLI::App* sub, MemberSelector& sel, const std::string& suffix, bool required_family) {
    auto* fam = sub->add_option("--family" + suffix, sel.family,
                                "omega | split_oscillator | extended_split | chu | alltop_cubic | heisenberg");
    if (required_family) fam->required();
    sub->add_option("--n" + suffix, sel.n, "enumeration index");
    sub->add_option("--x" + suffix, sel.x);
    sub->add_option("--y" + suffix, sel.y);
    sub->add_option("--z" + suffix, sel.z);
    sub->add_option("--b" + suffix, sel.b);
    sub->add_option("--w" + suffix, sel.w);
}

int as_int(const std::optional<long long>& v) { return static_cast<int>(*v); }

/// Resolves a selector to an enumeration index of `fam`.
std::size_t resolve_index(const FamilyDescriptor& fam, const MemberSelector& sel) {
    const auto p = static_cast<long long>(fam.p());
    auto need = [&](std::initializer_list<const std::optional<long long>*> opts, const char* what) {
        for (auto* o : opts) {
            if (!o->has_value()) throw UsageError(fam.name() + " member needs " + what + " (or --n)");
        }
    };
    auto check = [](long long v, long long lo, long long hi, const char* name) {
        if (v < lo || v > hi) {
            throw Error(Errc::IndexOutOfRange, std::string(name) + " = " + std::to_string(v) + " outside [" +
                                                   std::to_string(lo) + ", " + std::to_string(hi) + "]");
        }
    };
    if (sel.n) {
        if (*sel.n < 0 || static_cast<std::size_t>(*sel.n) >= fam.size()) {
            throw Error(Errc::IndexOutOfRange, "--n " + std::to_string(*sel.n) + " outside [0, " +
                                                   std::to_string(fam.size() - 1) + "]");
        }
        return static_cast<std::size_t>(*sel.n);
    }
    switch (fam.kind()) {
        case FamilyKind::omega:
            need({&sel.x, &sel.y, &sel.z}, "--x --y --z");
            check(*sel.x, 1, p - 2, "x");
            check(*sel.y, 0, p - 1, "y");
            check(*sel.z, 0, p - 1, "z");
            return static_cast<std::size_t>((*sel.x - 1) * p * p + *sel.y * p + *sel.z);
        case FamilyKind::split_oscillator:
        case FamilyKind::extended_split: {
            need({&sel.x, &sel.y, &sel.b}, "--x --y --b");
            check(*sel.x, 1, p - 2, "x");
            check(*sel.y, 0, p - 1, "y");
            check(*sel.b, 0, (p - 1) / 2, "b");
            const long long nb = (p + 1) / 2;
            const auto base = static_cast<std::size_t>(((*sel.x - 1) * p + *sel.y) * nb + *sel.b);
            if (fam.kind() == FamilyKind::split_oscillator) return base;
            const long long w = sel.w.value_or(0);
            check(w, 0, p - 1, "w");
            return base * static_cast<std::size_t>(p) + static_cast<std::size_t>(w);
        }
        case FamilyKind::chu:
            need({&sel.y}, "--y");
            check(*sel.y, 1, p - 1, "y");
            return static_cast<std::size_t>(*sel.y - 1);
        case FamilyKind::alltop_cubic:
            need({&sel.y}, "--y");
            check(*sel.y, 0, p - 1, "y");
            return static_cast<std::size_t>(*sel.y);
        case FamilyKind::heisenberg:
            need({&sel.y, &sel.z}, "--y --z");
            check(*sel.y, 0, p - 1, "y");
            check(*sel.z, 0, p - 1, "z");
            return static_cast<std::size_t>(*sel.y * p + *sel.z);
    }
    throw UsageError("unresolvable selector");
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + cfg.out + "'");
    f << text;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    if (cfg.format.empty()) return;
    for (const char* a : allowed) {
        if (cfg.format == a) return;
    }
    throw UsageError("unsupported --format '" + cfg.format + "' for this command");
}

std::optional<Bound> bound_override(const std::optional<std::string>& expr, const std::optional<Bound>& fallback,
                                    int p) {
    if (!expr) return fallback;
    if (*expr == "none") return std::nullopt;
    return parse_bound(*expr, p);
}

void set_threads(const RunConfig& cfg) {
#ifdef _OPENMP
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#else
    (void)cfg;
#endif
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"jsonl"});
    const auto f = make_field(cfg.p, cfg.generator);
    const FamilyDescriptor fam(family_kind_from_string(cfg.first.family), f);
    // a single member is written bare, without the family header line
    if (cfg.first.any_param()) {
        emit(cfg, to_json(fam.member(resolve_index(fam, cfg.first))).dump() + "\n", out);
    } else {
        emit(cfg, family_to_jsonl(fam, fam.members()), out);
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    require_format(cfg, {"json"});
    const auto f = make_field(cfg.p, cfg.generator);
    if (cfg.theorem2) {
        const auto rep = verify_theorem2(f);
        emit(cfg, to_json(rep).dump(2) + "\n", out);
        return rep.pass() ? kExitOk : kExitViolation;
    }
    if (cfg.first.family.empty()) throw UsageError("verify needs --family or --theorem2");
    const FamilyDescriptor fam(family_kind_from_string(cfg.first.family), f);

    VerifyOptions opt;
    opt.threads = cfg.threads;
    opt.check_auto = opt.check_cross = opt.check_ft = opt.count_classes = false;
    std::stringstream ss(cfg.checks);
    for (std::string c; std::getline(ss, c, ',');) {
        if (c == "ambiguity") {
            opt.check_auto = opt.check_cross = true;
        } else if (c == "auto") {
            opt.check_auto = true;
        } else if (c == "cross") {
            opt.check_cross = true;
        } else if (c == "ft") {
            opt.check_ft = true;
        } else if (c == "classes") {
            opt.count_classes = true;
        } else {
            throw UsageError("unknown check '" + c + "' (ambiguity, auto, cross, ft, classes)");
        }
    }
    if (cfg.pairs == "exhaustive") {
        opt.pairs = PairMode::exhaustive();
    } else if (cfg.pairs == "sampled") {
        if (!cfg.seed) throw UsageError("--pairs sampled requires --seed");
        opt.pairs = PairMode::sampled(*cfg.seed, cfg.count);
    } else {
        throw UsageError("--pairs must be exhaustive or sampled");
    }

    const auto defaults = default_bounds(fam.kind(), cfg.p);
    FamilyBounds bounds;
    bounds.auto_bound = bound_override(cfg.auto_bound, defaults.auto_bound, cfg.p);
    bounds.cross_bound = bound_override(cfg.cross_bound, defaults.cross_bound, cfg.p);
    bounds.ft_bound = bound_override(cfg.ft_bound, defaults.ft_bound, cfg.p);

    const auto rep = verify_family(fam, bounds, opt);
    if (cfg.verbosity > 0) {
        for (const auto& c : rep.checks) {
            err << c.name << ": measured " << format_double(c.measured)
                << (c.bound ? " bound " + format_double(c.bound->value) : std::string(" (unbounded)"))
                << (c.pass ? " ok" : " VIOLATED") << "\n";
        }
    }
    emit(cfg, to_json(rep, cfg.timing).dump(2) + "\n", out);
    return rep.pass() ? kExitOk : kExitViolation;
}

int cmd_ambiguity(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"csv"});
    const auto f = make_field(cfg.p, cfg.generator);
    const FamilyDescriptor fam(family_kind_from_string(cfg.first.family), f);
    const Sequence phi = fam.member(resolve_index(fam, cfg.first));
    Sequence psi = phi;
    if (!cfg.second.family.empty() || cfg.second.any_param() || cfg.second.p) {
        const int p2 = cfg.second.p.value_or(cfg.p);
        if (p2 != cfg.p) {
            throw UsageError("selectors disagree on p (" + std::to_string(cfg.p) + " vs " + std::to_string(p2) + ")");
        }
        const FamilyDescriptor fam2(
            family_kind_from_string(cfg.second.family.empty() ? cfg.first.family : cfg.second.family), f);
        psi = fam2.member(resolve_index(fam2, cfg.second));
    }
    const auto surface = ambiguity_surface(phi, psi, cfg.naive ? AmbiguityPath::naive : AmbiguityPath::fast);
    emit(cfg, surface_to_csv(surface), out);
    return kExitOk;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"csv", "json"});
    const auto f = make_field(cfg.p, cfg.generator);
    const FamilyDescriptor fam(family_kind_from_string(cfg.first.family), f);
    std::vector<std::size_t> indices;
    if (cfg.first.any_param()) {
        indices.push_back(resolve_index(fam, cfg.first));
    } else {
        for (std::size_t i = 0; i < fam.size(); ++i) indices.push_back(i);
    }
    const auto bound = bound_override(cfg.ft_bound, std::nullopt, cfg.p);
    bool pass = true;
    nlohmann::json rows = nlohmann::json::array();
    std::string csv = "index,label,spectrum_max\n";
    double worst = 0.0;
    for (auto i : indices) {
        const Sequence s = fam.member(i);
        const double m = spectrum_max(s);
        worst = std::max(worst, m);
        if (bound && m > bound->value + kBoundSlack) pass = false;
        rows.push_back({{"index", i}, {"label", s.label()}, {"spectrum_max", m}});
        csv += std::to_string(i) + "," + s.label() + "," + format_double(m) + "\n";
    }
    if (cfg.format == "csv") {
        emit(cfg, csv, out);
    } else {
        nlohmann::json j{{"schema", kReportSchema}, {"check", "spectrum"}, {"family", fam.name()},
                         {"p", cfg.p}, {"generator", f.generator()}, {"max", worst},
                         {"pass", pass}, {"members", rows}};
        j["bound"] = bound ? nlohmann::json(bound->value) : nlohmann::json(nullptr);
        emit(cfg, j.dump(2) + "\n", out);
    }
    return pass ? kExitOk : kExitViolation;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"csv", "json"});
    const auto f = make_field(cfg.p, cfg.generator);
    if (f.p() < 5) throw Error(Errc::PTooSmall, "compare includes omega, which needs p >= 5");
    ComparisonOptions opt;
    opt.seed = cfg.seed.value_or(1);
    opt.sample_count = cfg.count;
    opt.exhaustive_limit = cfg.exhaustive_limit;
    opt.threads = cfg.threads;
    const auto rows = compare_families(f, opt);
    if (cfg.format == "csv") {
        emit(cfg, comparison_to_csv(rows), out);
    } else {
        emit(cfg, comparison_to_json(cfg.p, f.generator(), rows).dump(2) + "\n", out);
    }
    return kExitOk;
}

int cmd_weil_check(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"json"});
    const auto f = make_field(cfg.p, cfg.generator);
    const std::uint64_t seed = cfg.seed.value_or(1);
    const auto thm2 = verify_theorem2(f);

    Rng rng(seed);
    auto summarize = [&](const char* name, auto&& one) {
        double worst = 0.0;
        std::size_t exact = 0;
        bool pass = true;
        nlohmann::json witnesses = nlohmann::json::array();
        for (int s = 0; s < cfg.samples; ++s) {
            auto [rep, desc] = one();
            worst = std::max(worst, rep.worst_residual);
            exact += rep.exact_lift ? 1 : 0;
            if (!rep.pass || !rep.exact_lift) {
                witnesses.push_back({{"case", desc},
                                     {"scalar", {rep.scalar.real(), rep.scalar.imag()}},
                                     {"residual", rep.worst_residual},
                                     {"pass", rep.pass}});
            }
            pass = pass && rep.pass;
        }
        return nlohmann::json{{"schema", kReportSchema},
                              {"check", name},
                              {"p", f.p()},
                              {"pass", pass},
                              {"samples", cfg.samples},
                              {"worst_residual", worst},
                              {"scalars_summary", {{"exact_lift", exact}, {"projective_only", cfg.samples - exact}}},
                              {"witnesses", witnesses}};
    };
    const auto intertwining = summarize("intertwining", [&] {
        const auto g = random_sl2(f, rng);
        const HeisenbergElement h{static_cast<int>(rng.below(f.p())), static_cast<int>(rng.below(f.p())),
                                  static_cast<int>(rng.below(f.p()))};
        auto rep = verify_intertwining(f, g, h, 3, rng.next());
        std::string desc = "g=" + g.str() + " h=(" + std::to_string(h.t) + "," + std::to_string(h.w) + "," +
                           std::to_string(h.z) + ")";
        return std::make_pair(rep, desc);
    });
    const auto homomorphism = summarize("homomorphism", [&] {
        const auto g1 = random_sl2(f, rng);
        const auto g2 = random_sl2(f, rng);
        auto rep = homomorphism_check(f, g1, g2, 3, rng.next());
        return std::make_pair(rep, "g1=" + g1.str() + " g2=" + g2.str());
    });
    // Only the residuals decide pass/fail; non-unit lifting scalars are data.
    const bool pass = thm2.pass() && intertwining["pass"].get<bool>() && homomorphism["pass"].get<bool>();
    nlohmann::json j{{"schema", kReportSchema}, {"check", "weil"}, {"p", f.p()},
                     {"generator", f.generator()}, {"seed", seed}, {"pass", pass},
                     {"reports", {to_json(thm2), intertwining, homomorphism}}};
    emit(cfg, j.dump(2) + "\n", out);
    return pass ? kExitOk : kExitViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"seqlab: period-p sequence families, ambiguity functions and bound verification"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.threads = default_threads();

    auto* gen = app.add_subcommand("generate", "write a family or one member as JSON-lines");
    add_common(gen, cfg);
    add_selector(gen, cfg.first, "", true);

    auto* ver = app.add_subcommand("verify", "check ambiguity / Fourier bounds, or the split-system identity");
    add_common(ver, cfg);
    add_selector(ver, cfg.first, "", false);
    ver->add_flag("--theorem2", cfg.theorem2, "match the Weil-built split system against the closed form");
    ver->add_option("--checks", cfg.checks, "comma list of ambiguity, auto, cross, ft, classes");
    ver->add_option("--pairs", cfg.pairs, "exhaustive | sampled");
    ver->add_option("--count", cfg.count, "sampled pair count");
    ver->add_option("--auto-bound", cfg.auto_bound, "e.g. 2sqrtp, 2sqrtp/(p-1), none");
    ver->add_option("--cross-bound", cfg.cross_bound);
    ver->add_option("--ft-bound", cfg.ft_bound);
    ver->add_flag("--timing", cfg.timing, "include wall time in the report");

    auto* amb = app.add_subcommand("ambiguity", "export the p x p ambiguity surface as CSV");
    add_common(amb, cfg);
    add_selector(amb, cfg.first, "", true);
    add_selector(amb, cfg.second, "2", false);
    amb->add_option("--p2", cfg.second.p, "period of the second selector (must equal --p)");
    amb->add_flag("--naive", cfg.naive, "use the direct O(p) sum per grid point");

    auto* spec = app.add_subcommand("spectrum", "maximum Fourier magnitude per member");
    add_common(spec, cfg);
    add_selector(spec, cfg.first, "", true);
    spec->add_option("--ft-bound", cfg.ft_bound);

    auto* cmp = app.add_subcommand("compare", "comparison table of Chu, Alltop cubic, Heisenberg and omega");
    add_common(cmp, cfg);
    cmp->add_option("--count", cfg.count, "sampled pair count above the exhaustive limit");
    cmp->add_option("--exhaustive-limit", cfg.exhaustive_limit, "family size up to which cross pairs are exhaustive");

    auto* weil = app.add_subcommand("weil-check", "split-system identity, intertwining and homomorphism probes");
    add_common(weil, cfg);
    weil->add_option("--samples", cfg.samples, "random (g, h) and (g1, g2) cases");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        set_threads(cfg);
        if (*gen) return cmd_generate(cfg, out);
        if (*ver) return cmd_verify(cfg, out, err);
        if (*amb) return cmd_ambiguity(cfg, out);
        if (*spec) return cmd_spectrum(cfg, out);
        if (*cmp) return cmd_compare(cfg, out);
        if (*weil) return cmd_weil_check(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace seqlab::cli
