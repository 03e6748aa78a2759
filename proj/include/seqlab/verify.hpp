#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "seqlab/ambiguity.hpp"
#include "seqlab/families.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

/// Absolute slack added to every bound before comparison.
inline constexpr double kBoundSlack = 1e-6;

/// A bound value together with the expression it came from, e.g. "4sqrtp".
struct Bound {
    std::string expr;
    double value = 0.0;
};

/// Parses "<k>", "p", "[k]sqrtp", "[k]sqrtp/(p-1)", "[k]sqrtp/(p+1)" or
/// "[k]/sqrtp" at the given p. Throws InvalidArgument on anything else.
Bound parse_bound(const std::string& expr, int p);

struct FamilyBounds {
    std::optional<Bound> auto_bound;
    std::optional<Bound> cross_bound;
    std::optional<Bound> ft_bound;
};

/// Bounds the library asserts by default for each family at p.
FamilyBounds default_bounds(FamilyKind kind, int p);

struct PairMode {
    enum class Kind { exhaustive, sampled };
    Kind kind = Kind::exhaustive;
    std::uint64_t seed = 0;
    std::size_t count = 20000;

    static PairMode exhaustive() { return {}; }
    static PairMode sampled(std::uint64_t seed, std::size_t count) {
        return {Kind::sampled, seed, count};
    }
};

enum class Execution { serial, parallel };

struct VerifyOptions {
    PairMode pairs;
    Execution execution = Execution::parallel;
    int threads = 0;  // 0: OpenMP default
    AmbiguityPath path = AmbiguityPath::fast;
    bool check_auto = true;
    bool check_cross = true;
    bool check_ft = true;
    bool count_classes = true;
    /// Numeric (non-exact) families above this size skip the pairwise class count.
    std::size_t class_count_limit = 2000;
};

struct Witness {
    std::size_t first = 0;
    std::size_t second = 0;
    int t = 0;
    int w = 0;
    double magnitude = 0.0;
};

struct BoundCheck {
    std::string name;             // "auto_ambiguity", "cross_ambiguity", "fourier"
    std::optional<Bound> bound;
    double measured = 0.0;
    std::size_t evaluated = 0;    // members or pairs examined
    Witness witness;
    bool pass = true;
};

struct VerificationReport {
    std::string family;
    int p = 0;
    int generator = 0;
    std::size_t size = 0;
    bool normalized = false;
    std::string index_ranges;
    PairMode pairs;
    std::vector<BoundCheck> checks;
    std::vector<std::string> labels;  // member labels, for witness lookup

    // Phase-shift-equivalent (but distinct) pairs: measured, never bounded.
    std::size_t equivalent_pairs = 0;
    double equivalent_pairs_max = 0.0;

    std::optional<std::size_t> time_shift_classes;
    double wall_time_s = 0.0;

    bool pass() const noexcept;
    const BoundCheck* find(const std::string& name) const noexcept;
};

/// Decides whether members i and j are phase-shift distinct.
using DistinctPredicate = std::function<bool(std::size_t, std::size_t)>;

/// Core engine over an explicit member list. When `distinct` is empty the
/// generic is_phase_shift_equiv test is used.
VerificationReport verify_members(const std::vector<Sequence>& members, const std::string& family,
                                  int p, int generator, const FamilyBounds& bounds,
                                  const VerifyOptions& options, DistinctPredicate distinct = {});

/// Omega uses the structural rule "distinct (x, y)"; all other families use
/// the generic equivalence test.
VerificationReport verify_family(const FamilyDescriptor& family, const FamilyBounds& bounds,
                                 const VerifyOptions& options);

/// Number of classes under time-shift equivalence.
std::size_t count_time_shift_classes(const std::vector<Sequence>& members);

/// Unordered pairs (i < j) chosen for sampled cross checks; fixed by the seed.
/// An empty predicate accepts every pair.
std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(std::size_t n, std::uint64_t seed,
                                                               std::size_t count,
                                                               const DistinctPredicate& distinct);

struct ComparisonRow {
    std::string family;
    std::size_t size = 0;
    double auto_max = 0.0;
    std::optional<double> cross_max;  // none when no phase-shift-distinct pairs exist
    double ft_max = 0.0;
    std::string cross_mode;           // "exhaustive" or "sampled"
};

struct ComparisonOptions {
    std::size_t exhaustive_limit = 300;  // members; above this cross pairs are sampled
    std::uint64_t seed = 1;
    std::size_t sample_count = 20000;
    int threads = 0;
};

/// Chu, Alltop cubic, Heisenberg and Omega at one p.
std::vector<ComparisonRow> compare_families(const PrimeField& f, const ComparisonOptions& options = {});

}  // namespace seqlab
