#pragma once

#include "confstab/characters.hpp"
#include "confstab/module.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace confstab {

class InsufficientWindow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// V_n / W_n inside an explicit tabloid module.  W_n absent means zero.
struct Level {
    Subspace space;
    std::optional<Subspace> sub;

    std::size_t dim() const;
    MultiplicityVector decomposition() const;
    Subspace sub_or_zero() const;
};

// phi_n in module coordinates, from level n to level n+1.
using LevelMap = std::function<SparseVec(int n, const SparseVec& v)>;

class ConsistentSequence {
public:
    ConsistentSequence() = default;
    // Maps default to iota.
    ConsistentSequence(std::map<int, Level> levels, LevelMap phi = {});
    static ConsistentSequence from_multiplicities(std::map<int, MultiplicityVector> counts);

    int n_min() const;
    int n_max() const;
    bool is_explicit() const { return !levels_.empty(); }
    const Level& level(int n) const { return levels_.at(n); }
    const std::map<int, Level>& levels() const { return levels_; }
    MultiplicityVector multiplicities(int n) const;
    SparseVec phi(int n, const SparseVec& v) const;

private:
    std::map<int, Level> levels_;
    std::map<int, MultiplicityVector> counts_;
    LevelMap phi_;
};

ConsistentSequence induced_tabloid_sequence(const Partition& lambda, int n_min, int n_max);
ConsistentSequence induced_specht_sequence(const Partition& lambda, int n_min, int n_max);
ConsistentSequence zero_map_sequence(const Partition& lambda, int n_min, int n_max);
// Summands of b follow those of a in one module.
ConsistentSequence direct_sum(const ConsistentSequence& a, const ConsistentSequence& b);
// V/W where W is a subsequence living in the same modules.
ConsistentSequence quotient(const ConsistentSequence& v, const ConsistentSequence& w);

// Equivariant map I_n(M^lambda) -> I_n(M^merged) joining rows r < s.
struct RowMerge {
    Partition source;
    std::size_t r, s;
    Partition target() const;
    // Position of the merged row in the target.
    std::size_t merged_position() const;
    SparseVec apply(const TabloidModule& from, const TabloidModule& to, const SparseVec& v) const;
};

ConsistentSequence merge_kernel(const RowMerge& f, int n_min, int n_max);
ConsistentSequence merge_image(const RowMerge& f, int n_min, int n_max);

struct Witness {
    int n = 0;
    std::optional<Partition> lambda;
    std::string detail;
};

struct StabilityReport {
    int window_min = 0, window_max = 0;
    int requested = 0;
    // First n from which the condition holds up to the end of the window.
    int injectivity_from = 0;
    int surjectivity_from = 0;
    int multiplicity_from = 0;
    std::map<Partition, int> multiplicity_stable_from;  // keyed by unpadded lambda
    int monotone_from = 0;
    std::vector<Witness> failures;  // only those at n >= requested

    bool ok() const { return failures.empty(); }
    int stable_from() const;
    std::string str() const;
};

// Conditions I-III on [N, n_max].
StabilityReport check_uniform_stability(const ConsistentSequence& seq, int N);
// Only lambda (unpadded) when given.
StabilityReport check_monotone(const ConsistentSequence& seq, int N,
                               std::optional<Partition> only = std::nullopt);
// First n from which the padded multiplicities no longer change on the window.
int multiplicity_onset(const ConsistentSequence& seq);

void write_witness(const StabilityReport& report, const std::string& label, const std::string& path);

struct PropertyCase {
    std::string label;
    std::string property;
    bool ok = true;
    std::string detail;
};

struct PropertyReport {
    unsigned seed = 0;
    std::vector<PropertyCase> cases;
    bool ok() const;
    std::size_t violations() const;
};

// Random instances of the closure properties for sub, quotient, sum and map sequences.
PropertyReport property_suite(unsigned seed, int count, int n_max);

struct RangeParams {
    Rational m;
    int ell = 0;
};

// Bound n >= slope * (p+q) + intercept.
struct AffineBound {
    Rational slope;
    Rational intercept;
    std::string str() const;
    friend bool operator==(const AffineBound&, const AffineBound&) = default;
};

AffineBound max_bound(const AffineBound& a, const AffineBound& b);

struct RangeRow {
    int page;
    AffineBound stable;
    AffineBound monotone;
};

std::vector<RangeRow> propagate_ranges(const RangeParams& params, int pages);
std::string format_ranges(const RangeParams& params, const std::vector<RangeRow>& rows);

}  // namespace confstab
