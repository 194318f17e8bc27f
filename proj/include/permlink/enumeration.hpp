#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "permlink/diagram.hpp"
#include "permlink/permutation.hpp"
#include "permlink/seifert.hpp"

namespace permlink {

/// Every scalar statistic of one permutation, plus the classification
/// flags. chi is s - xing; x = -chi is asserted by the harness, not
/// assumed, so a record violating it is a counterexample report.
struct StatsRecord {
    int n = 0;
    std::int64_t D = 0, I = 0, T = 0;
    int cyc = 0;
    std::int64_t x = 0;
    int xing = 0, s = 0, chi = 0;
    bool shallow = false, sif = false, split = false, avoids321 = false;
    std::string case_tag;  // Case1/Case2/Case3, or Base when n < 3
};

StatsRecord compute_stats(const Permutation& p);
nlohmann::json to_json(const StatsRecord& r);

/// Integer sequence read from a b-file: lines of "index value", comments
/// starting with '#'.
struct SequenceFile {
    std::string name;
    std::map<int, std::int64_t> terms;
};

/// Throws std::invalid_argument on malformed lines (with line number) and
/// duplicate indices.
SequenceFile load_sequence_file(const std::string& path);

struct CrossCheckRow {
    int index;
    std::int64_t computed, expected;
    bool match;
};

struct CrossCheckReport {
    std::string sequence;
    int offset = 0;
    bool offset_searched = false;
    bool all_match = false;
    std::vector<CrossCheckRow> rows;
};

/// Compares computed counts against the sequence: count at n is checked
/// against the term at n + offset. Without a pinned offset, a small
/// window is searched and the best-matching alignment reported. Requires
/// at least 3 overlapping indices.
CrossCheckReport cross_check(const std::map<int, std::int64_t>& counts,
                             const SequenceFile& seq,
                             std::optional<int> offset = std::nullopt);

enum class PermClass { sif, shallow, avoids321, nonsplit, x_histogram, unknotted_cycles };

std::optional<PermClass> parse_class(std::string_view name);
const char* class_name(PermClass c);

/// Exhaustive count over S_n; 1 <= n <= 10. Throws for x_histogram,
/// which is a histogram rather than a single count.
std::int64_t count_class(int n, PermClass c);

/// Frequency of each value of x over S_n.
std::map<std::int64_t, std::int64_t> x_histogram(int n);

// Verification harness.

namespace detail {

/// Lazily materialized per-permutation context handed to checks.
class PermContext {
public:
    explicit PermContext(const Permutation& p) : perm_(p) {}
    const Permutation& perm() const { return perm_; }
    const StatsRecord& stats();
    const CycleDiagram& diagram();
    const SeifertDecomposition& seifert();

private:
    const Permutation& perm_;
    std::optional<StatsRecord> stats_;
    std::optional<CycleDiagram> diagram_;
    std::optional<SeifertDecomposition> seifert_;
};

/// A per-permutation property: returns a failure message or nothing.
struct Check {
    std::string name;
    int n_limit = 0;  // 0 = unbounded; otherwise skip permutations longer than this
    std::function<std::optional<std::string>(PermContext&)> fn;
};

const std::vector<Check>& check_registry();

}  // namespace detail

struct Counterexample {
    std::string check;
    std::string perm;
    std::string message;
    nlohmann::json details;  // full stats record plus the diagram
};

struct CheckReport {
    std::string name;
    std::int64_t passed = 0;
    std::optional<Counterexample> counterexample;
};

struct VerifyReport {
    int n_max = 0;
    int workers = 1;
    std::int64_t permutations = 0;
    std::vector<CheckReport> checks;

    bool ok() const;
    nlohmann::json to_json() const;
};

std::vector<std::string> available_checks();

/// Runs the selected checks (all when empty) over every permutation of
/// sizes 1..n_max, 1 <= n_max <= 10. Work is sharded by the first value
/// and merged in shard order, so the report is independent of worker
/// count; workers = 0 uses the hardware concurrency.
VerifyReport verify_all(int n_max, const std::vector<std::string>& checks = {},
                        int workers = 0);

namespace detail {
/// Harness core with an explicit check list; lets tests inject a
/// deliberately wrong check and watch the counterexample machinery fire.
VerifyReport run_checks(int n_max, const std::vector<Check>& checks, int workers);
}  // namespace detail

}  // namespace permlink
