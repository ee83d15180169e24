#ifndef POLYTRI_SEARCH_HPP
#define POLYTRI_SEARCH_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "polytri/qp.hpp"
#include "polytri/quantum.hpp"
#include "polytri/textio.hpp"

namespace polytri {

struct SearchFilters {
    bool reversible = false;
    bool self_orthogonal = false;
    bool self_dual = false;
    bool dual_containing = false;
    bool isodual_candidate = false;
    long long min_d = 0;
};

/// Deterministic exhaustive trinomial-code search: n ascending, then i, then
/// a and b by element index, then monic divisors in canonical order. The
/// JSONL store is append-only; the checkpoint records the last completed
/// (n, i, a, b) so a resumed job emits exactly the remaining records.
struct SearchJob {
    const Field* field = nullptr;
    long long n_lo = 0, n_hi = -1;  // empty when n_hi < n_lo
    SearchFilters filters;
    unsigned long long budget = 1000000ULL;  // distance enumeration budget
    unsigned long long divisor_cap = 1000000ULL;
    std::string store_path;       // "" disables persistence
    std::string checkpoint_path;  // "" disables checkpointing
    std::string job_id = "job";
};

struct SearchReport {
    std::vector<nlohmann::json> records;
    std::vector<std::string> skipped;  // per-item errors / cap log lines
    long long trinomials_done = 0;
};

SearchReport search_trinomial_codes(const SearchJob& job);

/// Exhaustive test of the checkable projection of one conjecture, documented
/// in `projection`; never claims the conjecture itself. Findings that would
/// need an undecidable-in-budget equivalence check land in `unresolved`.
struct ConjectureReport {
    std::string id;
    std::string projection;
    long long checked = 0;
    /// Instances satisfying the conjecture's hypothesis (e.g. self-dual hits
    /// for C4.6); a confirmation with zero hits is vacuous.
    long long hits = 0;
    std::vector<std::string> counterexamples;
    std::vector<std::string> unresolved;
    bool confirmed_in_range() const { return counterexamples.empty(); }
};

/// id in {C3.6, C4.1, C4.2, C4.5, C4.6, C4.10, C4.11}.
ConjectureReport run_conjecture(const std::string& id, const Field& F,
                                long long n_max,
                                unsigned long long budget = 1000000ULL);

struct TableRowReport {
    int row = 0;  // 1-based data row index
    std::string params;
    std::string verdict;  // MATCH | MATCH-DESCENDING | INCONSISTENT
    std::string note;
};

struct TableReport {
    int table_id = 0;
    std::vector<TableRowReport> rows;
    bool all_consistent() const {
        for (const auto& r : rows)
            if (r.verdict.rfind("INCONSISTENT", 0) == 0) return false;
        return true;
    }
};

/// Row-by-row re-derivation of a published table from its CSV transcription.
/// Ids: 1 codes matching best-known parameters (params,n,i,a,b,poly);
/// 2 self-dual codes (same columns); 3 reversible codes (same columns);
/// 4 two-block QP codes (params,i,a,b,h,f1,f2 with total length 2n);
/// 5-6 CSS quantum codes (params,trinomial,g1,h2). Coefficient strings are
/// read ascending first, then descending on failure (recorded in the
/// verdict).
TableReport verify_table(int table_id, const std::string& csv_path,
                         unsigned long long budget = 10000000ULL);

}  // namespace polytri

#endif
