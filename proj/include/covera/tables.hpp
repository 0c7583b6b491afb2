#pragma once

#include <string>
#include <vector>

#include "covera/bounds.hpp"

namespace covera {

enum class OutputFormat { human, tsv, jsonl };

// One marked value of v. Tables 1-3 carry the improvement over the
// reference bound and, for table 3, a superscript when part (b) or (c)
// beats part (a). Table 4 rows carry the plane order q and the certified
// covering number instead.
struct TableRow {
    int k = 0;
    long long v = 0;
    long long improvement = 0;
    BoundId source = BoundId::schonheim;
    char superscript = 0;  // 0, 'b' or 'c'
    int q = 0;             // table 4 only
    long long value = 0;   // table 4 only: q^2 + q
};

// Row semantics:
//   1: v > 13k/4 where thm_1_1 strictly improves on the Schonheim bound
//   2: v > 13k/4 where thm_5_3 strictly improves on the Schonheim bound
//   3: v > 13k/4 where max(thm_6_2a/b/c) strictly improves on thm_1_1,
//      superscript b/c when that part exceeds part (a)
//   4: v in the exact_range(q, s=k/q) interval (q >= 4 a prime power,
//      s >= 2q+1) whose covering number q^2+q is not already implied by
//      the Schonheim bound
// With refined set, tables 1 and 2 compare against the +1-refined
// Schonheim value instead (table 3 is relative to thm_1_1; table 4 keeps
// the caption's plain-bound filter).
std::vector<TableRow> table_rows(int table_no, int k_max, int lambda, bool refined = false);

std::string render_table(int table_no, const std::vector<TableRow>& rows, OutputFormat format);

std::string render_report(const BoundReport& report, OutputFormat format);

// Worker cap for table generation, from COVERA_THREADS (default 1).
int thread_count();

}  // namespace covera
