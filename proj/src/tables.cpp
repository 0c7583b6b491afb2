#include "covera/tables.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <sstream>
#include <thread>

#include "covera/construct.hpp"
#include "covera/errors.hpp"
#include "covera/gf.hpp"

#include <json.hpp>

namespace covera {

namespace {

using nlohmann::json;

// Largest v with r_cov < k; beyond it none of the CB-based covering bounds
// can beat the Schonheim bound.
std::int64_t v_limit(int k, int lambda) {
    return (std::int64_t(k) - 1) * (k - 1) / lambda + 1;
}

std::int64_t v_start(int k) {
    return 13 * std::int64_t(k) / 4 + 1;  // smallest integer > 13k/4
}

std::vector<TableRow> rows_for_k_table1(int k, int lambda, bool refined) {
    std::vector<TableRow> rows;
    for (std::int64_t v = std::max<std::int64_t>(v_start(k), k + 1); v <= v_limit(k, lambda); ++v) {
        ParamSet p = make_params(v, k, lambda);
        auto t = thm_1_1(p);
        if (!t) continue;
        auto sch = schonheim(p);
        Int reference = refined ? sch.refined() : sch.value;
        if (*t > reference)
            rows.push_back(TableRow{k, v, (*t - reference).convert_to<long long>(),
                                    BoundId::thm_1_1, 0, 0, 0});
    }
    return rows;
}

std::vector<TableRow> rows_for_k_table2(int k, int lambda, bool refined) {
    std::vector<TableRow> rows;
    for (std::int64_t v = std::max<std::int64_t>(v_start(k), k + 1); v <= v_limit(k, lambda); ++v) {
        ParamSet p = make_params(v, k, lambda);
        auto t = thm_5_3(p);
        if (!t) continue;
        auto sch = schonheim(p);
        Int reference = refined ? sch.refined() : sch.value;
        if (t->rounded > reference)
            rows.push_back(TableRow{k, v, (t->rounded - reference).convert_to<long long>(),
                                    BoundId::thm_5_3, 0, 0, 0});
    }
    return rows;
}

std::vector<TableRow> rows_for_k_table3(int k, int lambda) {
    std::vector<TableRow> rows;
    for (std::int64_t v = std::max<std::int64_t>(v_start(k), k + 1); v <= v_limit(k, lambda); ++v) {
        ParamSet p = make_params(v, k, lambda);
        auto reference = thm_1_1(p);
        auto parts = thm_6_2(p);
        if (!reference || !parts) continue;
        Int best = parts->a->rounded;
        BoundId source = BoundId::thm_6_2a;
        char superscript = 0;
        if (parts->b && parts->b->rounded > best) {
            best = parts->b->rounded;
            source = BoundId::thm_6_2b;
        }
        if (parts->c && parts->c->rounded > best) {
            best = parts->c->rounded;
            source = BoundId::thm_6_2c;
        }
        if (parts->b && parts->b->rounded > parts->a->rounded) superscript = 'b';
        if (parts->c && parts->c->rounded > parts->a->rounded) superscript = 'c';
        if (best > *reference)
            rows.push_back(TableRow{k, v, (best - *reference).convert_to<long long>(), source,
                                    superscript, 0, 0});
    }
    return rows;
}

std::vector<TableRow> rows_for_k_table4(int k) {
    std::vector<TableRow> rows;
    for (int q = 4; q <= k; ++q) {
        if (!is_prime_power(q) || k % q != 0) continue;
        std::int64_t s = k / q;
        if (s < 2 * q + 1) continue;
        ExactRange range = exact_range(q, s);
        long long cover_number = (long long)q * q + q;
        for (std::int64_t v = range.v_lo; v <= range.v_hi; ++v) {
            ParamSet p = make_params(v, k, 1);
            if (schonheim(p).value >= cover_number) continue;
            rows.push_back(TableRow{k, v, 0, BoundId::thm_1_1, 0, q, cover_number});
        }
    }
    return rows;
}

}  // namespace

int thread_count() {
    const char* env = std::getenv("COVERA_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    if (n < 1) return 1;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw > 0 && n > int(hw)) n = int(hw);
    return n;
}

std::vector<TableRow> table_rows(int table_no, int k_max, int lambda, bool refined) {
    if (table_no < 1 || table_no > 4) throw InvalidArgument("table number must be 1..4");
    if (lambda < 1) throw InvalidArgument("lambda must be positive");
    if (table_no == 4 && lambda != 1)
        throw InvalidArgument("table 4 is defined for lambda = 1 only");

    auto rows_for_k = [&](int k) {
        switch (table_no) {
            case 1: return rows_for_k_table1(k, lambda, refined);
            case 2: return rows_for_k_table2(k, lambda, refined);
            case 3: return rows_for_k_table3(k, lambda);
            default: return rows_for_k_table4(k);
        }
    };

    std::vector<int> ks;
    for (int k = 3; k <= k_max; ++k) ks.push_back(k);

    std::vector<std::vector<TableRow>> per_k(ks.size());
    int workers = thread_count();
    if (workers <= 1 || ks.size() <= 1) {
        for (std::size_t i = 0; i < ks.size(); ++i) per_k[i] = rows_for_k(ks[i]);
    } else {
        std::vector<std::future<void>> futures;
        std::atomic<std::size_t> next{0};
        for (int w = 0; w < workers; ++w)
            futures.push_back(std::async(std::launch::async, [&]() {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= ks.size()) return;
                    per_k[i] = rows_for_k(ks[i]);
                }
            }));
        for (auto& f : futures) f.get();
    }

    std::vector<TableRow> rows;
    for (auto& part : per_k) rows.insert(rows.end(), part.begin(), part.end());
    return rows;
}

namespace {

std::string human_value(const TableRow& row, int table_no) {
    std::string out = std::to_string(row.v);
    if (table_no != 4 && row.improvement >= 2) out += "_" + std::to_string(row.improvement);
    if (row.superscript) out += std::string("^") + row.superscript;
    return out;
}

}  // namespace

std::string render_table(int table_no, const std::vector<TableRow>& rows, OutputFormat format) {
    std::ostringstream out;
    if (format == OutputFormat::tsv) {
        if (table_no == 4)
            out << "k\tq\tv\tcovering_number\n";
        else
            out << "k\tv\timprovement\tsource\tsuperscript\n";
        for (const auto& row : rows) {
            if (table_no == 4)
                out << row.k << '\t' << row.q << '\t' << row.v << '\t' << row.value << '\n';
            else
                out << row.k << '\t' << row.v << '\t' << row.improvement << '\t'
                    << bound_name(row.source) << '\t'
                    << (row.superscript ? std::string(1, row.superscript) : std::string("-"))
                    << '\n';
        }
        return out.str();
    }
    if (format == OutputFormat::jsonl) {
        for (const auto& row : rows) {
            json j;
            j["k"] = row.k;
            j["v"] = row.v;
            if (table_no == 4) {
                j["q"] = row.q;
                j["covering_number"] = row.value;
            } else {
                j["improvement"] = row.improvement;
                j["source"] = bound_name(row.source);
                if (row.superscript) j["superscript"] = std::string(1, row.superscript);
            }
            out << j.dump() << '\n';
        }
        return out.str();
    }

    // Human layout mirrors the k | values presentation.
    if (table_no == 4) {
        out << "  k |  q | v\n";
        std::size_t i = 0;
        while (i < rows.size()) {
            std::size_t j = i;
            while (j < rows.size() && rows[j].k == rows[i].k && rows[j].q == rows[i].q) ++j;
            std::string ks = std::to_string(rows[i].k);
            std::string qs = std::to_string(rows[i].q);
            out << std::string(ks.size() >= 3 ? 0 : 3 - ks.size(), ' ') << ks << " | ";
            out << std::string(qs.size() >= 2 ? 0 : 2 - qs.size(), ' ') << qs << " | ";
            for (std::size_t t = i; t < j; ++t) {
                if (t > i) out << ", ";
                out << rows[t].v;
            }
            out << '\n';
            i = j;
        }
        return out.str();
    }
    out << "  k | v\n";
    std::size_t i = 0;
    while (i < rows.size()) {
        std::size_t j = i;
        while (j < rows.size() && rows[j].k == rows[i].k) ++j;
        std::string ks = std::to_string(rows[i].k);
        out << std::string(ks.size() >= 3 ? 0 : 3 - ks.size(), ' ') << ks << " | ";
        for (std::size_t t = i; t < j; ++t) {
            if (t > i) out << ", ";
            out << human_value(rows[t], table_no);
        }
        out << '\n';
        i = j;
    }
    return out.str();
}

std::string render_report(const BoundReport& report, OutputFormat format) {
    std::ostringstream out;
    const ParamSet& p = report.params;
    const char* side = report.side == Side::cover ? "cover" : "pack";

    if (format == OutputFormat::tsv) {
        out << "bound\tapplicable\texact\tvalue\n";
        for (const auto& e : report.entries) {
            out << bound_name(e.id) << '\t' << (e.applicable ? "yes" : "no") << '\t';
            out << (e.exact ? e.exact->str() : std::string("-")) << '\t';
            out << (e.rounded ? e.rounded->str() : std::string("-")) << '\n';
        }
        out << "best\t" << side << '\t' << bound_name(report.best_source) << '\t'
            << report.best.str() << '\n';
        return out.str();
    }
    if (format == OutputFormat::jsonl) {
        for (const auto& e : report.entries) {
            json j;
            j["bound"] = bound_name(e.id);
            j["applicable"] = e.applicable;
            if (e.exact) j["exact"] = e.exact->str();
            if (e.rounded) j["value"] = e.rounded->str();
            out << j.dump() << '\n';
        }
        json best;
        best["v"] = p.v;
        best["k"] = p.k;
        best["lambda"] = p.lambda;
        best["side"] = side;
        best["best"] = report.best.str();
        best["source"] = bound_name(report.best_source);
        if (!report.notes.empty()) best["notes"] = report.notes;
        out << best.dump() << '\n';
        return out.str();
    }

    out << "(v,k,lambda) = (" << p.v << "," << p.k << "," << p.lambda << ")  side=" << side
        << "  r_cov=" << p.r_cov << " d_cov=" << p.d_cov << " r_pack=" << p.r_pack
        << " d_pack=" << p.d_pack << "\n";
    for (const auto& e : report.entries) {
        out << "  " << bound_name(e.id);
        for (std::size_t pad = std::string(bound_name(e.id)).size(); pad < 16; ++pad) out << ' ';
        if (!e.applicable) {
            out << "n/a\n";
            continue;
        }
        out << e.rounded->str() << "  (exact " << e.exact->str() << ")\n";
    }
    out << "best (" << side << "): " << report.best.str() << " via "
        << bound_name(report.best_source) << "\n";
    for (const auto& note : report.notes) out << "note: " << note << "\n";
    return out.str();
}

}  // namespace covera
