// covera command line tool. Parses arguments with CLI11 and drives the
// engine exclusively through the C API in covera.h.
//
// Exit codes: 0 ok, 1 soundness violation, 2 usage or parse error,
// 3 search budget exhausted.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "covera.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSoundness = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int map_error(int rc) {
    switch (rc) {
        case COVERA_OK: return kExitOk;
        case COVERA_ERR_BUDGET: return kExitBudget;
        case COVERA_ERR_SOUNDNESS: return kExitSoundness;
        default: return kExitUsage;
    }
}

int complain(int rc) {
    std::cerr << "error: " << covera_last_error() << "\n";
    return map_error(rc);
}

int parse_format(const std::string& name) {
    if (name == "human") return COVERA_FORMAT_HUMAN;
    if (name == "tsv") return COVERA_FORMAT_TSV;
    if (name == "jsonl") return COVERA_FORMAT_JSONL;
    return -1;
}

std::vector<std::string> split_ws(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string token;
    while (in >> token) out.push_back(token);
    return out;
}

struct Managed {
    char* s = nullptr;
    ~Managed() { covera_string_free(s); }
};

struct ManagedDesign {
    covera_design* d = nullptr;
    ~ManagedDesign() { covera_design_free(d); }
};

int print_design_summary(covera_design* design, std::ostream& out) {
    int64_t v = 0, k = 0, lambda = 0, blocks = 0;
    int kind = 0;
    if (int rc = covera_design_info(design, &v, &k, &lambda, &blocks)) return rc;
    if (int rc = covera_design_classify(design, &kind)) return rc;
    const char* kinds[] = {"neither", "covering", "packing", "exact-design"};
    out << "(" << v << "," << k << "," << lambda << ") with " << blocks
        << " blocks, classification: " << kinds[kind] << "\n";
    return COVERA_OK;
}

int cmd_bound(int64_t v, int64_t k, int64_t lambda, const std::string& side_name,
              const std::string& format_name) {
    int format = parse_format(format_name);
    if (format < 0) {
        std::cerr << "error: unknown format '" << format_name << "'\n";
        return kExitUsage;
    }
    int side = side_name == "pack" ? COVERA_SIDE_PACK : COVERA_SIDE_COVER;
    covera_params* params = nullptr;
    if (int rc = covera_params_create(v, k, lambda, &params)) return complain(rc);
    covera_report* report = nullptr;
    int rc = covera_report_create(params, side, &report);
    if (rc == COVERA_OK) {
        Managed text;
        rc = covera_report_render(report, format, &text.s);
        if (rc == COVERA_OK) std::cout << text.s;
    }
    covera_report_free(report);
    covera_params_free(params);
    return rc == COVERA_OK ? kExitOk : complain(rc);
}

int cmd_table(int table, int k_max, int64_t lambda, bool refined, const std::string& format_name) {
    int format = parse_format(format_name);
    if (format < 0) {
        std::cerr << "error: unknown format '" << format_name << "'\n";
        return kExitUsage;
    }
    Managed text;
    int rc = covera_table_render(table, k_max, int(lambda), refined ? 1 : 0, format, &text.s);
    if (rc != COVERA_OK) return complain(rc);
    std::cout << text.s;
    return kExitOk;
}

int emit_design(covera_design* design, const std::string& out_path) {
    if (!out_path.empty()) {
        if (int rc = covera_design_write(design, out_path.c_str())) return complain(rc);
        if (int rc = print_design_summary(design, std::cout)) return complain(rc);
        std::cout << "written to " << out_path << "\n";
        return kExitOk;
    }
    Managed text;
    if (int rc = covera_design_render(design, &text.s)) return complain(rc);
    std::cout << text.s;
    if (int rc = print_design_summary(design, std::cerr)) return complain(rc);
    return kExitOk;
}

int cmd_construct(const std::string& kind, int64_t q, int64_t s, int64_t v_target,
                  const std::string& out_path) {
    ManagedDesign design;
    int rc;
    if (kind == "plane")
        rc = covera_construct_plane(q, &design.d);
    else if (kind == "blowup")
        rc = covera_construct_blowup(q, s, &design.d);
    else
        rc = covera_construct_restrict(q, s, v_target, &design.d);
    if (rc != COVERA_OK) return complain(rc);
    return emit_design(design.d, out_path);
}

int cmd_verify(const std::string& path, const std::string& subset_text,
               const std::string& weights_text) {
    ManagedDesign design;
    if (int rc = covera_design_read(path.c_str(), &design.d)) return complain(rc);

    int sound = 0;
    Managed report;
    if (int rc = covera_design_verify(design.d, &report.s, &sound)) return complain(rc);
    std::cout << report.s;

    if (!subset_text.empty()) {
        std::vector<int64_t> subset;
        for (const auto& token : split_ws(subset_text)) {
            try {
                subset.push_back(std::stoll(token));
            } catch (const std::exception&) {
                std::cerr << "error: bad point '" << token << "' in --subset\n";
                return kExitUsage;
            }
        }
        std::vector<std::string> weight_tokens = split_ws(weights_text);
        if (!weight_tokens.empty() && weight_tokens.size() != subset.size()) {
            std::cerr << "error: --weights must list one weight per subset point\n";
            return kExitUsage;
        }
        std::vector<const char*> weight_ptrs;
        for (const auto& w : weight_tokens) weight_ptrs.push_back(w.c_str());
        int holds = 0;
        int rc = covera_certificate_check(design.d, subset.data(), subset.size(),
                                          weight_tokens.empty() ? nullptr : weight_ptrs.data(),
                                          &holds);
        if (rc != COVERA_OK) return complain(rc);
        int64_t blocks = 0;
        covera_design_info(design.d, nullptr, nullptr, nullptr, &blocks);
        std::cout << "certificate premise " << (holds ? "holds" : "fails") << " on |S|="
                  << subset.size() << "\n";
        if (holds && blocks < int64_t(subset.size())) sound = 0;
    }
    return sound ? kExitOk : kExitSoundness;
}

int cmd_search(int64_t v, int64_t k, int64_t lambda, const std::string& side_name,
               uint64_t max_nodes, double max_seconds, const std::string& out_path) {
    int side = side_name == "pack" ? COVERA_SIDE_PACK : COVERA_SIDE_COVER;
    int64_t value = -1;
    ManagedDesign witness;
    int rc = covera_search(v, k, lambda, side, max_nodes, max_seconds, &value, &witness.d);
    if (rc == COVERA_ERR_BUDGET) {
        std::cout << "budget exceeded";
        if (side == COVERA_SIDE_PACK && value >= 0)
            std::cout << " (best packing found so far: " << value << " blocks, not proven optimal)";
        std::cout << "\n";
        return kExitBudget;
    }
    if (rc != COVERA_OK) return complain(rc);
    std::cout << (side == COVERA_SIDE_PACK ? "D" : "C") << "_" << lambda << "(" << v << "," << k
              << ") = " << value << "\n";
    if (!out_path.empty()) {
        if (int wrc = covera_design_write(witness.d, out_path.c_str())) return complain(wrc);
        std::cout << "witness written to " << out_path << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact covering/packing design bounds, constructions and search"};
    app.require_subcommand(1);

    // bound
    int64_t v = 0, k = 0, lambda = 1;
    std::string side = "cover", format = "human";
    auto* bound = app.add_subcommand("bound", "evaluate every applicable bound for (v,k,lambda)");
    bound->add_option("v", v, "number of points")->required();
    bound->add_option("k", k, "block size")->required();
    bound->add_option("lambda", lambda, "pair multiplicity")->required();
    bound->add_option("--side", side, "cover or pack")
        ->check(CLI::IsMember({"cover", "pack"}))
        ->default_val("cover");
    bound->add_option("--format", format, "human, tsv or jsonl")->default_val("human");

    // table
    int table_no = 1, k_max = 0;
    bool refined = false;
    std::string table_format = "human";
    int64_t table_lambda = 1;
    auto* table = app.add_subcommand("table", "regenerate one of the published tables");
    table->add_option("n", table_no, "table number 1..4")->required()->check(CLI::Range(1, 4));
    table->add_option("--k-max", k_max, "largest k (default: as published)");
    table->add_option("--lambda", table_lambda, "pair multiplicity (tables 1-3)")->default_val(1);
    table->add_flag("--refined", refined, "compare against the +1-refined classical bound");
    table->add_option("--format", table_format, "human, tsv or jsonl")->default_val("human");

    // construct
    std::string kind, out_path;
    int64_t q = 0, s = 1, v_target = 0;
    auto* construct = app.add_subcommand("construct", "affine plane, blow-up or restriction");
    construct->add_option("kind", kind, "plane, blowup or restrict")
        ->required()
        ->check(CLI::IsMember({"plane", "blowup", "restrict"}));
    construct->add_option("q", q, "plane order (prime power)")->required();
    construct->add_option("s", s, "inflation factor (blowup/restrict)");
    construct->add_option("v_target", v_target, "restricted point count (restrict)");
    construct->add_option("--out", out_path, "write the design file here instead of stdout");

    // verify
    std::string verify_path, subset_text, weights_text;
    auto* verify = app.add_subcommand("verify", "audit a design file");
    verify->add_option("path", verify_path, "design file")->required();
    verify->add_option("--subset", subset_text, "points for a certificate check, e.g. \"1 2 5\"");
    verify->add_option("--weights", weights_text, "rational weights parallel to --subset");

    // search
    int64_t sv = 0, sk = 0, slambda = 1;
    std::string search_side = "cover", witness_path;
    uint64_t max_nodes = 0;
    double max_seconds = 0;
    auto* search = app.add_subcommand("search", "exact covering/packing number by exhaustion");
    search->add_option("v", sv, "number of points")->required();
    search->add_option("k", sk, "block size")->required();
    search->add_option("lambda", slambda, "pair multiplicity")->required();
    search->add_option("--side", search_side, "cover or pack")
        ->check(CLI::IsMember({"cover", "pack"}))
        ->default_val("cover");
    search->add_option("--max-nodes", max_nodes, "node budget (0 = unlimited)");
    search->add_option("--max-seconds", max_seconds, "time budget (0 = unlimited)");
    search->add_option("--out", witness_path, "write the witness design here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (bound->parsed()) return cmd_bound(v, k, lambda, side, format);
    if (table->parsed()) return cmd_table(table_no, k_max, table_lambda, refined, table_format);
    if (construct->parsed()) {
        if (kind == "blowup" && construct->count("s") == 0) {
            std::cerr << "error: blowup requires q and s\n";
            return kExitUsage;
        }
        if (kind == "restrict" && construct->count("v_target") == 0) {
            std::cerr << "error: restrict requires q, s and v_target\n";
            return kExitUsage;
        }
        return cmd_construct(kind, q, s, v_target, out_path);
    }
    if (verify->parsed()) return cmd_verify(verify_path, subset_text, weights_text);
    if (search->parsed())
        return cmd_search(sv, sk, slambda, search_side, max_nodes, max_seconds, witness_path);
    return kExitUsage;
}
