#include "covera.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "covera/bounds.hpp"
#include "covera/construct.hpp"
#include "covera/errors.hpp"
#include "covera/io.hpp"
#include "covera/matrix.hpp"
#include "covera/oracle.hpp"
#include "covera/report.hpp"
#include "covera/tables.hpp"

struct covera_params {
    covera::ParamSet value;
};

struct covera_report {
    covera::BoundReport value;
};

struct covera_design {
    covera::Design value;
};

namespace {

thread_local std::string g_last_error = "ok";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int fail(int code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Maps core exceptions onto API error codes.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const covera::TrivialParamsError& e) {
        return fail(COVERA_ERR_TRIVIAL, e.what());
    } catch (const covera::ParseError& e) {
        return fail(COVERA_ERR_PARSE, e.what());
    } catch (const covera::SoundnessViolation& e) {
        return fail(COVERA_ERR_SOUNDNESS, e.what());
    } catch (const covera::IoError& e) {
        return fail(COVERA_ERR_IO, e.what());
    } catch (const covera::InternalError& e) {
        return fail(COVERA_ERR_INTERNAL, e.what());
    } catch (const covera::Error& e) {
        return fail(COVERA_ERR_INVALID, e.what());
    } catch (const std::bad_alloc&) {
        return fail(COVERA_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(COVERA_ERR_INTERNAL, e.what());
    }
}

int require(bool ok, const char* what) {
    if (ok) return COVERA_OK;
    return fail(COVERA_ERR_INVALID, what);
}

int to_format(int format, covera::OutputFormat* out) {
    switch (format) {
        case COVERA_FORMAT_HUMAN: *out = covera::OutputFormat::human; return COVERA_OK;
        case COVERA_FORMAT_TSV: *out = covera::OutputFormat::tsv; return COVERA_OK;
        case COVERA_FORMAT_JSONL: *out = covera::OutputFormat::jsonl; return COVERA_OK;
    }
    return fail(COVERA_ERR_INVALID, "bad format");
}

}  // namespace

extern "C" {

const char* covera_version(void) { return "1.0.0"; }

const char* covera_last_error(void) { return g_last_error.c_str(); }

void covera_string_free(char* s) { ::free(s); }

int covera_params_create(int64_t v, int64_t k, int64_t lambda, covera_params** out) {
    if (int rc = require(out != nullptr, "out must not be NULL")) return rc;
    return guarded([&] {
        auto* p = new covera_params{covera::make_params(v, k, lambda)};
        *out = p;
        return COVERA_OK;
    });
}

void covera_params_free(covera_params* p) { delete p; }

int covera_params_get(const covera_params* p, covera_params_info* out) {
    if (int rc = require(p && out, "p and out must not be NULL")) return rc;
    const covera::ParamSet& ps = p->value;
    *out = covera_params_info{ps.v,      ps.k,      ps.lambda, ps.r_cov, ps.d_cov,
                              ps.n_cov,  ps.r_pack, ps.d_pack, ps.n_pack};
    return COVERA_OK;
}

int covera_report_create(const covera_params* p, int side, covera_report** out) {
    if (int rc = require(p && out, "p and out must not be NULL")) return rc;
    if (int rc = require(side == COVERA_SIDE_COVER || side == COVERA_SIDE_PACK, "bad side"))
        return rc;
    return guarded([&] {
        auto s = side == COVERA_SIDE_COVER ? covera::Side::cover : covera::Side::pack;
        *out = new covera_report{covera::best_bounds(p->value, s)};
        return COVERA_OK;
    });
}

void covera_report_free(covera_report* r) { delete r; }

int covera_report_best(const covera_report* r, int64_t* best, char* name_buf, size_t name_len) {
    if (int rc = require(r && best, "r and best must not be NULL")) return rc;
    return guarded([&] {
        *best = r->value.best.convert_to<int64_t>();
        if (name_buf && name_len > 0) {
            std::string name = covera::bound_name(r->value.best_source);
            std::snprintf(name_buf, name_len, "%s", name.c_str());
        }
        return COVERA_OK;
    });
}

int covera_report_entry(const covera_report* r, const char* bound, int* applicable, int64_t* value,
                        char** exact) {
    if (int rc = require(r && bound, "r and bound must not be NULL")) return rc;
    return guarded([&] {
        for (const auto& e : r->value.entries) {
            if (std::strcmp(covera::bound_name(e.id), bound) != 0) continue;
            if (applicable) *applicable = e.applicable ? 1 : 0;
            if (value) *value = e.rounded ? e.rounded->convert_to<int64_t>() : 0;
            if (exact) *exact = dup_string(e.exact ? e.exact->str() : "-");
            return COVERA_OK;
        }
        return fail(COVERA_ERR_INVALID, std::string("unknown bound name '") + bound + "'");
    });
}

int covera_report_render(const covera_report* r, int format, char** out) {
    if (int rc = require(r && out, "r and out must not be NULL")) return rc;
    covera::OutputFormat f;
    if (int rc = to_format(format, &f)) return rc;
    return guarded([&] {
        *out = dup_string(covera::render_report(r->value, f));
        return COVERA_OK;
    });
}

int covera_table_render(int table_no, int k_max, int lambda, int refined, int format, char** out) {
    if (int rc = require(out != nullptr, "out must not be NULL")) return rc;
    covera::OutputFormat f;
    if (int rc = to_format(format, &f)) return rc;
    return guarded([&] {
        if (k_max <= 0) {
            switch (table_no) {
                case 1: k_max = 12; break;
                case 2: k_max = 20; break;
                case 3: k_max = 13; break;
                case 4: k_max = 147; break;
                default: k_max = 12; break;
            }
        }
        auto rows = covera::table_rows(table_no, k_max, lambda, refined != 0);
        *out = dup_string(covera::render_table(table_no, rows, f));
        return COVERA_OK;
    });
}

int covera_design_parse(const char* text, covera_design** out) {
    if (int rc = require(text && out, "text and out must not be NULL")) return rc;
    return guarded([&] {
        *out = new covera_design{covera::parse_design(text)};
        return COVERA_OK;
    });
}

int covera_design_read(const char* path, covera_design** out) {
    if (int rc = require(path && out, "path and out must not be NULL")) return rc;
    return guarded([&] {
        *out = new covera_design{covera::read_design_file(path)};
        return COVERA_OK;
    });
}

int covera_design_render(const covera_design* d, char** out) {
    if (int rc = require(d && out, "d and out must not be NULL")) return rc;
    return guarded([&] {
        *out = dup_string(covera::serialize_design(d->value));
        return COVERA_OK;
    });
}

int covera_design_write(const covera_design* d, const char* path) {
    if (int rc = require(d && path, "d and path must not be NULL")) return rc;
    return guarded([&] {
        covera::write_design_file(d->value, path);
        return COVERA_OK;
    });
}

void covera_design_free(covera_design* d) { delete d; }

int covera_design_info(const covera_design* d, int64_t* v, int64_t* k, int64_t* lambda,
                       int64_t* blocks) {
    if (int rc = require(d != nullptr, "d must not be NULL")) return rc;
    if (v) *v = d->value.v;
    if (k) *k = d->value.k;
    if (lambda) *lambda = d->value.lambda;
    if (blocks) *blocks = (int64_t)d->value.b();
    return COVERA_OK;
}

int covera_design_classify(const covera_design* d, int* kind) {
    if (int rc = require(d && kind, "d and kind must not be NULL")) return rc;
    return guarded([&] {
        switch (covera::classify(d->value).kind) {
            case covera::DesignKind::neither: *kind = COVERA_KIND_NEITHER; break;
            case covera::DesignKind::covering: *kind = COVERA_KIND_COVERING; break;
            case covera::DesignKind::packing: *kind = COVERA_KIND_PACKING; break;
            case covera::DesignKind::exact_design: *kind = COVERA_KIND_EXACT_DESIGN; break;
        }
        return COVERA_OK;
    });
}

int covera_design_bose_lower(const covera_design* d, int64_t* out) {
    if (int rc = require(d && out, "d and out must not be NULL")) return rc;
    return guarded([&] {
        *out = covera::bose_lower(d->value);
        return COVERA_OK;
    });
}

int covera_design_verify(const covera_design* d, char** report, int* sound) {
    if (int rc = require(d && sound, "d and sound must not be NULL")) return rc;
    return guarded([&] {
        covera::VerifyResult res = covera::verify_design(d->value);
        *sound = res.sound ? 1 : 0;
        if (report) *report = dup_string(res.text);
        return COVERA_OK;
    });
}

int covera_certificate_check(const covera_design* d, const int64_t* subset, size_t subset_len,
                             const char* const* weights, int* holds) {
    if (int rc = require(d && holds, "d and holds must not be NULL")) return rc;
    if (int rc = require(subset != nullptr || subset_len == 0, "subset must not be NULL")) return rc;
    return guarded([&] {
        std::vector<int> points(subset, subset + subset_len);
        std::vector<covera::Rat> c;
        c.reserve(subset_len);
        for (size_t i = 0; i < subset_len; ++i)
            c.push_back(weights ? covera::parse_rat(weights[i]) : covera::Rat(1));
        *holds = covera::certificate_check(d->value, points, c) ? 1 : 0;
        return COVERA_OK;
    });
}

int covera_construct_plane(int64_t q, covera_design** out) {
    if (int rc = require(out != nullptr, "out must not be NULL")) return rc;
    return guarded([&] {
        *out = new covera_design{covera::affine_plane(int(q))};
        return COVERA_OK;
    });
}

int covera_construct_blowup(int64_t q, int64_t s, covera_design** out) {
    if (int rc = require(out != nullptr, "out must not be NULL")) return rc;
    return guarded([&] {
        *out = new covera_design{covera::blowup(int(q), int(s))};
        return COVERA_OK;
    });
}

int covera_construct_restrict(int64_t q, int64_t s, int64_t v_target, covera_design** out) {
    if (int rc = require(out != nullptr, "out must not be NULL")) return rc;
    return guarded([&] {
        covera::Design base = covera::blowup(int(q), int(s));
        *out = new covera_design{covera::restrict_covering(base, int(v_target))};
        return COVERA_OK;
    });
}

int covera_exact_range(int64_t q, int64_t s, int64_t* v_lo, int64_t* v_hi, char** z) {
    if (int rc = require(v_lo && v_hi, "v_lo and v_hi must not be NULL")) return rc;
    return guarded([&] {
        covera::ExactRange range = covera::exact_range(q, s);
        *v_lo = range.v_lo;
        *v_hi = range.v_hi;
        if (z) *z = dup_string(covera::rat_str(range.z));
        return COVERA_OK;
    });
}

int covera_search(int64_t v, int64_t k, int64_t lambda, int side, uint64_t max_nodes,
                  double max_seconds, int64_t* value, covera_design** witness) {
    if (int rc = require(value != nullptr, "value must not be NULL")) return rc;
    if (int rc = require(side == COVERA_SIDE_COVER || side == COVERA_SIDE_PACK, "bad side"))
        return rc;
    return guarded([&] {
        covera::SearchBudget budget;
        if (max_nodes > 0) budget.max_nodes = max_nodes;
        if (max_seconds > 0) budget.max_seconds = max_seconds;
        covera::SearchResult res =
            side == COVERA_SIDE_COVER
                ? covera::min_cover(int(v), int(k), int(lambda), budget)
                : covera::max_pack(int(v), int(k), int(lambda), budget);
        *value = res.value;
        if (res.status == covera::SearchStatus::budget_exceeded)
            return fail(COVERA_ERR_BUDGET, "search budget exhausted");
        if (witness) *witness = new covera_design{res.witness};
        return COVERA_OK;
    });
}

}  // extern "C"
