#include "covera/report.hpp"

#include <algorithm>
#include <sstream>

#include "covera/bounds.hpp"
#include "covera/errors.hpp"
#include "covera/matrix.hpp"

namespace covera {

VerifyResult verify_design(const Design& d, const std::vector<int>& subset,
                           const std::vector<Rat>& weights) {
    VerifyResult out;
    out.classification = classify(d);
    out.b = (long long)d.b();
    std::ostringstream text;
    text << "points " << d.v << ", block size " << d.k << ", lambda " << d.lambda << ", blocks "
         << out.b << "\n";
    text << "classification: " << kind_name(out.classification.kind) << " (pair multiplicities "
         << out.classification.min_pair << ".." << out.classification.max_pair << ")\n";

    if (out.classification.kind == DesignKind::neither) {
        out.sound = false;
        text << "no excess/leave: design is neither a covering nor a packing\n";
        out.text = text.str();
        return out;
    }

    out.bose = bose_lower(d);
    text << "rank lower bound: " << out.bose << (out.b >= out.bose ? " <= b, ok" : " > b, VIOLATION")
         << "\n";
    if (out.b < out.bose) out.sound = false;

    Multigraph g = excess_or_leave(d);
    long long edges = g.total_degree() / 2;
    long long max_mult = 0;
    for (int u = 1; u <= d.v; ++u)
        for (int w = u + 1; w <= d.v; ++w) max_mult = std::max(max_mult, g.at(u, w));
    const char* gname = out.classification.is_covering() ? "excess" : "leave";
    if (out.classification.kind == DesignKind::exact_design)
        text << "excess/leave: empty (exact design)\n";
    else
        text << gname << ": " << edges << " edges counting multiplicity, max multiplicity "
             << max_mult << "\n";

    if (3 <= d.k && d.k < d.v) {
        ParamSet p = make_params(d.v, d.k, d.lambda);
        if (out.classification.is_covering()) {
            BoundReport rep = best_bounds(p, Side::cover);
            bool ok = Int(out.b) >= rep.best;
            if (!ok) out.sound = false;
            text << "covering lower bound " << rep.best.str() << " via "
                 << bound_name(rep.best_source) << (ok ? " <= b, ok" : " > b, VIOLATION") << "\n";
        }
        if (out.classification.is_packing()) {
            BoundReport rep = best_bounds(p, Side::pack);
            bool ok = Int(out.b) <= rep.best;
            if (!ok) out.sound = false;
            text << "packing upper bound " << rep.best.str() << " via "
                 << bound_name(rep.best_source) << (ok ? " >= b, ok" : " < b, VIOLATION") << "\n";
        }
    } else {
        text << "bound comparisons skipped (parameters outside 3 <= k < v)\n";
    }

    if (!subset.empty()) {
        std::vector<Rat> c = weights;
        if (c.empty()) c.assign(subset.size(), Rat(1));
        bool holds = certificate_check(d, subset, c);
        out.certificate = holds;
        text << "certificate on |S| = " << subset.size() << ": "
             << (holds ? "premise holds" : "premise fails") << "\n";
        if (holds && out.b < (long long)subset.size()) out.sound = false;
    }

    text << (out.sound ? "sound\n" : "SOUNDNESS VIOLATION\n");
    out.text = text.str();
    return out;
}

}  // namespace covera
