#include "ubb/report.hpp"

#include "ubb/block_cube.hpp"
#include "ubb/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace ubb {

namespace {

using nlohmann::ordered_json;

int kernel_dim(const BasisSet& basis) {
    std::vector<RationalVector> rows;
    rows.reserve(basis.states.size());
    for (const auto& s : basis.states) rows.push_back(s.coeffs);
    const int n = basis.d * basis.d * basis.d;
    return n - rank(RationalMatrix::from_rows(rows));
}

double elapsed_ms(const std::chrono::steady_clock::time_point& from) {
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - from).count();
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
    static const std::vector<ClaimInfo> registry = {
        {"counts", "set cardinalities and complement dimensions match the closed forms"},
        {"no-product", "the complement of the set contains no nonzero product vector"},
        {"no-bisep",
         "the complement contains no nonzero vector biseparable across the cut (all cuts when "
         "none is given)"},
        {"ppt", "the normalized complement projector stays PSD under partial transpose in every "
                "cut"},
        {"distill", "marginal ranks exceed the complement rank in some cut (rank criterion)"},
        {"facts", "missing-state span, pairwise span intersections, mixture marginal ranks, and "
                  "pairwise-combination ranks"},
        {"rank-excess",
         "random rank-n complement projectors have every two-party marginal rank >= n+1"},
    };
    return registry;
}

bool is_known_claim(const std::string& id) {
    for (const auto& c : claim_registry())
        if (c.id == id) return true;
    return false;
}

int expected_count(int d, BasisKind kind) {
    const int n = d * d * d;
    const int layers = layer_count(d);
    const int dropped = (d % 2 == 1) ? (6 * layers + d) : (6 * layers + 1 + d - 2);
    switch (kind) {
        case BasisKind::topb: return n;
        case BasisKind::upb: return n - dropped + 1;
        case BasisKind::ubb_sym: return n - dropped + 1 + 3 * layers;
        case BasisKind::ubb_asym: return n - dropped + 1 + 4 * layers;
    }
    throw std::logic_error("expected_count: bad kind");
}

int expected_complement_dim(int d, BasisKind kind) {
    return d * d * d - expected_count(d, kind);
}

bool Report::all_pass() const {
    for (const auto& c : certificates)
        if (!c.pass) return false;
    return true;
}

Certificate certify_counts(int d, CompletionScheme scheme) {
    Certificate cert;
    cert.claim = "counts";
    cert.method = Method::structural_exact;
    cert.note("d", std::to_string(d));

    bool ok = true;
    const auto check = [&](const BasisSet& basis, const std::string& name) {
        const int want_count = expected_count(d, basis.kind);
        const int want_comp = expected_complement_dim(d, basis.kind);
        const int got_count = static_cast<int>(basis.states.size());
        const int got_comp = kernel_dim(basis);
        std::ostringstream os;
        os << got_count << " states, complement " << got_comp;
        if (got_count != want_count || got_comp != want_comp) {
            ok = false;
            os << " (expected " << want_count << "/" << want_comp << ")";
        }
        cert.note(name, os.str());
    };

    check(build_full_topb(d, scheme), "topb");
    check(build_upb(d, scheme), "upb");
    check(build_symmetric_ubb(d, scheme), "ubb-sym");
    for (Bipartition cut : all_cuts())
        check(build_asymmetric_ubb(d, cut, scheme), "ubb-asym " + to_string(cut));

    cert.pass = ok;
    return cert;
}

Certificate certify_ppt(const BasisSet& basis) {
    Certificate cert;
    cert.claim = "ppt";
    cert.method = Method::structural_exact;
    cert.note("set", to_string(basis.kind));
    cert.note("d", std::to_string(basis.d));

    const SubspaceProjector p = complement_projector(basis);
    if (p.rank == 0) {
        cert.note("complement", "trivial (no state to test)");
        cert.pass = false;
        return cert;
    }
    const PTReport rep = pt_report(p.normalized(), basis.d);
    bool ok = true;
    for (const auto& v : rep.cuts) {
        std::ostringstream os;
        os << (v.psd ? "PSD" : "not PSD") << (v.pt_invariant ? ", PT-invariant" : "");
        if (!v.psd && v.min_eig) os << ", min eig in [" << v.min_eig->lo.str() << ", "
                                    << v.min_eig->hi.str() << "]";
        cert.note(to_string(v.cut), os.str());
        if (!v.psd) ok = false;
    }
    cert.pass = ok;
    return cert;
}

Certificate certify_distill(const BasisSet& basis) {
    Certificate cert;
    cert.claim = "distill";
    cert.method = Method::structural_exact;
    cert.note("set", to_string(basis.kind));
    cert.note("d", std::to_string(basis.d));

    const SubspaceProjector p = complement_projector(basis);
    if (p.rank == 0) {
        cert.note("complement", "trivial (no state to test)");
        cert.pass = false;
        return cert;
    }
    cert.note("complement_rank", std::to_string(p.rank));
    const RankProfile prof = rank_profile(p);
    bool any = false;
    for (const auto& cr : prof.cuts) {
        const bool holds = lemma_rank_criterion(p, cr.cut);
        std::ostringstream os;
        os << "pair rank " << cr.two_party_rank << ", lone rank " << cr.single_party_rank << ": "
           << (holds ? "criterion holds" : "criterion fails");
        cert.note(to_string(cr.cut), os.str());
        if (holds) any = true;
    }
    cert.pass = any;
    return cert;
}

std::string certificate_text(const Certificate& cert) {
    std::ostringstream os;
    os << "[" << (cert.pass ? "PASS" : "FAIL") << "] " << cert.claim << " ("
       << to_string(cert.method) << ")";
    if (cert.method == Method::randomized_numerical)
        os << " seed=" << cert.seed << " n=" << cert.restarts;
    os << "\n";
    for (const auto& [key, value] : cert.witness) os << "    " << key << ": " << value << "\n";
    return os.str();
}

std::string to_text(const Report& report) {
    std::ostringstream os;
    os << "ubbcube report v" << report.version << "\n";
    os << "config: d=" << report.config.d << " scheme="
       << (report.config.scheme == CompletionScheme::standard ? "standard" : "permuted")
       << " seed=" << report.config.seed << " restarts=" << report.config.restarts
       << " samples=" << report.config.samples << " jobs=" << report.config.jobs << "\n\n";

    for (const auto& cert : report.certificates) os << certificate_text(cert) << "\n";

    if (!report.profiles.empty()) {
        os << "rank profiles\n";
        for (const auto& [name, prof] : report.profiles) {
            os << "    " << name << ": complement rank " << prof.subspace_rank << ";";
            for (const auto& cr : prof.cuts)
                os << " " << to_string(cr.cut) << " pair=" << cr.two_party_rank
                   << " lone=" << cr.single_party_rank << ";";
            os << "\n";
        }
        os << "\n";
    }

    if (!report.pt_reports.empty()) {
        os << "partial-transpose verdicts\n";
        for (const auto& [name, rep] : report.pt_reports) {
            os << "    " << name << ":";
            for (const auto& v : rep.cuts) {
                os << " " << to_string(v.cut) << "=" << (v.psd ? "PSD" : "NPT");
                if (v.pt_invariant) os << "(invariant)";
            }
            os << "\n";
        }
        os << "\n";
    }

    if (!report.timings.empty()) {
        os << "timings\n";
        for (const auto& t : report.timings) {
            std::ostringstream ms;
            ms.precision(1);
            ms << std::fixed << t.ms;
            os << "    " << t.name << ": " << ms.str() << " ms\n";
        }
        os << "\n";
    }

    os << "overall: " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string to_json_text(const Report& report) {
    ordered_json j;
    j["version"] = report.version;
    j["config"] = {
        {"d", report.config.d},
        {"scheme", report.config.scheme == CompletionScheme::standard ? "standard" : "permuted"},
        {"seed", report.config.seed},
        {"restarts", report.config.restarts},
        {"samples", report.config.samples},
        {"jobs", report.config.jobs},
    };

    j["certificates"] = ordered_json::array();
    for (const auto& cert : report.certificates) {
        ordered_json c;
        c["claim"] = cert.claim;
        c["method"] = to_string(cert.method);
        c["pass"] = cert.pass;
        if (cert.method == Method::randomized_numerical) {
            c["seed"] = cert.seed;
            c["n"] = cert.restarts;
        }
        ordered_json w = ordered_json::object();
        for (const auto& [key, value] : cert.witness) w[key] = value;
        c["witness"] = w;
        j["certificates"].push_back(c);
    }

    j["profiles"] = ordered_json::array();
    for (const auto& [name, prof] : report.profiles) {
        ordered_json p;
        p["set"] = name;
        p["complement_rank"] = prof.subspace_rank;
        p["cuts"] = ordered_json::array();
        for (const auto& cr : prof.cuts)
            p["cuts"].push_back({{"cut", to_string(cr.cut)},
                                 {"pair_rank", cr.two_party_rank},
                                 {"lone_rank", cr.single_party_rank}});
        j["profiles"].push_back(p);
    }

    j["pt"] = ordered_json::array();
    for (const auto& [name, rep] : report.pt_reports) {
        ordered_json p;
        p["set"] = name;
        p["cuts"] = ordered_json::array();
        for (const auto& v : rep.cuts) {
            ordered_json c;
            c["cut"] = to_string(v.cut);
            c["psd"] = v.psd;
            c["pt_invariant"] = v.pt_invariant;
            if (v.min_eig) {
                c["min_eig_lo"] = v.min_eig->lo.str();
                c["min_eig_hi"] = v.min_eig->hi.str();
            }
            p["cuts"].push_back(c);
        }
        j["pt"].push_back(p);
    }

    j["timings"] = ordered_json::array();
    for (const auto& t : report.timings)
        j["timings"].push_back({{"stage", t.name}, {"ms", t.ms}});

    j["all_pass"] = report.all_pass();
    return j.dump(2) + "\n";
}

Report run_full_report(const ReportConfig& config) {
    Report report;
    report.version = "1.0.0";
    report.config = config;

    SeesawConfig seesaw;
    seesaw.seed = config.seed;
    seesaw.restarts = config.restarts;
    seesaw.jobs = config.jobs;
    seesaw.validate();

    const auto stage = [&](const std::string& name, const auto& fn) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        report.timings.push_back({name, elapsed_ms(start)});
    };

    const int d = config.d;

    stage("counts", [&] { report.certificates.push_back(certify_counts(d, config.scheme)); });

    BasisSet upb = build_upb(d, config.scheme);
    BasisSet sym = build_symmetric_ubb(d, config.scheme);

    stage("rank-profiles", [&] {
        report.profiles.emplace_back("upb", rank_profile(complement_projector(upb)));
        report.profiles.emplace_back("ubb-sym", rank_profile(complement_projector(sym)));
    });

    stage("pt-verdicts", [&] {
        report.pt_reports.emplace_back(
            "upb", pt_report(complement_projector(upb).normalized(), d));
        report.pt_reports.emplace_back(
            "ubb-sym", pt_report(complement_projector(sym).normalized(), d));
        report.certificates.push_back(certify_ppt(upb));
        report.certificates.push_back(certify_distill(sym));
    });

    stage("facts", [&] {
        report.certificates.push_back(verify_fact_I(d));
        report.certificates.push_back(verify_fact_II(d));
        report.certificates.push_back(verify_fact_III(d));
        report.certificates.push_back(verify_fact_IV(d, config.samples, config.seed));
    });

    stage("rank-excess", [&] {
        const int g = expected_complement_dim(d, BasisKind::ubb_sym);
        for (int n = 1; n <= std::min(4, g - 1); ++n)
            report.certificates.push_back(
                verify_theorem_sampled(d, n, config.samples, config.seed));
        report.certificates.push_back(verify_theorem_sampled(d, g, config.samples, config.seed));
    });

    stage("no-product", [&] { report.certificates.push_back(certify_no_product(upb, seesaw)); });

    stage("no-bisep", [&] {
        for (Bipartition cut : all_cuts())
            report.certificates.push_back(certify_no_biseparable(sym, cut, seesaw));
    });

    return report;
}

}  // namespace ubb
