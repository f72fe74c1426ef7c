#include "ubb/cli.hpp"

#include "ubb/block_cube.hpp"
#include "ubb/io.hpp"
#include "ubb/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

namespace ubb {

namespace {

const std::map<std::string, BasisKind> kKindNames = {
    {"topb", BasisKind::topb},
    {"upb", BasisKind::upb},
    {"ubb-sym", BasisKind::ubb_sym},
    {"ubb-asym", BasisKind::ubb_asym},
};

const std::map<std::string, CompletionScheme> kSchemeNames = {
    {"standard", CompletionScheme::standard},
    {"permuted", CompletionScheme::permuted},
};

struct CommonOpts {
    int d = 3;
    std::string set_name;
    std::string cut_name;
    std::string scheme_name = "standard";

    CompletionScheme scheme() const { return kSchemeNames.at(scheme_name); }

    std::optional<Bipartition> cut() const {
        if (cut_name.empty()) return std::nullopt;
        return parse_bipartition(cut_name);  // validated by CLI11 already
    }

    BasisKind kind(const std::string& fallback) const {
        return kKindNames.at(set_name.empty() ? fallback : set_name);
    }

    // --cut parameterizes the construction only for the asymmetric set; for
    // every other kind it selects the cut a claim or export refers to.
    BasisSet build(const std::string& fallback) const {
        const BasisKind k = kind(fallback);
        return build_basis(d, k, k == BasisKind::ubb_asym ? cut() : std::nullopt, scheme());
    }
};

// The subcommands share one CommonOpts, so no option here may carry a
// per-command default_val: CLI11 seeds the bound variable when the option is
// created, and the last subcommand registered would win. The --set fallback
// is resolved at use time instead (ubb-sym, except upb for the product-set
// claims).
void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--d", opts.d, "cube edge length")
        ->default_val(3)
        ->check(CLI::Range(3, 20));
    cmd->add_option("--set", opts.set_name, "state set kind (command-specific default)")
        ->check(CLI::IsMember({"topb", "upb", "ubb-sym", "ubb-asym"}));
    cmd->add_option("--cut", opts.cut_name, "bipartition")
        ->check(CLI::IsMember({"A|BC", "AC|B", "AB|C"}));
    cmd->add_option("--scheme", opts.scheme_name, "family completion scheme")
        ->check(CLI::IsMember({"standard", "permuted"}))
        ->default_val("standard");
}

StateSetData to_stateset(const BasisSet& basis) {
    return StateSetData{basis.d, basis.states};
}

int run_construct(const CommonOpts& opts, const std::string& out, bool diagram) {
    const BasisSet basis = opts.build("ubb-sym");
    std::cout << to_string(basis.kind) << " d=" << basis.d;
    if (basis.cut) std::cout << " cut=" << to_string(*basis.cut);
    std::cout << ": " << basis.states.size() << " states, complement dim "
              << basis.complement_dim() << "\n";
    if (diagram) std::cout << occupancy_diagram(build_topb(basis.d, opts.scheme())) << "\n";
    if (!out.empty()) {
        write_stateset_file(out, to_stateset(basis));
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

int run_verify(const CommonOpts& opts) {
    std::vector<BasisSet> sets;
    if (opts.kind("ubb-sym") == BasisKind::ubb_asym && !opts.cut()) {
        for (Bipartition cut : all_cuts())
            sets.push_back(build_basis(opts.d, BasisKind::ubb_asym, cut, opts.scheme()));
    } else {
        sets.push_back(opts.build("ubb-sym"));
    }

    bool ok = true;
    for (const BasisSet& basis : sets) {
        std::string name = to_string(basis.kind);
        if (basis.cut) name += " " + to_string(*basis.cut);

        bool orthogonal = true;
        for (std::size_t i = 0; i < basis.states.size() && orthogonal; ++i)
            for (std::size_t j = i + 1; j < basis.states.size(); ++j)
                if (!dot(basis.states[i].coeffs, basis.states[j].coeffs).is_zero()) {
                    orthogonal = false;
                    break;
                }

        std::vector<RationalVector> rows;
        rows.reserve(basis.states.size());
        for (const auto& s : basis.states) rows.push_back(s.coeffs);
        const int comp = opts.d * opts.d * opts.d - rank(RationalMatrix::from_rows(rows));

        const bool counts_ok =
            static_cast<int>(basis.states.size()) == expected_count(opts.d, basis.kind) &&
            comp == expected_complement_dim(opts.d, basis.kind);

        std::cout << "[" << (orthogonal && counts_ok ? "ok" : "FAIL") << "] " << name << ": "
                  << basis.states.size() << " pairwise-orthogonal states, complement dim " << comp
                  << "\n";
        if (!orthogonal || !counts_ok) ok = false;
    }
    return ok ? 0 : 1;
}

int run_certify(const CommonOpts& opts, const std::string& claim, std::uint64_t seed,
                int restarts, int jobs, int samples, int n_override) {
    SeesawConfig seesaw;
    seesaw.seed = seed;
    seesaw.restarts = restarts;
    seesaw.jobs = jobs;
    seesaw.validate();

    std::vector<Certificate> certs;
    if (claim == "counts") {
        certs.push_back(certify_counts(opts.d, opts.scheme()));
    } else if (claim == "ppt") {
        const BasisSet basis = opts.build("upb");
        certs.push_back(certify_ppt(basis));
    } else if (claim == "distill") {
        const BasisSet basis = opts.build("ubb-sym");
        certs.push_back(certify_distill(basis));
    } else if (claim == "no-product") {
        const BasisSet basis = opts.build("upb");
        certs.push_back(certify_no_product(basis, seesaw));
    } else if (claim == "no-bisep") {
        const BasisSet basis = opts.build("ubb-sym");
        if (opts.cut()) {
            certs.push_back(certify_no_biseparable(basis, *opts.cut(), seesaw));
        } else {
            for (Bipartition cut : all_cuts())
                certs.push_back(certify_no_biseparable(basis, cut, seesaw));
        }
    } else if (claim == "facts") {
        certs.push_back(verify_fact_I(opts.d));
        certs.push_back(verify_fact_II(opts.d));
        certs.push_back(verify_fact_III(opts.d));
        certs.push_back(verify_fact_IV(opts.d, samples, seed));
    } else if (claim == "rank-excess") {
        const int g = expected_complement_dim(opts.d, BasisKind::ubb_sym);
        if (n_override > 0) {
            certs.push_back(verify_theorem_sampled(opts.d, n_override, samples, seed));
        } else {
            for (int n = 1; n <= std::min(4, g - 1); ++n)
                certs.push_back(verify_theorem_sampled(opts.d, n, samples, seed));
            certs.push_back(verify_theorem_sampled(opts.d, g, samples, seed));
        }
    } else {
        std::cerr << "error: unknown claim '" << claim << "'\n";
        return 2;
    }

    bool ok = true;
    for (const auto& cert : certs) {
        std::cout << certificate_text(cert);
        if (!cert.pass) ok = false;
    }
    return ok ? 0 : 1;
}

int run_export(const CommonOpts& opts, const std::string& what, const std::string& out) {
    const BasisSet basis = opts.build("ubb-sym");
    if (what == "states") {
        write_stateset_file(out, to_stateset(basis));
    } else {
        const SubspaceProjector p = complement_projector(basis);
        if (what == "projector") {
            write_rmat_file(out, p.mat);
        } else {  // marginal
            if (!opts.cut()) {
                std::cerr << "error: --what marginal requires --cut\n";
                return 2;
            }
            if (p.rank == 0) {
                std::cerr << "error: complement is trivial, no marginal to export\n";
                return 1;
            }
            const RationalMatrix rho = p.normalized();
            write_rmat_file(out, partial_trace(rho, opts.d, single_party(*opts.cut())));
        }
    }
    std::cout << "wrote " << out << "\n";
    return 0;
}

int run_report(const ReportConfig& config, const std::string& format, const std::string& out) {
    const Report report = run_full_report(config);
    const std::string text = (format == "json") ? to_json_text(report) : to_text(report);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(out);
        if (!os) {
            std::cerr << "error: cannot open for writing: " << out << "\n";
            return 2;
        }
        os << text;
        std::cout << "wrote " << out << "\n";
    }
    return report.all_pass() ? 0 : 1;
}

int dispatch(std::vector<std::string> args) {
    CLI::App app{"exact product-basis constructions and entanglement certificates on the "
                 "tripartite block cube"};
    app.set_version_flag("--version", "ubbcube 1.0.0");
    app.require_subcommand(0, 1);

    CommonOpts opts;
    std::string out;
    std::string claim;
    std::string what = "states";
    std::string format = "text";
    std::uint64_t seed = 20240901;
    int restarts = 200;
    int jobs = 1;
    int samples = 50;
    int n_override = 0;
    bool diagram = false;

    CLI::App* construct = app.add_subcommand("construct", "build a state set and print a summary");
    add_common(construct, opts);
    construct->add_option("--out", out, "write the set in stateset format")
        ->envname("UBBCUBE_OUT");
    construct->add_flag("--diagram", diagram, "print the face occupancy diagram");

    CLI::App* verify = app.add_subcommand(
        "verify", "rebuild a set and check orthogonality, count, and complement dimension");
    add_common(verify, opts);

    CLI::App* certify = app.add_subcommand("certify", "run one certified claim");
    add_common(certify, opts);
    certify->add_option("--claim", claim, "claim id (see 'claims')")
        ->required()
        ->check(CLI::IsMember([] {
            std::vector<std::string> ids;
            for (const auto& c : claim_registry()) ids.push_back(c.id);
            return ids;
        }()));
    certify->add_option("--seed", seed, "root seed for randomized checks")->default_val(20240901);
    certify->add_option("--restarts", restarts, "seesaw restarts")->default_val(200);
    certify->add_option("--jobs", jobs, "worker threads for restarts")
        ->default_val(1)
        ->check(CLI::Range(1, 64));
    certify->add_option("--samples", samples, "samples for randomized exact checks")
        ->default_val(50)
        ->check(CLI::Range(1, 100000));
    certify->add_option("--n", n_override, "projector rank for rank-excess (0 = sweep)")
        ->default_val(0);

    CLI::App* exp = app.add_subcommand("export", "write states or exact matrices to a file");
    add_common(exp, opts);
    exp->add_option("--what", what, "states | projector | marginal")
        ->check(CLI::IsMember({"states", "projector", "marginal"}))
        ->default_val("states");
    exp->add_option("--out", out, "output path")->envname("UBBCUBE_OUT")->required();

    CLI::App* report = app.add_subcommand("report", "full certification run");
    report->add_option("--d", opts.d, "cube edge length")
        ->default_val(3)
        ->check(CLI::Range(3, 20));
    report->add_option("--scheme", opts.scheme_name, "family completion scheme")
        ->check(CLI::IsMember({"standard", "permuted"}))
        ->default_val("standard");
    report->add_option("--seed", seed, "root seed")->default_val(20240901);
    report->add_option("--restarts", restarts, "seesaw restarts")->default_val(200);
    report->add_option("--jobs", jobs, "worker threads")->default_val(1)->check(CLI::Range(1, 64));
    report->add_option("--samples", samples, "samples for randomized exact checks")
        ->default_val(50)
        ->check(CLI::Range(1, 100000));
    report->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    report->add_option("--out", out, "output path (default stdout)")->envname("UBBCUBE_OUT");

    CLI::App* claims = app.add_subcommand("claims", "list certifiable claims");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(construct)) return run_construct(opts, out, diagram);
        if (app.got_subcommand(verify)) return run_verify(opts);
        if (app.got_subcommand(certify))
            return run_certify(opts, claim, seed, restarts, jobs, samples, n_override);
        if (app.got_subcommand(exp)) return run_export(opts, what, out);
        if (app.got_subcommand(report)) {
            ReportConfig config;
            config.d = opts.d;
            config.scheme = kSchemeNames.at(opts.scheme_name);
            config.seed = seed;
            config.restarts = restarts;
            config.jobs = jobs;
            config.samples = samples;
            return run_report(config, format, out);
        }
        if (app.got_subcommand(claims)) {
            for (const auto& c : claim_registry())
                std::cout << c.id << ": " << c.description << "\n";
            return 0;
        }
        std::cout << app.help();
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return dispatch(std::move(args));
}

int cli_main(const std::vector<std::string>& args) { return dispatch(args); }

}  // namespace ubb
