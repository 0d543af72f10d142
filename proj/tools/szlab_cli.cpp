// Experiment runner: every subcommand writes JSON/CSV reports plus a
// manifest into --out-dir and prints one status line per criterion.
//
// Exit codes: 0 = all asserted criteria pass, 1 = an assertion failed,
// 2 = usage or capacity error.

#include <CLI11.hpp>
#include <cstdio>

#include "szlab/common.hpp"
#include "szlab/runner.hpp"

using namespace szlab;

int main(int argc, char** argv) {
    CLI::App app{"szlab: expansion experiments on Suzuki groups Sz(q)"};
    app.require_subcommand(1);
    app.set_config("--config");

    ExperimentConfig cfg;
    std::vector<std::string> manifest_paths;
    std::string summary_out;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "master seed");
        sub->add_option("--out-dir", cfg.out_dir, "report directory");
        sub->add_option("-m,--field-degree", cfg.m, "field degree m, q = 2^m");
        sub->add_flag("!--no-json", cfg.write_json, "suppress the JSON report");
        sub->add_flag("!--no-csv", cfg.write_csv, "suppress the CSV report");
    };

    CLI::App* field_check = app.add_subcommand("field-check", "exhaustive field identities");
    add_common(field_check);
    field_check->add_option("--samples", cfg.samples, "sampled ring-law triples");

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "enumerate Sz(q) and cache it");
    add_common(enumerate_cmd);

    CLI::App* girth = app.add_subcommand("girth", "shortest relations of random pairs");
    add_common(girth);
    girth->add_option("--pairs", cfg.pairs, "number of seeded pairs");
    girth->add_option("-L,--max-length", cfg.ball_radius, "relation length cap");

    CLI::App* walk = app.add_subcommand("walk", "exact walk diagnostics at q = 8");
    add_common(walk);
    walk->add_option("-n,--steps", cfg.walk_steps, "walk length");
    walk->add_option("--trials", cfg.trials, "sampled-mode trials");

    CLI::App* nonconc = app.add_subcommand("nonconc", "subgroup non-concentration (exact)");
    add_common(nonconc);
    nonconc->add_option("--pairs", cfg.pairs, "number of generating pairs");
    nonconc->add_option("--m0", cfg.m0, "subfield degree for the Sz(q0) target");
    nonconc->add_option("--n-schedule", cfg.n_schedule, "explicit step schedule");
    nonconc->add_option("--delta0", cfg.delta0, "flag threshold exponent q^-delta0");
    nonconc->add_option("--conjugators", cfg.conjugators, "sampled conjugators per target");

    CLI::App* spectral = app.add_subcommand("spectral", "Cayley graph eigenvalue estimates");
    add_common(spectral);
    spectral->add_option("--pairs", cfg.pairs, "number of generating pairs");
    spectral->add_option("--tol", cfg.tol, "residual tolerance");
    spectral->add_option("--max-iter", cfg.max_iter, "iteration cap");
    spectral->add_option("--budget", cfg.budget, "multiplicity probe budget");

    CLI::App* polycount = app.add_subcommand("polycount", "twisted polynomial audits");
    add_common(polycount);
    polycount->add_option("--trials", cfg.trials, "bivariate samples per degree");
    polycount->add_option("--samples", cfg.samples, "dense polynomials per (k, d)");
    polycount->add_option("--max-degree", cfg.max_degree, "largest per-variable degree");

    CLI::App* wordlaw = app.add_subcommand("wordlaw", "witnesses that short words are not laws");
    add_common(wordlaw);
    wordlaw->add_option("-L,--max-length", cfg.ball_radius, "word length cap");
    wordlaw->add_option("--attempts", cfg.attempts, "witness attempts per word");

    CLI::App* sl2 = app.add_subcommand("sl2-trace", "SL2(q) trace concentration");
    add_common(sl2);
    sl2->add_option("--trials", cfg.trials, "sampled pairs");

    CLI::App* summarize_cmd = app.add_subcommand("summarize", "merge stored manifests");
    summarize_cmd->add_option("manifests", manifest_paths, "manifest files")->required();
    summarize_cmd->add_option("--out", summary_out, "write the summary JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (summarize_cmd->parsed()) {
            Json summary = summarize(manifest_paths);
            std::string text = summary.dump(2) + "\n";
            if (summary_out.empty()) {
                std::fputs(text.c_str(), stdout);
            } else {
                write_text_file(summary_out, text);
            }
            return 0;
        }

        for (CLI::App* sub : app.get_subcommands()) cfg.experiment = sub->get_name();
        ReportManifest manifest = run_experiment(cfg);
        for (const CriterionStatus& c : manifest.criteria) {
            std::printf("%-28s %-12s %.6g  %s\n", c.name.c_str(), c.status.c_str(), c.value,
                        c.detail.c_str());
        }
        std::printf("reports: %s/%s.manifest.json\n", cfg.out_dir.c_str(),
                    cfg.experiment.c_str());
        return manifest.all_passed() ? 0 : 1;
    } catch (const capacity_error& e) {
        std::fprintf(stderr, "capacity error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
