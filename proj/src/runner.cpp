#include "szlab/runner.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <filesystem>

#include "szlab/field.hpp"
#include "szlab/polycount.hpp"
#include "szlab/sl2.hpp"
#include "szlab/spectral.hpp"
#include "szlab/suzuki.hpp"
#include "szlab/walks.hpp"
#include "szlab/words.hpp"

namespace szlab {

namespace {

struct ExperimentOutput {
    Json report;
    std::string csv;
    std::vector<CriterionStatus> criteria;
};

CriterionStatus pass_fail(const std::string& name, bool ok, double value,
                          const std::string& detail) {
    return {name, ok ? "pass" : "fail", value, detail};
}

CriterionStatus report_only(const std::string& name, double value, const std::string& detail) {
    return {name, "report-only", value, detail};
}

// ------------------------------------------------------------ field-check --

ExperimentOutput run_field_check(const ExperimentConfig& cfg) {
    Field f(cfg.m);
    const uint64_t q = f.order();

    uint64_t twist_failures = 0, order_failures = 0;
    for (uint64_t x = 0; x < q; ++x) {
        FieldElement e = f.element(x);
        if (!(e.theta().theta() == e * e)) ++twist_failures;
        if (x != 0 && !e.pow(q - 1).is_one()) ++order_failures;
    }

    Rng rng = Rng::derive(cfg.seed, {stream::kPoly});
    uint64_t ring_failures = 0;
    for (uint64_t i = 0; i < cfg.samples; ++i) {
        FieldElement x = f.element(rng.below(q));
        FieldElement y = f.element(rng.below(q));
        FieldElement z = f.element(rng.below(q));
        if (!(x * y == y * x) || !((x * y) * z == x * (y * z)) ||
            !(x * (y + z) == x * y + x * z)) {
            ++ring_failures;
        }
    }

    ExperimentOutput out;
    out.report["q"] = q;
    out.report["modulus"] = f.modulus();
    out.report["twist_failures"] = twist_failures;
    out.report["multiplicative_order_failures"] = order_failures;
    out.report["ring_identity_failures"] = ring_failures;
    out.criteria.push_back(pass_fail("field-laws", twist_failures + order_failures == 0,
                                     double(twist_failures + order_failures),
                                     "exhaustive twist and order identities over GF(2^" +
                                         std::to_string(cfg.m) + ")"));
    out.criteria.push_back(
        pass_fail("field-ring", ring_failures == 0, double(ring_failures), "sampled ring laws"));
    return out;
}

// -------------------------------------------------------------- enumerate --

ExperimentOutput run_enumerate(const ExperimentConfig& cfg) {
    Field f(cfg.m);
    auto mode = cfg.m <= 3 ? GroupIndex::Mode::kFull : GroupIndex::Mode::kKeysOnly;
    GroupIndex idx = GroupIndex::enumerate(f, mode);
    u128 expected = group_order(cfg.m);
    bool count_ok = u128(idx.size()) == expected;

    std::string cache_name = "groupindex_q" + std::to_string(f.order()) + ".bin";
    idx.save(cfg.out_dir + "/" + cache_name);
    GroupIndex reloaded = GroupIndex::load(f, cfg.out_dir + "/" + cache_name);
    bool reload_ok = reloaded.size() == idx.size();

    ExperimentOutput out;
    out.report["q"] = f.order();
    out.report["count"] = uint64_t(idx.size());
    out.report["expected"] = u128_to_string(expected);
    out.report["borel_order"] = u128_to_string(borel_order(cfg.m));
    out.report["cache_file"] = cache_name;
    out.criteria.push_back(pass_fail("enumeration-count", count_ok, double(idx.size()),
                                     "|Sz(q)| = q^2 (q^2+1)(q-1), no collisions"));
    out.criteria.push_back(
        pass_fail("cache-roundtrip", reload_ok, double(reloaded.size()), "binary cache reload"));
    return out;
}

// ------------------------------------------------------------------ girth --

ExperimentOutput run_girth(const ExperimentConfig& cfg) {
    Field f(cfg.m);
    SuzukiOps ops{&f};
    CsvWriter csv({"pair", "seed", "pass", "relation_length", "relation"});
    int passes = 0;
    for (int p = 0; p < cfg.pairs; ++p) {
        Rng rng = Rng::derive(cfg.seed, {stream::kPair, uint64_t(p)});
        SuzukiElement a = sample_uniform(f, rng);
        SuzukiElement b = sample_uniform(f, rng);
        GirthResult r = girth_test(ops, a, b, cfg.ball_radius);
        if (r.pass) ++passes;
        csv.row({CsvWriter::cell(p), CsvWriter::cell(cfg.seed), r.pass ? "1" : "0",
                 CsvWriter::cell(uint64_t(r.relation.size())), r.relation.str()});
    }

    // the involution counterexample: a = T satisfies a^2 = id
    SuzukiElement t = SuzukiElement::t_element(f);
    Rng rng = Rng::derive(cfg.seed, {stream::kPair, 999});
    GirthResult t_result = girth_test(ops, t, sample_uniform(f, rng), cfg.ball_radius);
    bool t_fails_at_2 = !t_result.pass && t_result.relation == Word::parse("aa");

    ExperimentOutput out;
    out.report["q"] = f.order();
    out.report["max_len"] = cfg.ball_radius;
    out.report["pairs"] = cfg.pairs;
    out.report["passes"] = passes;
    out.report["pass_fraction"] = double(passes) / double(cfg.pairs);
    out.report["involution_shortest_relation"] = t_result.relation.str();
    out.csv = csv.str();
    out.criteria.push_back(report_only("girth-pass-fraction", double(passes) / double(cfg.pairs),
                                       "fraction of pairs with no relation of length <= " +
                                           std::to_string(cfg.ball_radius)));
    out.criteria.push_back(pass_fail("girth-involution", t_fails_at_2, 2,
                                     "a = T fails with the length-2 relation aa"));
    return out;
}

// ------------------------------------------------------------------- walk --

ExperimentOutput run_walk(const ExperimentConfig& cfg) {
    Field f(cfg.m);
    GroupIndex idx = GroupIndex::enumerate(f, GroupIndex::Mode::kFull);
    GeneratorPair pair = sample_generating_pair(f, cfg.seed);

    ExactWalk walk(idx, pair);
    walk.step(cfg.walk_steps);
    double mass = walk.total_mass();

    // total-variation distance to uniform
    double tv = 0;
    const double uniform = 1.0 / double(idx.size());
    for (uint64_t i = 0; i < idx.size(); ++i) tv += std::abs(walk.mass_at(i) - uniform);
    tv /= 2;

    // symmetry mu(g) = mu(g^-1)
    double max_asym = 0;
    for (uint64_t i = 0; i < idx.size(); ++i) {
        uint64_t j = *idx.index_of(idx.element_at(i).inversed().params());
        max_asym = std::max(max_asym, std::abs(walk.mass_at(i) - walk.mass_at(j)));
    }

    // sampled mode cross-check on the Borel target
    SubgroupTarget borel = SubgroupTarget::borel(f);
    double exact_borel = subgroup_mass(walk, borel);
    SampledWalk sampled = sample_walk(pair, cfg.walk_steps, cfg.trials, cfg.seed);
    MassEstimate est = subgroup_mass(sampled, borel);

    ExperimentOutput out;
    out.report["q"] = f.order();
    out.report["steps"] = cfg.walk_steps;
    out.report["pair_seed"] = pair.seed;
    out.report["total_mass"] = mass;
    out.report["tv_to_uniform"] = tv;
    out.report["max_inverse_asymmetry"] = max_asym;
    out.report["borel_mass_exact"] = exact_borel;
    out.report["borel_mass_sampled"] = est.value;
    out.report["borel_mass_half_width"] = est.half_width;

    CsvWriter csv({"q", "pair_seed", "target", "n", "mass", "half_width"});
    csv.row({CsvWriter::cell(f.order()), CsvWriter::cell(pair.seed), "borel",
             CsvWriter::cell(cfg.walk_steps), CsvWriter::cell(exact_borel), CsvWriter::cell(0.0)});
    csv.row({CsvWriter::cell(f.order()), CsvWriter::cell(pair.seed), "borel-sampled",
             CsvWriter::cell(cfg.walk_steps), CsvWriter::cell(est.value),
             CsvWriter::cell(est.half_width)});
    out.csv = csv.str();

    out.criteria.push_back(pass_fail("walk-mass-conserved", std::abs(mass - 1) < 1e-12,
                                     mass, "exact convolution conserves mass"));
    out.criteria.push_back(pass_fail("walk-symmetric", max_asym < 1e-12, max_asym,
                                     "mu(g) = mu(g^-1) for symmetric S"));
    out.criteria.push_back(pass_fail(
        "walk-sampled-agrees", std::abs(est.value - exact_borel) <=
                                   std::max(5 * est.half_width / 1.96, 1e-3),
        est.value - exact_borel, "sampled within 5 sigma of exact"));
    out.criteria.push_back(report_only("walk-tv-uniform", tv, "TV distance to uniform"));
    return out;
}

// ---------------------------------------------------------------- nonconc --

ExperimentOutput run_nonconc(const ExperimentConfig& cfg) {
    Field f(cfg.m);
    Field sub_field(cfg.m0);
    GroupIndex idx = GroupIndex::enumerate(f, GroupIndex::Mode::kFull);
    SubfieldSuzuki sub(f, sub_field);

    std::vector<int> schedule = cfg.n_schedule.empty() ? default_n_schedule(f) : cfg.n_schedule;
    const double borel_stationary = double(u128(borel_order(cfg.m))) / double(u128(group_order(cfg.m)));
    const double sub_stationary = double(u128(group_order(cfg.m0))) / double(u128(group_order(cfg.m)));
    const double threshold = std::pow(double(f.order()), -cfg.delta0);

    CsvWriter csv({"q", "pair_seed", "target", "n", "mass", "half_width"});
    int final_step = *std::max_element(schedule.begin(), schedule.end());
    int near_stationary = 0, below_threshold = 0, cs_holds = 0, cs_total = 0;
    for (int p = 0; p < cfg.pairs; ++p) {
        GeneratorPair pair = sample_generating_pair(f, cfg.seed + uint64_t(p));
        std::vector<SubgroupTarget> targets;
        targets.push_back(SubgroupTarget::borel(f));
        Rng conj_rng = Rng::derive(cfg.seed, {stream::kPair, uint64_t(p), 7});
        targets.push_back(SubgroupTarget::subfield(sub).conjugated(sample_uniform(f, conj_rng)));

        auto rows = nonconcentration_report(idx, pair, schedule, targets, cfg.conjugators,
                                            cfg.delta0, cfg.seed + uint64_t(p));
        double borel_final = 0, sub_final = 0;
        for (const NonconcRow& row : rows) {
            csv.row({CsvWriter::cell(f.order()), CsvWriter::cell(pair.seed), row.target_tag,
                     CsvWriter::cell(row.steps), CsvWriter::cell(row.mass),
                     CsvWriter::cell(row.half_width)});
            if (row.steps == final_step && row.conjugator_seed == 0) {
                if (row.target_tag == "borel") borel_final = row.mass;
                if (row.target_tag.rfind("sz", 0) == 0) sub_final = row.mass;
            }
        }
        if (std::abs(borel_final - borel_stationary) < 1e-2 &&
            std::abs(sub_final - sub_stationary) < 1e-2) {
            ++near_stationary;
        }
        if (borel_final < threshold && sub_final < threshold) ++below_threshold;

        // the convolution halving step, exact
        SubgroupTarget borel = SubgroupTarget::borel(f);
        for (int n : {5, 10, 20}) {
            for (int mm : {0, 5}) {
                auto c = cauchy_schwarz_check(idx, pair, borel, n, mm);
                ++cs_total;
                if (c.holds) ++cs_holds;
            }
        }
    }

    ExperimentOutput out;
    out.report["q"] = f.order();
    out.report["pairs"] = cfg.pairs;
    out.report["n_schedule"] = schedule;
    out.report["delta0"] = cfg.delta0;
    out.report["threshold"] = threshold;
    out.report["borel_stationary"] = borel_stationary;
    out.report["subfield_stationary"] = sub_stationary;
    out.report["pairs_near_stationary"] = near_stationary;
    out.report["pairs_below_threshold"] = below_threshold;
    out.report["cauchy_schwarz_holds"] = cs_holds;
    out.report["cauchy_schwarz_total"] = cs_total;
    out.csv = csv.str();

    out.criteria.push_back(pass_fail(
        "nonconc-stationary", near_stationary * 100 >= cfg.pairs * 95, double(near_stationary),
        "pairs with final masses within 1e-2 of |H|/|G|"));
    out.criteria.push_back(pass_fail("nonconc-threshold", below_threshold == cfg.pairs,
                                     double(below_threshold), "masses below q^-delta0"));
    out.criteria.push_back(pass_fail("cauchy-schwarz", cs_holds == cs_total, double(cs_holds),
                                     "mu^(n+m)(H) <= sqrt(mu^(2n)(H)) exactly"));
    return out;
}

// --------------------------------------------------------------- spectral --

ExperimentOutput run_spectral(const ExperimentConfig& cfg) {
    Field f(cfg.m);
    GroupIndex idx = GroupIndex::enumerate(f, GroupIndex::Mode::kFull);

    CsvWriter csv({"pair", "lambda2", "lambda_min", "residual2", "iters2", "converged"});
    int below = 0;
    double worst = -1;
    for (int p = 0; p < cfg.pairs; ++p) {
        GeneratorPair pair = sample_generating_pair(f, cfg.seed + uint64_t(p));
        AdjacencyList g = build_cayley(idx, pair);
        EigenEstimate e = second_eigenvalue(g, cfg.tol, cfg.max_iter, cfg.seed + uint64_t(p));
        if (e.lambda2 + e.residual2 < 1 - 1e-3) ++below;
        worst = std::max(worst, e.lambda2);
        csv.row({CsvWriter::cell(p), CsvWriter::cell(e.lambda2), CsvWriter::cell(e.lambda_min),
                 CsvWriter::cell(e.residual2), CsvWriter::cell(e.iters2),
                 e.converged2 ? "1" : "0"});
    }

    // multiplicity probe and sweep cut on the first pair, reported
    GeneratorPair pair0 = sample_generating_pair(f, cfg.seed);
    AdjacencyList g0 = build_cayley(idx, pair0);
    EigenEstimate e0 = second_eigenvalue(g0, cfg.tol, cfg.max_iter, cfg.seed);
    MultiplicityProbe probe =
        multiplicity_probe(g0, e0.lambda2, 1e-4, cfg.budget, cfg.seed, cfg.max_iter);

    ExperimentOutput out;
    out.report["q"] = f.order();
    out.report["pairs"] = cfg.pairs;
    out.report["below_one_minus_1e3"] = below;
    out.report["max_lambda2"] = worst;
    out.report["probe_eigenvalues"] = probe.eigenvalues;
    out.report["probe_cluster_count"] = probe.count;
    out.report["probe_budget_exhausted"] = probe.budget_exhausted;
    out.csv = csv.str();

    out.criteria.push_back(pass_fail("spectral-gap", below == cfg.pairs, double(below),
                                     "lambda2 + residual < 1 - 1e-3 for every pair"));
    out.criteria.push_back(report_only("spectral-multiplicity", double(probe.count),
                                       "eigenvalues found within 1e-4 of lambda2"));
    return out;
}

// -------------------------------------------------------------- polycount --

ExperimentOutput run_polycount(const ExperimentConfig& cfg) {
    Field f(cfg.m);
    CsvWriter csv({"q", "d", "k", "samples", "max_count", "bound", "pass"});
    bool twist_ok = true;
    uint64_t twist_max = 0;
    for (int d = 1; d <= cfg.max_degree; ++d) {
        TwistAudit audit = harder_twist_audit(f, d, cfg.trials, cfg.seed, true);
        twist_ok = twist_ok && audit.ok;
        twist_max = std::max(twist_max, audit.max_count);
        csv.row({CsvWriter::cell(f.order()), CsvWriter::cell(d), CsvWriter::cell(1),
                 CsvWriter::cell(audit.samples), CsvWriter::cell(audit.max_count),
                 CsvWriter::cell(audit.bound), audit.ok ? "1" : "0"});
    }

    uint64_t zero_prob_checked = 0, zero_prob_violations = 0, degenerate = 0;
    for (int k = 1; k <= 2; ++k) {
        if (std::pow(double(f.order()), k) > double(1 << 24)) continue;
        for (int d = 1; d <= 3; ++d) {
            Rng rng = Rng::derive(cfg.seed, {stream::kPoly, uint64_t(k), uint64_t(d)});
            uint64_t violations = 0;
            for (uint64_t s = 0; s < cfg.samples; ++s) {
                TwistedPoly p = TwistedPoly::random_dense(f, k, d, rng);
                ZeroProbability z = zero_probability_exact(p);
                if (z.identically_zero) {
                    ++degenerate;
                    continue;
                }
                ++zero_prob_checked;
                if (!z.within_bound) ++violations;
            }
            zero_prob_violations += violations;
            csv.row({CsvWriter::cell(f.order()), CsvWriter::cell(d), CsvWriter::cell(k),
                     CsvWriter::cell(cfg.samples), CsvWriter::cell(uint64_t(0)),
                     CsvWriter::cell(uint64_t(0)), violations == 0 ? "1" : "0"});
        }
    }

    ExperimentOutput out;
    out.report["q"] = f.order();
    out.report["twist_audit_max_count"] = twist_max;
    out.report["twist_audit_ok"] = twist_ok;
    out.report["zero_prob_checked"] = zero_prob_checked;
    out.report["zero_prob_violations"] = zero_prob_violations;
    out.report["identically_zero_excluded"] = degenerate;
    out.csv = csv.str();
    out.criteria.push_back(pass_fail("twist-2d2", twist_ok, double(twist_max),
                                     "twisted root counts within 2d^2"));
    out.criteria.push_back(pass_fail("schwartz-zippel", zero_prob_violations == 0,
                                     double(zero_prob_violations),
                                     "exact zero fractions within k d (theta+1)/q"));
    return out;
}

// ---------------------------------------------------------------- wordlaw --

ExperimentOutput run_wordlaw(const ExperimentConfig& cfg) {
    Field f(cfg.m);
    std::vector<Word> words = words_up_to_inverse(cfg.ball_radius);
    uint64_t found = 0;
    int max_attempts_used = 0;
    std::string hardest;
    for (const Word& w : words) {
        WitnessSearch res = word_law_witness(f, w, cfg.attempts, cfg.seed);
        if (res.found) {
            ++found;
            if (res.attempts_used > max_attempts_used) {
                max_attempts_used = res.attempts_used;
                hardest = w.str();
            }
        }
    }
    ExperimentOutput out;
    out.report["q"] = f.order();
    out.report["max_length"] = cfg.ball_radius;
    out.report["words"] = uint64_t(words.size());
    out.report["witnessed"] = found;
    out.report["max_attempts_used"] = max_attempts_used;
    out.report["hardest_word"] = hardest;
    out.criteria.push_back(pass_fail("wordlaw-witnesses", found == words.size(), double(found),
                                     "every word of length <= " +
                                         std::to_string(cfg.ball_radius) +
                                         " witnessed as a non-law"));
    return out;
}

// -------------------------------------------------------------- sl2-trace --

ExperimentOutput run_sl2_trace(const ExperimentConfig& cfg) {
    Field f(cfg.m);
    Word w = Word::parse("ABab");  // the commutator [a,b]

    ExperimentOutput out;
    out.report["q"] = f.order();
    out.report["word"] = w.str();

    if (cfg.m == 3) {
        std::vector<SL2Element> all = sl2_enumerate(f);
        out.report["enumerated"] = uint64_t(all.size());
        out.criteria.push_back(pass_fail("sl2-order", all.size() == 504, double(all.size()),
                                         "|SL2(8)| = q (q^2 - 1) by enumeration"));

        TraceConcentration exact = trace_concentration(f, w, 0, cfg.seed, true);
        TraceConcentration sampled = trace_concentration(f, w, cfg.trials, cfg.seed, false);
        bool bins_ok = true;
        for (uint64_t t = 0; t < f.order(); ++t) {
            double pe = double(exact.histogram[t]) / double(exact.samples);
            double ps = double(sampled.histogram[t]) / double(sampled.samples);
            double sigma = std::sqrt(std::max(pe * (1 - pe), 1e-12) / double(sampled.samples));
            if (std::abs(pe - ps) > 5 * sigma) bins_ok = false;
        }
        out.report["exact_max_mass"] = exact.max_mass;
        out.report["sampled_max_mass"] = sampled.max_mass;
        out.criteria.push_back(pass_fail("sl2-histogram", bins_ok, sampled.max_mass,
                                         "sampled trace histogram within 5 sigma per bin"));
    } else {
        TraceConcentration sampled = trace_concentration(f, w, cfg.trials, cfg.seed, false);
        out.report["sampled_max_mass"] = sampled.max_mass;
        out.report["bound_shape_q_inv"] = sampled.bound_shape;
        out.report["nonconstant_witnessed"] = sampled.nonconstant_witnessed;
        out.criteria.push_back(report_only("sl2-trace-mass", sampled.max_mass,
                                           "max point mass vs q^(-1+eps) shape"));
    }
    return out;
}

std::string timestamp_now() {
    char buf[32];
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

Json ExperimentConfig::to_json() const {
    Json j;
    j["schema"] = kSchemaVersion;
    j["experiment"] = experiment;
    j["m"] = m;
    j["m0"] = m0;
    j["seed"] = seed;
    j["pairs"] = pairs;
    j["trials"] = trials;
    j["samples"] = samples;
    j["word_length"] = word_length;
    j["word_samples"] = word_samples;
    j["ball_radius"] = ball_radius;
    j["walk_steps"] = walk_steps;
    j["n_schedule"] = n_schedule;
    j["delta0"] = delta0;
    j["tol"] = tol;
    j["max_iter"] = max_iter;
    j["budget"] = budget;
    j["max_degree"] = max_degree;
    j["attempts"] = attempts;
    j["conjugators"] = conjugators;
    return j;
}

std::string ExperimentConfig::hash() const { return hex64(fnv1a64(to_json().dump())); }

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names{"field-check", "enumerate", "girth",
                                                "walk",        "nonconc",   "spectral",
                                                "polycount",   "wordlaw",   "sl2-trace"};
    return names;
}

ReportManifest run_experiment(const ExperimentConfig& config) {
    std::filesystem::create_directories(config.out_dir);

    ExperimentOutput out;
    if (config.experiment == "field-check") {
        out = run_field_check(config);
    } else if (config.experiment == "enumerate") {
        out = run_enumerate(config);
    } else if (config.experiment == "girth") {
        out = run_girth(config);
    } else if (config.experiment == "walk") {
        out = run_walk(config);
    } else if (config.experiment == "nonconc") {
        out = run_nonconc(config);
    } else if (config.experiment == "spectral") {
        out = run_spectral(config);
    } else if (config.experiment == "polycount") {
        out = run_polycount(config);
    } else if (config.experiment == "wordlaw") {
        out = run_wordlaw(config);
    } else if (config.experiment == "sl2-trace") {
        out = run_sl2_trace(config);
    } else {
        throw std::invalid_argument("unknown experiment '" + config.experiment +
                                    "'; expected one of: field-check enumerate girth walk "
                                    "nonconc spectral polycount wordlaw sl2-trace");
    }

    ReportManifest manifest;
    manifest.experiment = config.experiment;
    manifest.config_hash = config.hash();
    manifest.run_id = manifest.config_hash;
    manifest.timestamp = timestamp_now();
    manifest.criteria = out.criteria;

    Json report;
    report["schema"] = kSchemaVersion;
    report["experiment"] = config.experiment;
    report["run_id"] = manifest.run_id;
    report["config"] = config.to_json();
    report["results"] = out.report;
    Json jc = Json::array();
    for (const CriterionStatus& c : out.criteria) {
        jc.push_back(
            {{"name", c.name}, {"status", c.status}, {"value", c.value}, {"detail", c.detail}});
    }
    report["criteria"] = jc;

    auto add_file = [&](const std::string& name, const std::string& content) {
        write_text_file(config.out_dir + "/" + name, content);
        manifest.files.push_back({name, content.size(), hex64(fnv1a64(content))});
    };
    if (config.write_json) {
        add_file(config.experiment + ".json", report.dump(2) + "\n");
    }
    if (config.write_csv && !out.csv.empty()) {
        add_file(config.experiment + ".csv", out.csv);
    }
    // the enumerate experiment writes its cache file directly
    if (config.experiment == "enumerate") {
        std::string name = "groupindex_q" + std::to_string(1ull << config.m) + ".bin";
        std::string content = read_text_file(config.out_dir + "/" + name);
        manifest.files.push_back({name, content.size(), hex64(fnv1a64(content))});
    }
    save_manifest(manifest, config.out_dir + "/" + config.experiment + ".manifest.json");
    return manifest;
}

Json summarize(const std::vector<std::string>& manifest_paths) {
    if (manifest_paths.empty()) throw std::invalid_argument("summarize: no manifests given");
    Json rows = Json::array();
    for (const std::string& path : manifest_paths) {
        ReportManifest m = load_manifest(path);
        std::string dir = std::filesystem::path(path).parent_path().string();
        if (dir.empty()) dir = ".";
        verify_manifest_files(m, dir);
        for (const CriterionStatus& c : m.criteria) {
            rows.push_back({{"experiment", m.experiment},
                            {"run_id", m.run_id},
                            {"criterion", c.name},
                            {"status", c.status},
                            {"value", c.value},
                            {"detail", c.detail}});
        }
    }
    Json out;
    out["schema"] = kSchemaVersion;
    out["rows"] = rows;
    return out;
}

}  // namespace szlab
