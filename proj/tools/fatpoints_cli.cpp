// fatpoints: command-line front end.
//
//   fatpoints gen {cd|cdr|random} [--d N] [--r N] [--s N] --out FILE
//   fatpoints hf FILE [--multiplicity M]
//   fatpoints verify {thm1|first-half|s11|eq1|ah|cdr-generic|all} [...]
//   fatpoints diag FILE [--max-degree 1|2]
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or input error,
// 3 primes disagree.

#include <fatpoints/fatpoints.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fp = fatpoints;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_artifact = 3;

struct CliConfig {
    std::vector<std::uint64_t> primes;
    std::uint64_t seed = 0;
    std::string format = "table";
    std::size_t trials = 0;  // 0: statement default
    std::string output_path;
    bool timing = false;
};

std::vector<std::uint64_t> parse_prime_list(const std::string& text) {
    std::vector<std::uint64_t> primes;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            primes.push_back(std::stoull(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw fp::Error(fp::ErrorKind::invalid_input, "bad prime '" + item + "'");
        }
    }
    return primes;
}

/// --primes beats FATPOINTS_PRIMES beats the built-in defaults.
std::vector<std::uint64_t> resolve_primes(const std::string& flag) {
    std::vector<std::uint64_t> primes;
    if (!flag.empty()) {
        primes = parse_prime_list(flag);
    } else if (const char* env = std::getenv("FATPOINTS_PRIMES"); env != nullptr && *env != '\0') {
        primes = parse_prime_list(env);
    } else {
        primes = fp::default_primes();
    }
    fp::validate_working_primes(primes);
    return primes;
}

fp::OutputFormat parse_format(const std::string& f) {
    if (f == "table") return fp::OutputFormat::table;
    if (f == "csv") return fp::OutputFormat::csv;
    if (f == "json") return fp::OutputFormat::json;
    throw fp::Error(fp::ErrorKind::invalid_input, "unknown format '" + f + "'");
}

void emit(const CliConfig& cfg, const std::string& text) {
    if (cfg.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw fp::Error(fp::ErrorKind::invalid_input, "cannot write " + cfg.output_path);
    out << text;
}

std::vector<std::uint64_t> seed_range(std::uint64_t first, std::size_t count) {
    std::vector<std::uint64_t> seeds(count);
    for (std::size_t i = 0; i < count; ++i) seeds[i] = first + i;
    return seeds;
}

// ---------------------------------------------------------------------------

struct GenArgs {
    std::string kind;
    int d = 0;
    int r = -1;
    int s = 0;
    int multiplicity = 1;
};

int cmd_gen(const CliConfig& cfg, const GenArgs& a) {
    if (cfg.output_path.empty()) throw fp::Error(fp::ErrorKind::invalid_input, "gen needs --out FILE");
    const auto field = fp::FieldSpec::prime_field(cfg.primes.front());
    std::optional<fp::Configuration> x;
    if (a.kind == "cd") {
        if (a.d < 2) throw fp::Error(fp::ErrorKind::invalid_input, "gen cd needs --d >= 2");
        x = fp::build_c_d(a.d, field, cfg.seed);
    } else if (a.kind == "cdr") {
        if (a.d < 1 || a.r < 0) throw fp::Error(fp::ErrorKind::invalid_input, "gen cdr needs --d and --r");
        x = fp::build_c_dr(a.d, a.r, field, cfg.seed);
    } else if (a.kind == "random") {
        if (a.s < 1) throw fp::Error(fp::ErrorKind::invalid_input, "gen random needs --s >= 1");
        x = fp::sample_random_points(a.s, field, cfg.seed);
    } else {
        throw fp::Error(fp::ErrorKind::invalid_input, "unknown configuration kind '" + a.kind + "'");
    }
    if (a.multiplicity < 1) throw fp::Error(fp::ErrorKind::invalid_input, "--multiplicity must be positive");
    fp::write_scheme_file(cfg.output_path, fp::with_multiplicity(*x, a.multiplicity));
    std::cout << fp::provenance_line({field.prime()}, cfg.seed) << "\n";
    std::cout << "wrote " << x->size() << " points (" << fp::provenance_to_json(x->provenance()).dump() << ") to " << cfg.output_path << "\n";
    return exit_pass;
}

// ---------------------------------------------------------------------------

/// Rebuilds a generated configuration over another prime, or nullopt when the
/// file is not reproducible from its provenance.
std::optional<fp::Configuration> rebuild(const fp::Configuration& x, const fp::FieldSpec& field) {
    if (!x.seed()) return std::nullopt;
    const auto& prov = x.provenance();
    switch (prov.kind) {
        case fp::ProvenanceKind::c_d: return fp::build_c_d(prov.d, field, *x.seed());
        case fp::ProvenanceKind::c_dr: return fp::build_c_dr(prov.d, prov.r, field, *x.seed());
        case fp::ProvenanceKind::random: return fp::sample_random_points(prov.count, field, *x.seed());
        case fp::ProvenanceKind::file: return std::nullopt;
    }
    return std::nullopt;
}

int cmd_hf(const CliConfig& cfg, const std::string& input, int multiplicity_override) {
    auto z = fp::read_scheme_file(input);
    if (multiplicity_override > 0) z = fp::with_multiplicity(z.support(), multiplicity_override);
    const auto mult = z.multiplicities();
    const auto format = parse_format(cfg.format);

    std::function<fp::FatPointScheme(const fp::FieldSpec&)> build;
    std::vector<std::uint64_t> primes = cfg.primes;
    std::optional<fp::HilbertFunction> exact;
    if (!z.field().is_prime()) {
        exact = fp::hilbert_function(z);
        build = [&](const fp::FieldSpec& f) { return fp::reduce_mod(z, f); };
    } else {
        std::optional<fp::Configuration> same;
        try {
            same = rebuild(z.support(), z.field());
        } catch (const fp::Error&) {
            same.reset();
        }
        if (same && same->points() == z.support().points()) {
            build = [&](const fp::FieldSpec& f) { return fp::FatPointScheme(*rebuild(z.support(), f), mult); };
        } else {
            primes = {z.field().prime()};
            build = [&](const fp::FieldSpec&) { return z; };
        }
    }

    std::string header = fp::provenance_line(primes, z.support().seed().value_or(cfg.seed)) + "\n";
    try {
        auto certified = fp::hilbert_function_multi(build, primes);
        if (exact && !(*exact == certified.hf)) {
            fp::FieldArtifactError::PerPrime rows{{0, exact->values()}};
            throw fp::FieldArtifactError("exact rational Hilbert function differs from the modular ones", rows);
        }
        const std::string body = fp::render_hilbert(certified.hf, certified.primes_used, z.field(), format);
        emit(cfg, format == fp::OutputFormat::table ? header + body : body);
        return exit_pass;
    } catch (const fp::FieldArtifactError& e) {
        std::cerr << header << e.what() << "\n";
        for (const auto& [p, values] : e.per_prime()) {
            std::cerr << "  " << (p == 0 ? std::string("Q") : std::to_string(p)) << ": " << fp::detail::join(values) << "\n";
        }
        return exit_artifact;
    }
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string statement;
    int d = 0;
    std::size_t seeds = 0;
    int dmax = 12;
    int s = 11;
    std::vector<int> r_values;
    bool adversarial = true;
    std::size_t adversarial_trials = 50;
};

std::vector<fp::Plan> plans_for(const CliConfig& cfg, const VerifyArgs& a) {
    const auto trials = [&](std::size_t fallback) { return cfg.trials ? cfg.trials : fallback; };
    const auto seeds = [&](std::size_t fallback) { return seed_range(cfg.seed, a.seeds ? a.seeds : fallback); };
    const auto all_r = [](int d) {
        std::vector<int> r(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i <= d; ++i) r[static_cast<std::size_t>(i)] = i;
        return r;
    };

    std::vector<fp::Plan> plans;
    const std::string& st = a.statement;
    if (st == "thm1") {
        plans.push_back(fp::plan_theorem_1_1(a.d ? a.d : 5, seeds(10)));
    } else if (st == "first-half") {
        plans.push_back(fp::plan_first_half(a.d ? a.d : 5, trials(200), cfg.seed));
    } else if (st == "s11") {
        plans.push_back(fp::plan_s11_minimality(trials(1000), cfg.seed, a.adversarial, a.adversarial_trials));
    } else if (st == "eq1") {
        plans.push_back(fp::plan_eq1_identity(a.dmax));
    } else if (st == "ah") {
        plans.push_back(fp::plan_ah_achieved(a.s, trials(fp::ah_exceptional_degree(a.s) ? 100 : 500), cfg.seed));
    } else if (st == "cdr-generic") {
        const int d = a.d ? a.d : 5;
        plans.push_back(fp::plan_cdr_generic(d, a.r_values.empty() ? all_r(d) : a.r_values, seeds(5)));
    } else if (st == "all") {
        for (int d = 3; d <= 7; ++d) plans.push_back(fp::plan_theorem_1_1(d, seed_range(cfg.seed, 10)));
        for (int d = 2; d <= 6; ++d) plans.push_back(fp::plan_cdr_generic(d, all_r(d), seed_range(cfg.seed, 5)));
        for (int d = 3; d <= 6; ++d) plans.push_back(fp::plan_first_half(d, trials(200), cfg.seed));
        plans.push_back(fp::plan_s11_minimality(trials(1000), cfg.seed, true, a.adversarial_trials));
        plans.push_back(fp::plan_eq1_identity(12));
        plans.push_back(fp::plan_ah_achieved(11, trials(500), cfg.seed));
        for (int s : {2, 3, 5}) plans.push_back(fp::plan_ah_achieved(s, trials(100), cfg.seed));
    } else {
        throw fp::Error(fp::ErrorKind::invalid_input, "unknown statement '" + st + "'");
    }
    return plans;
}

int cmd_verify(const CliConfig& cfg, const VerifyArgs& a) {
    const auto format = parse_format(cfg.format);
    const auto plans = plans_for(cfg, a);
    const fp::RenderOptions ropts{format, cfg.timing};

    bool all_pass = true;
    std::string text;
    fp::Json reports = fp::Json::array();
    if (format == fp::OutputFormat::table) text += fp::provenance_line(cfg.primes, cfg.seed) + "\n";
    if (format == fp::OutputFormat::csv) text += "# " + fp::provenance_line(cfg.primes, cfg.seed) + "\n";
    bool csv_header = false;
    for (const auto& plan : plans) {
        const auto report = fp::execute(plan, {cfg.primes, 0});
        all_pass = all_pass && report.passed();
        if (format == fp::OutputFormat::json) {
            reports.push_back(fp::report_to_json(report, cfg.timing));
        } else if (format == fp::OutputFormat::csv) {
            auto body = fp::render_report(report, ropts);
            if (csv_header) body.erase(0, body.find('\n') + 1);
            csv_header = true;
            text += body;
        } else {
            text += fp::render_report(report, ropts);
        }
    }
    if (format == fp::OutputFormat::json) {
        fp::Json j{{"tool_version", fp::version}, {"primes", cfg.primes}, {"seed", cfg.seed}, {"status", all_pass ? "PASS" : "FAIL"},
                   {"caveat", fp::certificate_caveat}, {"reports", reports}};
        text = j.dump(2) + "\n";
    } else if (format == fp::OutputFormat::table) {
        text += std::string(all_pass ? "ALL PASS" : "SOME FAILED") + "\nnote: " + fp::certificate_caveat + "\n";
    }
    emit(cfg, text);
    return all_pass ? exit_pass : exit_fail;
}

// ---------------------------------------------------------------------------

int cmd_diag(const CliConfig& cfg, const std::string& input, int max_degree) {
    const auto z = fp::read_scheme_file(input);
    const auto& x = z.support();
    if (max_degree != 1 && max_degree != 2) throw fp::Error(fp::ErrorKind::invalid_input, "--max-degree must be 1 or 2");
    const auto format = parse_format(cfg.format);

    std::vector<fp::CurveIncidence> results;
    for (int e = 1; e <= max_degree; ++e) results.push_back(fp::max_on_curve(x, e));

    std::ostringstream out;
    const std::vector<std::uint64_t> primes = x.field().is_prime() ? std::vector<std::uint64_t>{x.field().prime()} : std::vector<std::uint64_t>{};
    if (format == fp::OutputFormat::json) {
        fp::Json j{{"tool_version", fp::version}, {"primes", primes}, {"seed", x.seed().value_or(cfg.seed)}, {"points", x.size()}};
        fp::Json curves = fp::Json::array();
        for (int e = 1; e <= max_degree; ++e) {
            const auto& r = results[static_cast<std::size_t>(e - 1)];
            fp::Json w = fp::Json::array();
            for (auto k : r.witness) w.push_back(x[k].coords());
            curves.push_back({{"degree", e}, {"max_points", r.count}, {"witness_indices", r.witness}, {"witness_points", w}});
        }
        j["curves"] = curves;
        out << j.dump(2) << "\n";
    } else if (format == fp::OutputFormat::csv) {
        out << "degree,max_points,witness_indices\n";
        for (int e = 1; e <= max_degree; ++e) {
            const auto& r = results[static_cast<std::size_t>(e - 1)];
            std::vector<std::int64_t> idx(r.witness.begin(), r.witness.end());
            out << e << ',' << r.count << ',' << fp::detail::join(idx) << "\n";
        }
    } else {
        out << fp::provenance_line(primes, x.seed().value_or(cfg.seed)) << "\n";
        out << x.size() << " points over " << x.field().describe() << "\n";
        for (int e = 1; e <= max_degree; ++e) {
            const auto& r = results[static_cast<std::size_t>(e - 1)];
            out << (e == 1 ? "line" : "conic") << ": " << r.count << " points";
            for (auto k : r.witness) out << ' ' << k << '=' << x[k].to_string();
            out << "\n";
        }
    }
    emit(cfg, out.str());
    return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert functions of fat points in the projective plane"};
    app.set_version_flag("--version", std::string("fatpoints ") + fp::version);
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    std::string primes_flag;
    app.add_option("--primes", primes_flag, "Comma-separated working primes (overrides FATPOINTS_PRIMES)");
    app.add_option("--seed", cfg.seed, "Base seed");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--trials", cfg.trials, "Trial count (statement default when omitted)");
    app.add_option("--out", cfg.output_path, "Output file");
    app.add_flag("--timing", cfg.timing, "Include wall-clock runtimes in reports");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a configuration file");
    gen_cmd->add_option("kind", gen.kind, "cd | cdr | random")->required()->check(CLI::IsMember({"cd", "cdr", "random"}));
    gen_cmd->add_option("--d", gen.d, "Number of lines (cd) or d of C_{d,r}");
    gen_cmd->add_option("--r", gen.r, "Points kept on the last line (cdr)");
    gen_cmd->add_option("--s", gen.s, "Number of random points");
    gen_cmd->add_option("--multiplicity", gen.multiplicity, "Multiplicity recorded for every point");

    std::string input;
    int multiplicity = 0;
    auto* hf_cmd = app.add_subcommand("hf", "Hilbert function of a configuration file");
    hf_cmd->add_option("input", input, "Configuration file")->required();
    hf_cmd->add_option("--multiplicity", multiplicity, "Override every multiplicity");

    VerifyArgs ver;
    auto* verify_cmd = app.add_subcommand("verify", "Run statement checks");
    verify_cmd->add_option("statement", ver.statement, "thm1 | first-half | s11 | eq1 | ah | cdr-generic | all")->required();
    verify_cmd->add_option("--d", ver.d, "d parameter");
    verify_cmd->add_option("--seeds", ver.seeds, "Number of seeds (thm1, cdr-generic)");
    verify_cmd->add_option("--dmax", ver.dmax, "Largest d (eq1)");
    verify_cmd->add_option("--s", ver.s, "Number of points (ah)");
    verify_cmd->add_option("--r", ver.r_values, "r values (cdr-generic)");
    verify_cmd->add_option("--adversarial", ver.adversarial, "Include adversarial families (s11)");
    verify_cmd->add_option("--adversarial-trials", ver.adversarial_trials, "Trials per adversarial family (s11)");

    int max_degree = 2;
    auto* diag_cmd = app.add_subcommand("diag", "Incidence diagnostics");
    diag_cmd->add_option("input", input, "Configuration file")->required();
    diag_cmd->add_option("--max-degree", max_degree, "1 (lines) or 2 (lines and conics)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        cfg.primes = resolve_primes(primes_flag);
        if (*gen_cmd) return cmd_gen(cfg, gen);
        if (*hf_cmd) return cmd_hf(cfg, input, multiplicity);
        if (*verify_cmd) return cmd_verify(cfg, ver);
        if (*diag_cmd) return cmd_diag(cfg, input, max_degree);
    } catch (const fp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == fp::ErrorKind::field_artifact ? exit_artifact : exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
