#include "lookahead/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "lookahead/adversaries.hpp"
#include "lookahead/harness.hpp"

namespace lookahead::cli {

namespace {

constexpr const char* kVersion = "lookahead 1.0.0";

// Options shared by several subcommands. Each subcommand binds the subset it
// understands.
struct Options {
    std::string alg;
    std::optional<int> m;
    std::size_t k = 1;
    std::string instance_path;
    std::string family;
    std::string values;     // inline instance
    std::string value_set;  // enumeration / random draw
    std::size_t nmax = 0;
    std::string bound;
    std::string csv_path;
    std::string out_path;
    bool trace = false;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    bool random = false;
    std::string game;
    std::size_t n = 0;
    std::string x = "1";
    bool verbose = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LoadedInstance {
    Instance instance;
    std::string descriptor;
};

LoadedInstance load_instance(const Options& opt) {
    const int sources = !opt.instance_path.empty() + !opt.family.empty() + !opt.values.empty();
    if (sources != 1) throw UsageError("give exactly one of --instance, --family or --values");
    if (!opt.family.empty()) {
        const auto family = parse_family(opt.family);
        return {named_instance(family), to_string(family)};
    }
    if (!opt.values.empty()) {
        auto instance = make_instance(parse_value_list(opt.values));
        auto descriptor = instance.to_string();
        return {std::move(instance), std::move(descriptor)};
    }
    std::ifstream in(opt.instance_path);
    if (!in) throw UsageError("cannot open instance file '" + opt.instance_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto instance = parse_instance_text(buffer.str());
    auto descriptor = instance.to_string();
    return {std::move(instance), std::move(descriptor)};
}

int machines_for(const Options& opt, SchedulerId id) {
    if (opt.m) return *opt.m;
    return id == SchedulerId::three_la1 ? 3 : 2;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

void print_row(std::ostream& out, const ExperimentRow& row) {
    out << "scheduler: " << row.scheduler << '\n'
        << "instance: " << row.instance << '\n'
        << "m: " << row.m << '\n'
        << "k: " << row.k << '\n'
        << "alg_makespan: " << row.alg_makespan << '\n'
        << "opt_makespan: " << row.opt_makespan << '\n'
        << "ratio: " << row.ratio << '\n';
}

std::string join(const std::vector<Rational>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ' ';
        s += values[i].to_string();
    }
    return s;
}

void print_window_step(std::ostream& out, std::size_t job, const LookaheadWindow& w, int machine,
                       const std::vector<Rational>* loads) {
    out << "  job " << job << ": p=" << w.current << " lookahead=[" << join(w.future) << "] -> M" << machine;
    if (loads) out << " loads=[" << join(*loads) << "]";
    out << '\n';
}

int run_simulate(const Options& opt, std::ostream& out) {
    const auto id = parse_scheduler_id(opt.alg);
    const int m = machines_for(opt, id);
    const auto policy = make_policy(id, m);
    const auto loaded = load_instance(opt);
    const auto row = run_one(id, loaded.instance, m, opt.k, loaded.descriptor);
    print_row(out, row);
    if (opt.trace) {
        out << "trace:\n";
        for (const auto& r : run_online(*policy, loaded.instance, opt.k).trace)
            print_window_step(out, r.job, r.window, r.machine, &r.loads_after);
    }
    if (!opt.csv_path.empty()) write_file(opt.csv_path, emit_csv(std::vector<ExperimentRow>{row}));
    return kExitOk;
}

int run_oracle(const Options& opt, std::ostream& out) {
    const int m = opt.m.value_or(2);
    const auto loaded = load_instance(opt);
    const auto opt_result = optimal_makespan(loaded.instance, m);
    out << "instance: " << loaded.descriptor << '\n'
        << "m: " << m << '\n'
        << "opt_makespan: " << opt_result.makespan << '\n'
        << "lower_bound: " << opt_lower_bound(loaded.instance, m) << '\n'
        << "witness:";
    for (int machine : opt_result.witness) out << ' ' << machine;
    out << '\n';
    return kExitOk;
}

int run_verify(const Options& opt, std::ostream& out) {
    const auto id = parse_scheduler_id(opt.alg);
    const int m = machines_for(opt, id);
    if (opt.nmax < 1) throw UsageError("--nmax must be at least 1");
    Rational bound;
    try {
        bound = Rational::parse(opt.bound);
    } catch (const std::invalid_argument&) {
        throw UsageError("--bound '" + opt.bound + "' is not a rational");
    }
    VerifyOptions options;
    options.jobs = opt.jobs;
    const auto report = verify_bound(id, m, opt.k, opt.nmax, parse_value_list(opt.value_set), bound, options);
    out << format_report(report);
    if (!opt.csv_path.empty()) write_file(opt.csv_path, emit_csv(report));
    return report.violations.empty() ? kExitOk : kExitViolations;
}

int run_adversary(const Options& opt, std::ostream& out) {
    const auto id = parse_scheduler_id(opt.alg);
    GameTranscript transcript = [&] {
        if (opt.game == "two-machine") {
            const auto policy = make_policy(id, opt.m.value_or(2));
            return play_two_machine_game(*policy, opt.n, opt.k, Rational::parse(opt.x));
        }
        if (opt.game == "three-machine") {
            const auto policy = make_policy(id, opt.m.value_or(3));
            return play_three_machine_game(*policy);
        }
        throw UsageError("--game must be two-machine or three-machine");
    }();

    out << "game: " << opt.game << '\n'
        << "scheduler: " << to_string(id) << '\n'
        << "applied_case: " << transcript.applied_case << '\n'
        << "degenerate: " << (transcript.degenerate ? "yes" : "no") << '\n'
        << "instance: " << transcript.final_instance.to_string() << '\n'
        << "alg_makespan: " << transcript.alg_makespan << '\n'
        << "opt_makespan: " << transcript.opt_makespan << '\n'
        << "ratio: " << transcript.ratio << '\n';
    if (opt.trace) {
        out << "trace:\n";
        for (std::size_t i = 0; i < transcript.decisions.size(); ++i)
            print_window_step(out, i + 1, transcript.revealed[i], transcript.decisions[i], nullptr);
    }
    return kExitOk;
}

int run_generate(const Options& opt, std::ostream& out) {
    std::string header;
    std::vector<Rational> times;
    if (opt.random) {
        if (!opt.family.empty()) throw UsageError("--random and --family are exclusive");
        if (opt.n < 1) throw UsageError("--random needs --n >= 1");
        const auto values = parse_value_list(opt.value_set);
        make_instance(values);  // rejects non-positive values
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
        for (std::size_t i = 0; i < opt.n; ++i) times.push_back(values[pick(rng)]);
        header = "# random n=" + std::to_string(opt.n) + " values=" + opt.value_set + " seed=" + std::to_string(opt.seed);
    } else {
        if (opt.family.empty()) throw UsageError("generate needs --family or --random");
        const auto family = parse_family(opt.family);
        const auto instance = named_instance(family);
        times.assign(instance.times().begin(), instance.times().end());
        header = "# " + to_string(family);
    }

    std::string text = header + '\n';
    for (const auto& t : times) text += t.to_string() + '\n';
    if (opt.out_path.empty())
        out << text;
    else
        write_file(opt.out_path, text);
    return kExitOk;
}

int run_sweep(const Options& opt, std::ostream& out) {
    const auto id = parse_scheduler_id(opt.alg);
    const int m = machines_for(opt, id);
    const auto families = expand_family_range(opt.family);
    const auto rows = run_family_sweep(id, families, m, opt.k);
    const auto csv = emit_csv(rows);
    out << csv;
    if (!opt.csv_path.empty()) write_file(opt.csv_path, csv);
    return kExitOk;
}

void add_instance_source(CLI::App* cmd, Options& opt) {
    cmd->add_option("--instance", opt.instance_path, "Instance file (one processing time per line)");
    cmd->add_option("--family", opt.family, "Named family, e.g. theorem2:n=6");
    cmd->add_option("--values", opt.values, "Inline instance as a comma separated list");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Semi-online scheduling with lookahead: simulate, verify and play adversaries", "lookahead"};
    app.require_subcommand(1);
    app.add_flag("--verbose", opt.verbose, "Print a version banner on stderr");

    auto* simulate = app.add_subcommand("simulate", "Run one scheduler on one instance");
    simulate->add_option("--alg", opt.alg, "ls, 2la1 or 3la1")->required();
    simulate->add_option("--m", opt.m, "Machine count");
    simulate->add_option("--k", opt.k, "Lookahead size")->capture_default_str();
    add_instance_source(simulate, opt);
    simulate->add_flag("--trace", opt.trace, "Print every decision");
    simulate->add_option("--csv", opt.csv_path, "Also write the row as CSV");

    auto* oracle = app.add_subcommand("oracle", "Exact optimal makespan");
    oracle->add_option("--m", opt.m, "Machine count (default 2)");
    add_instance_source(oracle, opt);

    auto* verify = app.add_subcommand("verify", "Exhaustively check a competitive-ratio bound");
    verify->add_option("--alg", opt.alg, "ls, 2la1 or 3la1")->required();
    verify->add_option("--m", opt.m, "Machine count");
    verify->add_option("--k", opt.k, "Lookahead size")->capture_default_str();
    verify->add_option("--nmax", opt.nmax, "Largest instance length")->required();
    verify->add_option("--values", opt.value_set, "Value set, comma separated")->default_val("1,2,3");
    verify->add_option("--bound", opt.bound, "Target ratio, e.g. 4/3")->required();
    verify->add_option("--jobs", opt.jobs, "Worker threads")->capture_default_str();
    verify->add_option("--csv", opt.csv_path, "Write argmax and violations as CSV");

    auto* adversary = app.add_subcommand("adversary", "Play an adaptive lower-bound game");
    adversary->add_option("--game", opt.game, "two-machine or three-machine")->required();
    adversary->add_option("--alg", opt.alg, "ls, 2la1 or 3la1")->required();
    adversary->add_option("--m", opt.m, "Machine count");
    adversary->add_option("--n", opt.n, "Number of jobs (two-machine)");
    adversary->add_option("--k", opt.k, "Lookahead size (two-machine)")->capture_default_str();
    adversary->add_option("--x", opt.x, "Length of the leading jobs (two-machine)")->capture_default_str();
    adversary->add_flag("--trace", opt.trace, "Print every revealed window and decision");

    auto* generate = app.add_subcommand("generate", "Write an instance file");
    generate->add_option("--family", opt.family, "Named family, e.g. thm4:case=2.2");
    generate->add_flag("--random", opt.random, "Uniform random instance over --values");
    generate->add_option("--n", opt.n, "Length of a random instance");
    generate->add_option("--values", opt.value_set, "Value set for --random")->default_val("1,2,3");
    generate->add_option("--seed", opt.seed, "Seed for --random")->capture_default_str();
    generate->add_option("--out", opt.out_path, "Output file (default: stdout)");

    auto* sweep = app.add_subcommand("sweep", "Run a scheduler over a family parameter range");
    sweep->add_option("--alg", opt.alg, "ls, 2la1 or 3la1")->required();
    sweep->add_option("--m", opt.m, "Machine count");
    sweep->add_option("--k", opt.k, "Lookahead size")->capture_default_str();
    sweep->add_option("--family", opt.family, "Family or range, e.g. theorem2:n=4..8")->required();
    sweep->add_option("--csv", opt.csv_path, "Also write the CSV to a file");

    std::vector<const char*> argv{"lookahead"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help("", CLI::AppFormatMode::Normal);
        return kExitUsage;
    }
    if (opt.verbose) err << kVersion << '\n';

    const auto* selected = app.get_subcommands().front();
    try {
        const auto& name = selected->get_name();
        if (name == "simulate") return run_simulate(opt, out);
        if (name == "oracle") return run_oracle(opt, out);
        if (name == "verify") return run_verify(opt, out);
        if (name == "adversary") return run_adversary(opt, out);
        if (name == "generate") return run_generate(opt, out);
        return run_sweep(opt, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n' << selected->help();
        return kExitUsage;
    } catch (const SchedulerMachineMismatch& e) {
        err << "usage error: " << e.what() << '\n' << selected->help();
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what();
        if (!opt.family.empty()) err << " (instance: " << opt.family << ")";
        else if (!opt.values.empty()) err << " (instance: " << opt.values << ")";
        else if (!opt.instance_path.empty()) err << " (instance file: " << opt.instance_path << ")";
        err << '\n';
        return kExitUsage;
    }
}

}  // namespace lookahead::cli
