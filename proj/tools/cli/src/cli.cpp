#include "pcpt_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pcpt/dynamics.hpp"
#include "pcpt/frames.hpp"
#include "pcpt/retrograde.hpp"
#include "pcpt/su2.hpp"
#include "pcpt_cli/suite.hpp"

namespace pcpt::cli {

namespace {

using nlohmann::json;

// Thrown for bad input that CLI11 cannot catch on its own (exit 2).
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<double> cpt_tol;
    std::optional<double> hermitian_tol;
    std::optional<double> unitary_tol;

    std::int64_t p = 3;
    std::int64_t q = 1;
    double k = 0.0;
    int n = 4;

    double max_c = 0.0;
    bool signs = false;

    int depth = 2;
    bool matrix = false;
    std::uint64_t budget = default_search_budget;

    double t_max = 2.0;
    std::size_t steps = 200;
    std::string out_path = "-";
    bool absolute_time = false;

    std::string format = "dot";
    std::string variant = "retrograde";

    int suite_n = 0;
    std::string json_path;
    bool timings = false;
};

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json vector_json(const CVector& v) {
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
    return out;
}

OddPair make_pair(const Options& o) {
    try {
        return OddPair(o.p, o.q);
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(std::string("--p/--q: ") + e.what());
    }
}

void require_even(int n, const char* command) {
    if (n < 2 || n % 2 != 0) {
        throw InvalidInput(std::string(command) + ": --n must be even and >= 2, got " + std::to_string(n));
    }
}

void warn_zero_parameters(const CouplingParams& params, std::ostream& err) {
    if (!params.all_nonzero()) {
        err << "warning: some of delta1, omega1, delta2, omega2 vanish for this k\n";
    }
}

// Writes to `path`, or to `out` when path is "-".
template <class Writer>
void emit(const std::string& path, std::ostream& out, Writer&& write) {
    if (path == "-" || path.empty()) {
        write(out);
        return;
    }
    std::ofstream file(path);
    if (!file) throw InvalidInput("--out: cannot open '" + path + "' for writing");
    write(file);
}

int cmd_triples(const Options& o, std::ostream& out) {
    if (!std::isfinite(o.max_c)) throw InvalidInput("--max-c: must be finite");
    std::vector<std::pair<Sign, Sign>> variants{{Sign::plus, Sign::plus}};
    if (o.signs) {
        variants.insert(variants.end(), {{Sign::minus, Sign::plus}, {Sign::plus, Sign::minus}, {Sign::minus, Sign::minus}});
    }
    out << std::setw(5) << "p" << std::setw(5) << "q" << std::setw(8) << "a" << std::setw(8) << "b"
        << std::setw(8) << "c" << "  primitive\n";
    for (const OddPair& pair : enumerate_primitive_pairs(o.max_c)) {
        for (auto [sa, sb] : variants) {
            const PythTriple t = triple_from_pair(pair, sa, sb);
            out << std::setw(5) << pair.p() << std::setw(5) << pair.q() << std::setw(8) << t.a << std::setw(8)
                << t.b << std::setw(8) << t.c << "  " << (t.primitive ? "yes" : "no") << "\n";
        }
    }
    return exit_pass;
}

int cmd_frame(const Options& o, std::ostream& out) {
    if (o.depth < 1) throw InvalidInput("--N: must be >= 1, got " + std::to_string(o.depth));
    std::optional<EntangledFrame> frame;
    json report;
    if (o.depth <= 3) {
        frame = build_w(o.depth);
    } else {
        if (o.depth > 6) throw InvalidInput("--N: search supports N <= 6, got " + std::to_string(o.depth));
        const FrameSearchOutcome outcome = search_w(o.depth, o.budget);
        report["search"] = {{"status", to_string(outcome.status)},
                            {"nodes", outcome.nodes},
                            {"deepest", outcome.deepest}};
        frame = outcome.frame;
    }
    report["N"] = o.depth;
    if (!frame) {
        report["found"] = false;
        out << report.dump(2) << "\n";
        return exit_failure;
    }
    report["found"] = true;
    report["n"] = frame->n;
    report["experimental"] = frame->experimental;
    json labels = json::array();
    for (const SigmaLabel& l : frame->labels) labels.push_back(l.digits());
    report["labels"] = labels;

    const FrameValidation v = validate_frame(*frame);
    report["validation"] = {{"nonnegative_leading_columns", v.nonnegative_leading_columns},
                            {"diagonal_signs", v.diagonal_signs},
                            {"alternating_last_column", v.alternating_last_column},
                            {"quantized_entries", v.quantized_entries},
                            {"symmetry_residual", v.symmetry_residual},
                            {"orthogonality_residual", v.orthogonality_residual},
                            {"passed", v.passed()}};
    if (o.matrix) {
        // Entries are (integer numerator) / sqrt(2^N).
        const double scale = std::sqrt(static_cast<double>(frame->n));
        json rows = json::array();
        for (Index i = 0; i < frame->w.rows(); ++i) {
            json row = json::array();
            for (Index j = 0; j < frame->w.cols(); ++j) row.push_back(std::lround(frame->w(i, j) * scale));
            rows.push_back(row);
        }
        report["matrix"] = {{"denominator", "sqrt(" + std::to_string(frame->n) + ")"},
                            {"denominator_squared", frame->n},
                            {"numerators", rows}};
    }
    out << report.dump(2) << "\n";
    return v.passed() ? exit_pass : exit_failure;
}

CMatrix lab_hamiltonian(const Options& o, const CouplingParams& params, const Tolerances& tol) {
    return to_lab(build_h_tp(o.n, params), default_lab_frame(o.n), tol);
}

int cmd_simulate(const Options& o, const Tolerances& tol, std::ostream& out, std::ostream& err) {
    require_even(o.n, "simulate");
    if (!(o.t_max >= 0.0) || !std::isfinite(o.t_max)) throw InvalidInput("--t-max: must be finite and >= 0");
    if (o.steps == 0) throw InvalidInput("--steps: must be >= 1");
    const CouplingParams params = coupling_params(make_pair(o), o.k);
    warn_zero_parameters(params, err);
    const CMatrix h = lab_hamiltonian(o, params, tol);
    const double scale = o.absolute_time ? 1.0 : params.tau;
    const std::vector<double> grid = uniform_grid(0.0, o.t_max * scale, o.steps);
    const Index dim = h.rows();
    const SimulationResult sim = simulate(h, CVector::Unit(dim, 0), grid, tol);

    emit(o.out_path, out, [&](std::ostream& s) {
        s << (o.absolute_time ? "t" : "t_over_tau");
        for (Index j = 1; j <= dim; ++j) s << ",pop_" << j;
        s << "\n" << std::setprecision(17);
        for (std::size_t r = 0; r < grid.size(); ++r) {
            s << grid[r] / scale;
            for (Index j = 0; j < dim; ++j) s << "," << sim.populations(static_cast<Index>(r), j);
            s << "\n";
        }
    });
    return exit_pass;
}

int cmd_verify(const Options& o, const Tolerances& tol, std::ostream& out, std::ostream& err) {
    require_even(o.n, "verify");
    const CouplingParams params = coupling_params(make_pair(o), o.k);
    warn_zero_parameters(params, err);
    const CptCertificate cert = verify_cpt({o.n, params, std::nullopt}, tol);
    const json report{{"p", o.p},
                      {"q", o.q},
                      {"k", o.k},
                      {"n", o.n},
                      {"tau", cert.tau},
                      {"target_index", cert.target_index},
                      {"fidelity", cert.fidelity},
                      {"tp_overlap", cert.tp_overlap},
                      {"phase", cert.phase},
                      {"tolerance", tol.cpt},
                      {"pass", cert.pass}};
    out << report.dump(2) << "\n";
    return cert.pass ? exit_pass : exit_failure;
}

std::string coefficient_label(double c, const char* symbol) {
    const auto near = [&](double x) { return std::abs(c - x) <= 1e-12; };
    std::ostringstream s;
    if (near(1.0)) {
        s << symbol;
    } else if (near(-1.0)) {
        s << "-" << symbol;
    } else if (near(std::sqrt(3.0)) || near(-std::sqrt(3.0))) {
        s << (c < 0 ? "-" : "") << "sqrt(3)*" << symbol;
    } else if (near(std::round(c))) {
        s << std::lround(c) << "*" << symbol;
    } else {
        s << std::setprecision(6) << c << "*" << symbol;
    }
    return s.str();
}

// Symbolic weight of entry (i, j) in terms of V12, V23, V34, V14.
std::string symbolic_weight(const std::array<RMatrix, 4>& basis, Index i, Index j) {
    static constexpr const char* names[] = {"V12", "V23", "V34", "V14"};
    std::string label;
    for (std::size_t m = 0; m < 4; ++m) {
        const double c = basis[m](i, j);
        if (std::abs(c) <= 1e-12) continue;
        std::string term = coefficient_label(c, names[m]);
        if (!label.empty() && term.front() != '-') label += "+";
        label += term;
    }
    return label.empty() ? "0" : label;
}

std::string numeric_weight(Complex w) {
    std::ostringstream s;
    s << std::setprecision(12) << w.real();
    if (std::abs(w.imag()) > 0.0) s << (w.imag() < 0 ? "-" : "+") << std::abs(w.imag()) << "i";
    return s.str();
}

int cmd_graph(const Options& o, const Tolerances& tol, std::ostream& out, std::ostream& err) {
    require_even(o.n, "graph");
    if (o.format != "dot" && o.format != "json") {
        throw InvalidInput("--format: expected dot or json, got '" + o.format + "'");
    }
    const CouplingParams params = coupling_params(make_pair(o), o.k);
    warn_zero_parameters(params, err);
    const RMatrix w = default_lab_frame(o.n);
    const CMatrix h = to_lab(build_h_tp(o.n, params), w, tol);
    const CouplingGraph graph = coupling_graph(h, 1e-10, tol);
    const bool symbolic = o.n == 2 || o.n == 4;
    std::optional<std::array<RMatrix, 4>> basis;
    if (symbolic) basis = lab_coupling_basis(o.n, w);

    const auto label = [&](const CouplingEdge& e) {
        return symbolic ? symbolic_weight(*basis, e.from, e.to) : numeric_weight(e.weight);
    };

    if (o.format == "json") {
        json edges = json::array();
        for (const CouplingEdge& e : graph.edges) {
            edges.push_back({{"from", e.from + 1},
                             {"to", e.to + 1},
                             {"weight", complex_json(e.weight)},
                             {"label", label(e)}});
        }
        json diagonal = json::array();
        for (Index i = 0; i < graph.diagonal.size(); ++i) diagonal.push_back(graph.diagonal(i));
        const json report{{"n", o.n},       {"levels", graph.size}, {"threshold", graph.threshold},
                          {"edges", edges}, {"diagonal", diagonal}};
        out << report.dump(2) << "\n";
        return exit_pass;
    }
    out << "graph couplings {\n";
    for (Index i = 0; i < graph.size; ++i) out << "  " << i + 1 << " [label=\"|" << i + 1 << "⟩\"];\n";
    for (const CouplingEdge& e : graph.edges) {
        out << "  " << e.from + 1 << " -- " << e.to + 1 << " [label=\"" << label(e) << "\"];\n";
    }
    out << "}\n";
    return exit_pass;
}

int cmd_retro(const Options& o, const Tolerances& tol, std::ostream& out, std::ostream& err) {
    if (o.n != 2 && o.n != 3 && o.n != 4) throw InvalidInput("--n: expected 2, 3 or 4, got " + std::to_string(o.n));
    RetroVariant variant;
    if (o.variant == "retrograde") {
        variant = RetroVariant::retrograde;
    } else if (o.variant == "semi") {
        variant = RetroVariant::semi;
    } else {
        throw InvalidInput("--variant: expected retrograde or semi, got '" + o.variant + "'");
    }
    const OddPair pair = make_pair(o);
    warn_zero_parameters(coupling_params(pair, o.k), err);
    const PulseSchedule pulse = pythagorean_pulse(pair, o.k, o.n);
    const CMatrix y = y_matrix(spin_generators(o.n));
    const EquivalenceReport eq = check_equivalence(pulse, y, variant, tol);

    json report{{"p", o.p}, {"q", o.q}, {"k", o.k}, {"n", o.n}, {"variant", to_string(variant)}};
    report["equivalence"] = {{"forward", eq.forward},
                             {"backward", eq.backward},
                             {"u_equals_y", eq.lhs},
                             {"doubled_maps_identity_to_y", eq.rhs},
                             {"u_phase", complex_json(eq.lhs_phase)},
                             {"doubled_phase", complex_json(eq.rhs_phase)},
                             {"u_residual", eq.lhs_residual},
                             {"doubled_residual", eq.rhs_residual},
                             {"symmetry_precondition", eq.symmetry_precondition},
                             {"symmetry_residual", eq.symmetry_residual},
                             {"trace_y", complex_json(eq.trace_y)},
                             {"identity_overlap", eq.identity_overlap},
                             {"cpt", eq.cpt}};
    bool ok = eq.consistent() || !eq.symmetry_precondition;
    if (o.n % 2 == 0) {
        const BasicCptReport basic = basic_cpts(o.n, pair, o.k, tol);
        json records = json::array();
        for (const BasicCptRecord& r : basic.basic) {
            records.push_back({{"index", r.index},
                               {"initial", vector_json(r.initial)},
                               {"final", vector_json(r.final_state)},
                               {"orthogonality", r.orthogonality},
                               {"certified", r.certified}});
        }
        report["basic_cpts"] = {{"measured_phase", complex_json(basic.measured_phase)},
                                {"records", records},
                                {"family_samples", basic.family.size()},
                                {"family_max_overlap", basic.family_max_overlap},
                                {"universal_final", vector_json(basic.universal_final)},
                                {"universal_error", basic.universal_error},
                                {"certified", basic.certified}};
        ok = ok && basic.certified;
    } else {
        const OddDimensionReport odd = odd_dim_demo(pair, o.k, tol);
        report["odd_dimension"] = {{"y_phase", complex_json(odd.y_phase)},
                                   {"y_residual", odd.y_residual},
                                   {"action_residual", odd.action_residual},
                                   {"basic_initial", vector_json(odd.basic_initial)},
                                   {"basic_final", vector_json(odd.basic_final)},
                                   {"basic_orthogonality", odd.basic_orthogonality},
                                   {"basic_certified", odd.basic_certified},
                                   {"identity_overlap", odd.identity_overlap},
                                   {"identity_to_y_fidelity", odd.identity_to_y_fidelity},
                                   {"is_cpt", odd.is_cpt}};
        ok = ok && odd.basic_certified;
    }
    report["pass"] = ok;
    out << report.dump(2) << "\n";
    return ok ? exit_pass : exit_failure;
}

int cmd_suite(const Options& o, const Tolerances& tol, std::ostream& out) {
    SuiteOptions options;
    options.extra_n = o.suite_n;
    options.tol = tol;
    if (o.suite_n != 0 && o.suite_n < 2) throw InvalidInput("--n: must be >= 2, got " + std::to_string(o.suite_n));
    const SuiteReport report = run_suite(options);
    if (o.json_path == "-") {
        out << to_json(report, o.timings).dump(2) << "\n";
    } else {
        print_table(report, out, o.timings);
        if (!o.json_path.empty()) {
            emit(o.json_path, out, [&](std::ostream& s) { s << to_json(report, o.timings).dump(2) << "\n"; });
        }
    }
    return report.all_passed() ? exit_pass : exit_failure;
}

// Flag names of the JSON config file mapped to argument lists.
std::vector<std::string> config_arguments(const json& config, const CLI::App& app, const std::string& command) {
    std::vector<std::string> args;
    const CLI::App* sub = command.empty() ? nullptr : app.get_subcommand_no_throw(command);
    for (const auto& [key, value] : config.items()) {
        if (key == "command") continue;
        const std::string flag = "--" + key;
        const bool known = app.get_option_no_throw(flag) != nullptr ||
                           (sub != nullptr && sub->get_option_no_throw(flag) != nullptr);
        if (!known) throw InvalidInput("config: unknown key '" + key + "'");
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back(flag);
        } else if (value.is_number() || value.is_string()) {
            args.push_back(flag);
            args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
        } else {
            throw InvalidInput("config: key '" + key + "' must be a number, string or boolean");
        }
    }
    return args;
}

json load_config(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw InvalidInput("--config: cannot read '" + path + "'");
    json config;
    try {
        config = json::parse(file);
    } catch (const json::parse_error& e) {
        throw InvalidInput("--config: " + std::string(e.what()));
    }
    if (!config.is_object()) throw InvalidInput("--config: expected a JSON object");
    if (config.contains("command") && !config["command"].is_string()) {
        throw InvalidInput("config: key 'command' must be a string");
    }
    return config;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Perfect-transfer checks for coupled two-spin systems", "pcpt"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    std::string config_path;
    app.add_option("--config", config_path, "JSON file of flag values; command-line flags win");
    app.add_option("--cpt-tol", o.cpt_tol, "Transfer tolerance (1 - fidelity)")->check(CLI::PositiveNumber);
    app.add_option("--hermitian-tol", o.hermitian_tol, "Hermiticity tolerance")->check(CLI::PositiveNumber);
    app.add_option("--unitary-tol", o.unitary_tol, "Unitarity tolerance")->check(CLI::PositiveNumber);

    const auto add_system = [&](CLI::App* sub, bool with_n) {
        sub->add_option("--p", o.p, "Odd integer p > q")->capture_default_str();
        sub->add_option("--q", o.q, "Odd integer q >= 1")->capture_default_str();
        sub->add_option("--k", o.k, "Free real parameter k")->capture_default_str();
        if (with_n) sub->add_option("--n", o.n, "Local dimension")->capture_default_str();
    };

    CLI::App* triples = app.add_subcommand("triples", "List primitive odd pairs and their triples");
    triples->add_option("--max-c", o.max_c, "Largest hypotenuse")->required();
    triples->add_flag("--signs", o.signs, "Also list the sign-flipped triples");

    CLI::App* frame = app.add_subcommand("frame", "Build the entangled frame W for n = 2^N");
    frame->add_option("--N", o.depth, "Depth N")->required();
    frame->add_flag("--matrix", o.matrix, "Include W as integer numerators over sqrt(2^N)");
    frame->add_option("--budget", o.budget, "Search node budget for N >= 4")->capture_default_str();

    CLI::App* sim = app.add_subcommand("simulate", "Lab-frame populations from |1> as CSV");
    add_system(sim, true);
    sim->add_option("--t-max", o.t_max, "End time (tau units unless --absolute-time)")->capture_default_str();
    sim->add_option("--steps", o.steps, "Number of intervals; steps + 1 rows")->capture_default_str();
    sim->add_option("--out", o.out_path, "Output path, - for stdout")->capture_default_str();
    sim->add_flag("--absolute-time", o.absolute_time, "Time column and --t-max in absolute units");

    CLI::App* verify = app.add_subcommand("verify", "Certify the transfer e1 -> e_{n^2-n+1}");
    add_system(verify, true);

    CLI::App* graph = app.add_subcommand("graph", "Coupling graph of the lab Hamiltonian");
    add_system(graph, true);
    graph->add_option("--format", o.format, "dot or json")->capture_default_str();

    CLI::App* retro = app.add_subcommand("retro", "Retrograde equivalence and basic transfers");
    add_system(retro, true);
    retro->add_option("--variant", o.variant, "retrograde or semi")->capture_default_str();

    CLI::App* suite = app.add_subcommand("suite", "Run the acceptance battery");
    suite->add_option("--n", o.suite_n, "Extra representation dimension to exercise (odd n expects no transfer)");
    suite->add_option("--json", o.json_path, "Also write the JSON summary (- prints only JSON)");
    suite->add_flag("--timings", o.timings, "Include wall-clock seconds");

    try {
        std::vector<std::string> argv(args.begin(), args.end());
        for (std::size_t i = 0; i < argv.size(); ++i) {
            std::string path;
            std::size_t used = 0;
            if (argv[i] == "--config") {
                if (i + 1 >= argv.size()) throw InvalidInput("--config: missing path");
                path = argv[i + 1];
                used = 2;
            } else if (argv[i].rfind("--config=", 0) == 0) {
                path = argv[i].substr(9);
                used = 1;
            } else {
                continue;
            }
            const json config = load_config(path);
            argv.erase(argv.begin() + static_cast<std::ptrdiff_t>(i), argv.begin() + static_cast<std::ptrdiff_t>(i + used));

            auto command_at = std::find_if(argv.begin(), argv.end(),
                                           [&](const std::string& a) { return app.get_subcommand_no_throw(a) != nullptr; });
            std::string command = command_at == argv.end() ? "" : *command_at;
            if (command.empty() && config.contains("command")) {
                command = config["command"].get<std::string>();
                if (app.get_subcommand_no_throw(command) == nullptr) {
                    throw InvalidInput("config: unknown command '" + command + "'");
                }
                argv.insert(argv.begin(), command);
                command_at = argv.begin();
            }
            const std::vector<std::string> extra = config_arguments(config, app, command);
            const auto insert_at = command_at == argv.end() ? argv.begin() : command_at + 1;
            argv.insert(insert_at, extra.begin(), extra.end());
            break;
        }
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);

        Tolerances tol = Tolerances::from_environment();
        if (o.cpt_tol) tol.cpt = *o.cpt_tol;
        if (o.hermitian_tol) tol.hermitian = *o.hermitian_tol;
        if (o.unitary_tol) tol.unitary = *o.unitary_tol;

        if (triples->parsed()) return cmd_triples(o, out);
        if (frame->parsed()) return cmd_frame(o, out);
        if (sim->parsed()) return cmd_simulate(o, tol, out, err);
        if (verify->parsed()) return cmd_verify(o, tol, out, err);
        if (graph->parsed()) return cmd_graph(o, tol, out, err);
        if (retro->parsed()) return cmd_retro(o, tol, out, err);
        if (suite->parsed()) return cmd_suite(o, tol, out);
        return exit_invalid;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
}

}  // namespace pcpt::cli
