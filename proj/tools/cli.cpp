#include "cli.hpp"

#include "report.hpp"

#include "pdl/error.hpp"
#include "pdl/identities.hpp"
#include "pdl/reduction.hpp"
#include "pdl/semantics.hpp"
#include "pdl/surface.hpp"
#include "pdl/tiling.hpp"
#include "pdl/tm.hpp"
#include "pdl/witness.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <regex>

namespace pdl::cli {

namespace {

namespace fs = std::filesystem;

struct Context {
    std::ostream& out;
    RunReport report;

    SourceText load(const std::string& path)
    {
        SourceText src = read_source(path);
        report.add_input(path, src.text);
        return src;
    }

    /// A formula argument names a file if one exists, else it is the text.
    SourceText load_formula(const std::string& arg)
    {
        if (fs::is_regular_file(arg))
            return load(arg);
        report.add_input("<inline>", arg);
        return {arg, "<inline>"};
    }

    void write_file(const fs::path& path, const std::string& content)
    {
        std::ofstream os(path, std::ios::binary);
        if (!os)
            throw Error("cannot write '" + path.string() + "'");
        os << content;
        report.detail("wrote", path.string());
    }
};

Encoding parse_encoding(const std::string& s) { return s == "tie" ? Encoding::Tie : Encoding::Fix; }
Form parse_form(const std::string& s) { return s == "while" ? Form::While : Form::Star; }

Shape parse_shape(const std::string& s)
{
    static const std::regex pattern(R"((rect|torus):(\d+),(\d+))");
    std::smatch m;
    if (!std::regex_match(s, m, pattern))
        throw InvariantError("shape must look like rect:W,H or torus:N,M");
    const int a = std::stoi(m[2]);
    const int b = std::stoi(m[3]);
    if (a < 1 || b < 1)
        throw InvariantError("shape dimensions must be at least 1");
    return m[1] == "rect" ? Shape::rect(a, b) : Shape::torus(a, b);
}

std::string format_config(const Configuration& c)
{
    std::string tape;
    for (std::size_t i = 0; i < c.tape.size(); ++i) {
        if (i)
            tape += ' ';
        tape += i == c.head ? "[" + c.tape[i] + "]" : c.tape[i];
    }
    return c.state + ": " + tape;
}

std::string join(const std::vector<std::string>& xs)
{
    std::string s;
    for (const auto& x : xs)
        s += (s.empty() ? "" : " ") + x;
    return s;
}

int run_check(Context& ctx, const std::string& model_path, const std::string& formula_arg,
              const std::optional<std::string>& state)
{
    const KripkeModel model = parse_model(ctx.load(model_path));
    const Prop f = parse_prop(ctx.load_formula(formula_arg));
    const StateSet sat = truth_set(model, f);
    const auto names = state_names(model, sat);
    ctx.out << "satisfying states: " << join(names) << '\n';
    ctx.report.detail("formula", print_prop(f));
    ctx.report.detail("satisfying", std::to_string(names.size()) + "/" + std::to_string(model.states.size()));
    if (state) {
        auto it = std::find(model.states.begin(), model.states.end(), *state);
        if (it == model.states.end())
            throw UnknownState("state '" + *state + "' is not declared");
        const bool ok = sat.test(static_cast<std::size_t>(it - model.states.begin()));
        ctx.report.outcome = (ok ? "satisfied at " : "not satisfied at ") + *state;
        return ok ? kOk : kNo;
    }
    ctx.report.outcome = sat.any() ? "satisfiable in model" : "unsatisfied everywhere";
    return sat.any() ? kOk : kNo;
}

int run_reduce(Context& ctx, const std::string& tileset_path, const std::string& dir, const std::string& encoding,
               const std::string& form)
{
    const TileSet ts = parse_tileset(ctx.load(tileset_path));
    const ReductionOutput r = reduce(ts, parse_encoding(encoding), parse_form(form));
    fs::create_directories(dir);
    const std::vector<std::pair<std::string, const Prop*>> files = {
        {"square.pdl", &r.square}, {"rho1.pdl", &r.rho1},   {"rho2.pdl", &r.rho2},
        {"rho3.pdl", &r.rho3},     {"gamma.pdl", &r.gamma}, {"gamma_T.pdl", &r.gamma_T}};
    for (const auto& [name, f] : files)
        ctx.write_file(fs::path(dir) / name, print_prop(*f) + "\n");
    ctx.report.detail("encoding", to_string(r.encoding));
    ctx.report.detail("form", to_string(r.form));
    ctx.report.outcome = "wrote 6 formulas";
    return kOk;
}

int run_tile(Context& ctx, const std::string& tileset_path, const std::string& shape_text,
             const std::optional<std::string>& origin, const std::optional<std::string>& out_path)
{
    const TileSet ts = parse_tileset(ctx.load(tileset_path));
    const Shape shape = parse_shape(shape_text);
    SearchStats stats;
    const auto t = search_tiling(ts, shape, origin, &stats);
    ctx.report.nodes = stats.nodes;
    ctx.report.bound = shape_text;
    if (!t) {
        ctx.report.outcome = "no tiling";
        return kNo;
    }
    ctx.out << render_grid(*t);
    if (out_path)
        ctx.write_file(*out_path, to_json(*t).dump(2) + "\n");
    ctx.report.outcome = "tiling found";
    return kOk;
}

int run_compile_tm(Context& ctx, const std::string& tm_path, const std::string& dir)
{
    const TuringMachine tm = parse_tm(ctx.load(tm_path));
    const CompiledTM c = compile_tm(tm);
    fs::create_directories(dir);
    ctx.write_file(fs::path(dir) / "tileset.json", to_json(c.tiles).dump(2) + "\n");
    ctx.write_file(fs::path(dir) / "meta.json", to_json(c.meta).dump(2) + "\n");
    ctx.report.detail("tiles", std::to_string(c.tiles.tiles.size()));
    ctx.report.detail("neon", std::to_string(c.tiles.neon.size()));
    ctx.report.outcome = "compiled";
    return kOk;
}

int run_simulate(Context& ctx, const std::string& tm_path, std::size_t steps, bool all)
{
    const TuringMachine tm = parse_tm(ctx.load(tm_path));
    const auto runs = simulate(tm, steps, all ? Policy::AllBranches : Policy::FirstTransition);
    for (std::size_t r = 0; r < runs.size(); ++r) {
        ctx.out << "run " << r << '\n';
        for (std::size_t s = 0; s < runs[r].size(); ++s)
            ctx.out << "  " << s << "  " << format_config(runs[r][s]) << '\n';
    }
    ctx.report.detail("runs", std::to_string(runs.size()));
    ctx.report.bound = std::to_string(steps) + " steps";
    const bool full = has_run_of_length(tm, steps);
    ctx.report.outcome = full ? "runs for " + std::to_string(steps) + " steps" : "halts before " +
                                                                                      std::to_string(steps) + " steps";
    return kOk;
}

int run_witness(Context& ctx, const std::string& tileset_path, int max_n, int max_m, bool full_gamma,
                const std::string& encoding, std::size_t budget, const std::optional<std::string>& out_path)
{
    const TileSet ts = parse_tileset(ctx.load(tileset_path));
    TorusSatOptions options;
    options.max_n = max_n;
    options.max_m = max_m;
    options.target = full_gamma ? TorusTarget::Gamma : TorusTarget::GammaT;
    options.encoding = parse_encoding(encoding);
    options.budget = budget;
    const TorusSatResult r = torus_sat(ts, options);
    ctx.report.nodes = r.nodes;
    ctx.report.bound = std::to_string(max_n) + "x" + std::to_string(max_m);
    ctx.report.detail("target", full_gamma ? "gamma" : "gamma_T");
    ctx.report.detail("encoding", encoding);
    if (!r.witness) {
        ctx.report.outcome = "none up to " + *ctx.report.bound;
        return kNo;
    }
    const auto bundle = witness_bundle(ts, *r.witness).dump(2) + "\n";
    if (out_path)
        ctx.write_file(*out_path, bundle);
    else
        ctx.out << bundle;
    ctx.report.detail("torus", std::to_string(r.witness->tiling.shape.cols) + "x" +
                                   std::to_string(r.witness->tiling.shape.rows));
    ctx.report.outcome = "witness found";
    return kOk;
}

int run_find_model(Context& ctx, const std::string& formula_arg, std::size_t max_states, bool det,
                   std::size_t budget, const std::optional<std::string>& out_path)
{
    const Prop f = parse_prop(ctx.load_formula(formula_arg));
    ctx.report.bound = std::to_string(max_states) + " states";
    BoundedSatResult r;
    try {
        r = bounded_sat(f, {max_states, det, budget});
    } catch (const BudgetExceeded& e) {
        ctx.report.nodes = e.nodes();
        throw;
    }
    ctx.report.nodes = r.nodes;
    if (!r.model) {
        ctx.report.outcome = "none up to " + std::to_string(max_states) + " states";
        return kNo;
    }
    const auto text = to_json(*r.model).dump(2) + "\n";
    if (out_path)
        ctx.write_file(*out_path, text);
    else
        ctx.out << text;
    ctx.report.outcome = "model with " + std::to_string(r.model->states.size()) + " states satisfies at s0";
    return kOk;
}

int run_identities(Context& ctx, std::uint64_t seed, std::size_t models, bool det)
{
    const auto report =
        run_identity_suite(seed, models, det ? DeterminismMode::DeterministicOnly : DeterminismMode::Mixed);
    for (const auto& f : report.failures) {
        ctx.out << "FAIL " << f.law << " on model " << f.model_index << " at " << f.model.states[f.witness.state];
        if (f.witness.target)
            ctx.out << " -> " << f.model.states[*f.witness.target];
        ctx.out << '\n';
    }
    ctx.report.detail("models", std::to_string(report.models));
    ctx.report.detail("deterministic_models", std::to_string(report.deterministic_models));
    ctx.report.detail("checks", std::to_string(report.checks));
    ctx.report.detail("failures", std::to_string(report.failures.size()));
    ctx.report.outcome = report.passed() ? "all identities hold" : "identity violated";
    return report.passed() ? kOk : kNo;
}

int run_destar(Context& ctx, const std::string& formula_arg)
{
    const Prop f = destar(parse_prop(ctx.load_formula(formula_arg)));
    ctx.out << print_prop(f) << '\n';
    ctx.report.detail("strict", is_strict(f) ? "yes" : "no");
    ctx.report.outcome = "rewritten";
    return kOk;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Workbench for PDL with fix, Fix and program equivalence", "pdlw"};
    app.require_subcommand(1);
    std::string json_report;
    app.add_option("--json-report", json_report, "Also write the run report as JSON");

    std::function<int(Context&)> action;

    std::string model_path, formula, tileset_path, tm_path, dir, shape, encoding = "fix", form = "star";
    std::optional<std::string> state, origin, out_path;
    std::size_t steps = 0, max_states = 1, models = 100, budget = 0;
    std::uint64_t seed = 0;
    int max_n = 1, max_m = 1;
    bool det = false, full_gamma = false, all = false;

    auto* check = app.add_subcommand("check", "Model-check a formula");
    check->add_option("MODEL", model_path)->required();
    check->add_option("FORMULA", formula, "Formula file or text")->required();
    check->add_option("--state", state);
    check->callback([&] { action = [&](Context& c) { return run_check(c, model_path, formula, state); }; });

    auto* red = app.add_subcommand("reduce", "Write square, rho1-3, gamma and gamma_T for a tile set");
    red->add_option("TILESET", tileset_path)->required();
    red->add_option("--out", dir)->required();
    red->add_option("--encoding", encoding)->check(CLI::IsMember({"fix", "tie"}));
    red->add_option("--form", form)->check(CLI::IsMember({"star", "while"}));
    red->callback([&] { action = [&](Context& c) { return run_reduce(c, tileset_path, dir, encoding, form); }; });

    auto* tile = app.add_subcommand("tile", "Search a rectangle or torus tiling");
    tile->add_option("TILESET", tileset_path)->required();
    tile->add_option("--shape", shape)->required();
    tile->add_option("--origin", origin);
    tile->add_option("--out", out_path);
    tile->callback([&] { action = [&](Context& c) { return run_tile(c, tileset_path, shape, origin, out_path); }; });

    auto* ctm = app.add_subcommand("compile-tm", "Compile a Turing machine into tiles");
    ctm->add_option("TM", tm_path)->required();
    ctm->add_option("--out", dir)->required();
    ctm->callback([&] { action = [&](Context& c) { return run_compile_tm(c, tm_path, dir); }; });

    auto* sim = app.add_subcommand("simulate-tm", "Run a Turing machine");
    sim->add_option("TM", tm_path)->required();
    sim->add_option("--steps", steps)->required();
    sim->add_flag("--all", all, "Every branch instead of the first transition");
    sim->callback([&] { action = [&](Context& c) { return run_simulate(c, tm_path, steps, all); }; });

    auto* wit = app.add_subcommand("witness", "Search a torus model of gamma_T (or gamma)");
    wit->add_option("TILESET", tileset_path)->required();
    wit->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);
    wit->add_option("--max-m", max_m)->required()->check(CLI::PositiveNumber);
    wit->add_flag("--full-gamma", full_gamma);
    wit->add_option("--encoding", encoding)->check(CLI::IsMember({"fix", "tie"}));
    wit->add_option("--budget", budget);
    wit->add_option("--out", out_path);
    wit->callback([&] {
        action = [&](Context& c) {
            return run_witness(c, tileset_path, max_n, max_m, full_gamma, encoding, budget, out_path);
        };
    });

    auto* find = app.add_subcommand("find-model", "Search all small models");
    find->add_option("FORMULA", formula)->required();
    find->add_option("--max-states", max_states)->required()->check(CLI::PositiveNumber);
    find->add_flag("--det", det);
    find->add_option("--budget", budget);
    find->add_option("--out", out_path);
    find->callback(
        [&] { action = [&](Context& c) { return run_find_model(c, formula, max_states, det, budget, out_path); }; });

    auto* ids = app.add_subcommand("identities", "Check the interdefinability laws on random models");
    ids->add_option("--seed", seed)->required();
    ids->add_option("--models", models)->required();
    ids->add_flag("--det", det);
    ids->callback([&] { action = [&](Context& c) { return run_identities(c, seed, models, det); }; });

    auto* ds = app.add_subcommand("destar", "Replace stars by while loops");
    ds->add_option("FORMULA", formula)->required();
    ds->callback([&] { action = [&](Context& c) { return run_destar(c, formula); }; });

    std::string echo = "pdlw";
    for (const auto& a : args)
        echo += " " + a;
    Context ctx{out, {}};
    ctx.report.command = echo;

    const auto started = std::chrono::steady_clock::now();
    int code = kInputError;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        code = action(ctx);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        ctx.report.outcome = std::string("usage error: ") + e.what();
        code = kInputError;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        ctx.report.outcome = "budget exhausted";
        ctx.report.detail("progress", e.progress());
        code = kBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        ctx.report.outcome = std::string("input error: ") + e.what();
        code = kInputError;
    }
    ctx.report.exit_code = code;
    ctx.report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    ctx.report.print(out);
    if (!json_report.empty()) {
        std::ofstream os(json_report);
        os << ctx.report.to_json().dump(2) << '\n';
    }
    return code;
}

} // namespace pdl::cli
