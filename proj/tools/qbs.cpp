// qbs: evaluate the q-Bernstein-Stancu-Kantorovich operator family, emit
// moment/convergence tables as CSV, and run the oracle verification suite.
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbs/analysis.hpp"
#include "qbs/csv.hpp"
#include "qbs/functions.hpp"
#include "qbs/moments.hpp"
#include "qbs/operators.hpp"
#include "qbs/verify.hpp"

namespace {

struct RunConfig {
    std::string command;
    std::string kind = "q-kantorovich-stancu";
    int n = 32;
    std::string n_list;
    std::string x_list;
    std::string q_list;
    double q = 0.9;
    bool q_set = false;
    std::string qseq;
    double alpha1 = 0, alpha2 = 0, beta1 = 0, beta2 = 0;
    bool params_set = false;
    std::string function = "fig6";
    int grid = 501;
    std::string out;
    double tol = 1e-14;
    int max_terms = 4096;
    double const_C = 4.0;
    std::string mutate = "none";
    std::optional<double> lip_M;
    std::optional<double> lip_alpha;
};

std::vector<double> split_doubles(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(std::string(what) + ": bad number '" + item + "'");
    }
    if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

std::vector<int> split_ints(const std::string& text, const char* what) {
    std::vector<int> out;
    for (double v : split_doubles(text, what)) {
        if (v != std::floor(v)) throw std::invalid_argument(std::string(what) + ": expected integers");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

qbs::QSequence parse_qseq(const RunConfig& cfg) {
    if (!cfg.qseq.empty()) {
        const std::string& s = cfg.qseq;
        const auto colon = s.rfind(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("qseq: expected one-minus-c/N:<c> or nthroot:<a>");
        const std::string head = s.substr(0, colon);
        const double value = std::stod(s.substr(colon + 1));
        if (head == "one-minus-c/N") return qbs::QSequence::one_minus_c_over_n(value);
        if (head == "nthroot") return qbs::QSequence::nth_root_of(value);
        throw std::invalid_argument("qseq: unknown kind '" + head + "'");
    }
    return qbs::QSequence::fixed(qbs::QValue(cfg.q));
}

qbs::StancuParams params_of(const RunConfig& cfg) {
    return {cfg.alpha1, cfg.alpha2, cfg.beta1, cfg.beta2};
}

qbs::OperatorSpec spec_of(const RunConfig& cfg, int n, qbs::QValue q) {
    using qbs::OperatorSpec;
    if (cfg.kind == "bernstein") return OperatorSpec::bernstein(n);
    if (cfg.kind == "kantorovich") return OperatorSpec::kantorovich(n);
    if (cfg.kind == "q-bernstein-kantorovich")
        return OperatorSpec::q_bernstein_kantorovich(n, q);
    if (cfg.kind == "stancu-shifted") return OperatorSpec::stancu_shifted(n, params_of(cfg));
    if (cfg.kind == "kantorovich-stancu")
        return OperatorSpec::kantorovich_stancu(n, params_of(cfg));
    if (cfg.kind == "q-kantorovich-stancu")
        return OperatorSpec::q_kantorovich_stancu(n, q, params_of(cfg));
    throw std::invalid_argument("unknown operator kind '" + cfg.kind + "'");
}

qbs::TargetFunction function_of(const RunConfig& cfg) {
    qbs::TargetFunction f = qbs::parse_function(cfg.function);
    if (cfg.lip_M && cfg.lip_alpha) f.with_lipschitz(*cfg.lip_M, *cfg.lip_alpha);
    return f;
}

void emit(const RunConfig& cfg, const qbs::CsvTable& table) {
    const std::string text = qbs::to_csv(table);
    if (cfg.out.empty())
        std::cout << text;
    else
        qbs::write_text_file(cfg.out, text);
}

int cmd_eval(const RunConfig& cfg) {
    if (cfg.x_list.empty()) throw std::invalid_argument("eval: --x is required");
    const qbs::TargetFunction f = function_of(cfg);
    const qbs::JacksonTolerance tol(cfg.tol, cfg.max_terms);
    const qbs::Evaluator op(spec_of(cfg, cfg.n, qbs::QValue(cfg.q)), f, tol);
    qbs::CsvTable table{{"x", "value"}, {}};
    for (double x : split_doubles(cfg.x_list, "--x")) {
        const double v = op(x);
        std::cout << qbs::format_number(x) << " " << qbs::format_number(v) << "\n";
        table.rows.push_back({x, v});
    }
    if (!cfg.out.empty()) qbs::write_text_file(cfg.out, qbs::to_csv(table));
    return 0;
}

int cmd_moments(const RunConfig& cfg) {
    const qbs::JacksonTolerance tol(cfg.tol, cfg.max_terms);
    const qbs::OperatorSpec spec =
        qbs::OperatorSpec::q_kantorovich_stancu(cfg.n, qbs::QValue(cfg.q), params_of(cfg));
    const qbs::StancuDomain dom = spec.domain();
    qbs::CsvTable table{{"x", "m0", "m1", "m2", "central2", "central2_bound"}, {}};
    for (int i = 0; i < cfg.grid; ++i) {
        const double x = std::lerp(dom.a, dom.b, static_cast<double>(i) / (cfg.grid - 1));
        const qbs::MomentReport r = qbs::moment_report(spec, x, tol);
        table.rows.push_back({x, r.m0, r.m1, r.m2, r.central2, r.central2_bound});
    }
    emit(cfg, table);
    return 0;
}

qbs::CsvTable sweep_table(const RunConfig& cfg_in) {
    RunConfig cfg = cfg_in;
    if (!cfg.params_set) {
        // Default sweep preset: the canonical ordering-satisfying shifts.
        cfg.alpha1 = 1;
        cfg.alpha2 = 2;
        cfg.beta1 = 3;
        cfg.beta2 = 4;
    }
    const qbs::TargetFunction f = function_of(cfg);
    qbs::CsvTable table{{"n", "q", "sup_error", "bound", "x_argmax"}, {}};
    if (!cfg.q_list.empty()) {
        // Fixed-n sweep across q values.
        for (double qv : split_doubles(cfg.q_list, "--q-list")) {
            const std::vector<int> ns = {cfg.n};
            const auto rows = qbs::convergence_sweep(f, qbs::QSequence::fixed(qbs::QValue(qv)),
                                                     params_of(cfg), ns, cfg.grid);
            for (const auto& r : rows)
                table.rows.push_back({static_cast<double>(r.n), r.q, r.sup_error,
                                      r.bound.value_or(std::nan("")), r.x_argmax});
        }
        return table;
    }
    const std::vector<int> ns =
        cfg.n_list.empty() ? std::vector<int>{4, 8, 16, 32, 64} : split_ints(cfg.n_list, "--n-list");
    qbs::QSequence seq = cfg.qseq.empty() && !cfg.q_set
                             ? qbs::QSequence::one_minus_c_over_n(1.0)
                             : parse_qseq(cfg);
    for (const auto& r : qbs::convergence_sweep(f, seq, params_of(cfg), ns, cfg.grid))
        table.rows.push_back({static_cast<double>(r.n), r.q, r.sup_error,
                              r.bound.value_or(std::nan("")), r.x_argmax});
    return table;
}

int cmd_sweep(const RunConfig& cfg) {
    emit(cfg, sweep_table(cfg));
    return 0;
}

int cmd_plot(const RunConfig& cfg) {
    if (cfg.out.empty()) throw std::invalid_argument("plot: --out <csv path> is required");
    const qbs::CsvTable table = sweep_table(cfg);
    qbs::write_text_file(cfg.out, qbs::to_csv(table));
    const std::string script_path = cfg.out + ".gp";
    std::ostringstream gp;
    gp << "# gnuplot script generated by qbs plot\n"
       << "set datafile separator \",\"\n"
       << "set key top right\n"
       << "set logscale y\n"
       << "set xlabel \"n\"\n"
       << "set ylabel \"sup error on [a,b]\"\n"
       << "set title \"" << cfg.function << ": operator error vs n\"\n"
       << "plot \"" << cfg.out << "\" every ::1 using 1:3 with linespoints title \"sup error\", \\\n"
       << "     \"" << cfg.out << "\" every ::1 using 1:4 with linespoints title \"2 w(delta_n)\"\n";
    qbs::write_text_file(script_path, gp.str());
    std::cout << "wrote " << cfg.out << " and " << script_path << "\n";
    return 0;
}

int cmd_voronovskaja(const RunConfig& cfg) {
    qbs::TargetFunction f = function_of(cfg);
    const std::vector<int> ns = cfg.n_list.empty() ? std::vector<int>{16, 64, 256}
                                                   : split_ints(cfg.n_list, "--n-list");
    qbs::QSequence seq = cfg.qseq.empty() ? qbs::QSequence::nth_root_of(0.5) : parse_qseq(cfg);
    const std::vector<double> xs = {0.2, 0.35, 0.5, 0.65, 0.8};
    qbs::CsvTable table{{"n", "q", "deviation"}, {}};
    for (int n : ns) {
        const double dev = qbs::voronovskaja_deviation(f, seq, params_of(cfg), n, xs);
        table.rows.push_back({static_cast<double>(n), seq.at(n).value(), dev});
    }
    emit(cfg, table);
    return 0;
}

int cmd_bounds(const RunConfig& cfg) {
    const qbs::TargetFunction f = function_of(cfg);
    const qbs::QValue q(cfg.q);
    const qbs::StancuParams p = params_of(cfg);
    const qbs::JacksonTolerance tol(cfg.tol, cfg.max_terms);
    const qbs::OperatorSpec spec = qbs::OperatorSpec::q_kantorovich_stancu(cfg.n, q, p);
    const qbs::Evaluator op(spec, f, tol);
    const qbs::StancuDomain dom = spec.domain();

    std::optional<double> thm_sup_bound;
    try {
        thm_sup_bound = qbs::global_modulus_bound(f, cfg.n, q, p);
    } catch (const std::domain_error&) {}
    std::optional<double> lip_bound;
    if (f.lipschitz() && thm_sup_bound)
        lip_bound = qbs::lipschitz_class_bound(f, cfg.n, q, p);

    qbs::CsvTable table;
    table.header = {"x", "error", "modulus_bound", "local_bound"};
    if (f.has_d1()) table.header.push_back("derivative_bound");
    if (lip_bound) table.header.push_back("lipschitz_bound");
    for (int i = 0; i < cfg.grid; ++i) {
        const double x = std::lerp(dom.a, dom.b, static_cast<double>(i) / (cfg.grid - 1));
        std::vector<double> row = {x, std::abs(op(x) - f(x)),
                                   thm_sup_bound.value_or(std::nan("")),
                                   qbs::local_smoothness_bound(f, cfg.n, q, p, x, cfg.const_C)};
        if (f.has_d1()) row.push_back(qbs::derivative_modulus_bound(f, cfg.n, q, p, x));
        if (lip_bound) row.push_back(*lip_bound);
        table.rows.push_back(std::move(row));
    }
    emit(cfg, table);
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    qbs::MomentTweak tweak;
    const auto site = qbs::parse_tweak_site(cfg.mutate);
    if (!site)
        throw std::invalid_argument("--mutate: expected one of " +
                                    std::string(qbs::tweak_site_names()));
    if (*site != qbs::MomentTweakSite::None) tweak = {*site, 1e-6};
    const qbs::VerifyReport report = qbs::run_verify(tweak);
    std::cout << qbs::format_report(report);
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-Bernstein-Stancu-Kantorovich operators: evaluation, moments, "
                 "convergence experiments, verification"};
    app.set_config("--config", "", "read key = value defaults from a file");
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&cfg](CLI::App* sub) {
        sub->fallthrough();
        sub->add_option("--kind", cfg.kind,
                        "bernstein|kantorovich|q-bernstein-kantorovich|stancu-shifted|"
                        "kantorovich-stancu|q-kantorovich-stancu");
        sub->add_option("--n", cfg.n, "operator degree");
        sub->add_option("--n-list", cfg.n_list, "comma-separated degrees");
        sub->add_option("--q", cfg.q, "fixed q in (0,1)")->check(CLI::Range(1e-12, 1.0, "(0,1)"));
        sub->add_option("--qseq", cfg.qseq, "one-minus-c/N:<c> or nthroot:<a>");
        sub->add_option("--alpha1", cfg.alpha1);
        sub->add_option("--alpha2", cfg.alpha2);
        sub->add_option("--beta1", cfg.beta1);
        sub->add_option("--beta2", cfg.beta2);
        sub->add_option("--f", cfg.function, "built-in name or expression in x");
        sub->add_option("--grid", cfg.grid, "evaluation grid points")->check(CLI::Range(2, 1000000));
        sub->add_option("--out", cfg.out, "output CSV path (stdout when omitted)");
        sub->add_option("--tol", cfg.tol, "Jackson series abs tolerance");
        sub->add_option("--max-terms", cfg.max_terms, "Jackson series term cap");
        sub->add_option("--const-C", cfg.const_C, "constant of the local smoothness bound");
        sub->add_option("--lip-m", cfg.lip_M, "override Lipschitz constant M");
        sub->add_option("--lip-alpha", cfg.lip_alpha, "override Lipschitz exponent alpha");
    };

    CLI::App* eval = app.add_subcommand("eval", "print operator values at given x");
    add_common(eval);
    eval->add_option("--x", cfg.x_list, "comma-separated evaluation points")->required();

    CLI::App* moments = app.add_subcommand("moments", "emit closed-form moment table");
    add_common(moments);

    CLI::App* sweep = app.add_subcommand("sweep", "sup-error vs n (or vs q with --q-list)");
    add_common(sweep);
    sweep->add_option("--q-list", cfg.q_list, "comma-separated q values (fixed-n sweep)");

    CLI::App* voro = app.add_subcommand("voronovskaja", "scaled deviation vs n");
    add_common(voro);

    CLI::App* bounds = app.add_subcommand("bounds", "pointwise error vs the closed bounds");
    add_common(bounds);

    CLI::App* verify = app.add_subcommand("verify", "run the oracle verification suite");
    add_common(verify);
    verify->add_option("--mutate", cfg.mutate,
                       std::string("seed a coefficient fault: ") + qbs::tweak_site_names());

    CLI::App* plot = app.add_subcommand("plot", "sweep CSV plus a gnuplot script");
    add_common(plot);
    plot->add_option("--q-list", cfg.q_list, "comma-separated q values (fixed-n sweep)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    cfg.q_set = eval->count("--q") || moments->count("--q") || sweep->count("--q") ||
                voro->count("--q") || bounds->count("--q") || plot->count("--q");
    for (const CLI::App* sub : {eval, moments, sweep, voro, bounds, plot})
        for (const char* opt : {"--alpha1", "--alpha2", "--beta1", "--beta2"})
            if (sub->count(opt)) cfg.params_set = true;
    try {
        if (eval->parsed()) return cmd_eval(cfg);
        if (moments->parsed()) return cmd_moments(cfg);
        if (sweep->parsed()) { cfg.command = "sweep"; return cmd_sweep(cfg); }
        if (voro->parsed()) return cmd_voronovskaja(cfg);
        if (bounds->parsed()) return cmd_bounds(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (plot->parsed()) return cmd_plot(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
