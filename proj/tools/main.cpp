// Command-line front end: point evaluation, grid tables, the reference
// truncation-error table, and timing comparisons, all emitted as CSV.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "syncfn/bessel.hpp"
#include "syncfn/errors.hpp"
#include "syncfn/format.hpp"
#include "syncfn/oracle.hpp"
#include "syncfn/synchrotron.hpp"
#include "syncfn/table1.hpp"

namespace {

using namespace syncfn;

constexpr const char* kRowHeader = "x,value,regime,order_used,abs_error_estimate";

struct CommonOpts {
    std::string fn = "F";
    double nu = 5.0 / 3.0;
    double rel_tol = 1e-9;
    std::string precision = "double";
    std::string regime = "auto";
};

struct GridOpts {
    double start = 1e-4;
    double stop = 50.0;
    int points = 200;
    bool log_spacing = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_regime = true) {
    cmd->add_option("--fn", o.fn, "function to evaluate")
        ->check(CLI::IsMember({"F", "K"}));
    cmd->add_option("--nu", o.nu, "Bessel order (fn K)");
    cmd->add_option("--rel-tol", o.rel_tol, "requested relative tolerance")
        ->envname("SYNCFN_REL_TOL");
    cmd->add_option("--precision", o.precision, "working precision")
        ->check(CLI::IsMember({"double", "extended"}))
        ->envname("SYNCFN_PRECISION");
    if (with_regime)
        cmd->add_option("--regime", o.regime, "force an evaluation route")
            ->check(CLI::IsMember({"auto", "closed", "small", "large", "oracle"}));
}

void add_grid(CLI::App* cmd, GridOpts& g) {
    cmd->add_option("--start", g.start, "first grid point");
    cmd->add_option("--stop", g.stop, "last grid point");
    cmd->add_option("--points", g.points, "number of grid points");
    cmd->add_flag("--log", g.log_spacing, "logarithmic spacing");
}

void check_grid(const GridOpts& g) {
    if (!(g.start < g.stop)) throw DomainError("grid: start must be less than stop");
    if (g.points < 2) throw DomainError("grid: points must be at least 2");
    if (g.log_spacing && !(g.start > 0.0))
        throw DomainError("grid: logarithmic spacing requires start > 0");
}

double grid_point(const GridOpts& g, int i) {
    double t = double(i) / double(g.points - 1);
    if (g.log_spacing)
        return std::exp(std::log(g.start) + t * (std::log(g.stop) - std::log(g.start)));
    return g.start + t * (g.stop - g.start);
}

QuadratureConfig oracle_config(double rel_tol) {
    QuadratureConfig q;
    q.rel_tol = std::min(1e-12, rel_tol / 2.0);
    q.tail_eps = std::min(1e-14, rel_tol / 8.0);
    return q;
}

EvalResult eval_F(double x, const CommonOpts& o) {
    const bool ext = o.precision == "extended";
    if (o.regime == "auto") {
        EvalConfig cfg;
        cfg.precision = ext ? Precision::Extended : Precision::Double;
        return f_eval(x, o.rel_tol, cfg);
    }
    if (o.regime == "closed")
        return ext ? narrow(f_closed(DoubleDouble(x), DoubleDouble(o.rel_tol)))
                   : f_closed(x, o.rel_tol);
    if (o.regime == "small")
        return ext ? narrow(f_small_x(DoubleDouble(x), SmallXTruncation{}))
                   : f_small_x(x, SmallXTruncation{});
    if (o.regime == "large")
        return ext ? narrow(f_large_x(DoubleDouble(x))) : f_large_x(x);
    return ext ? narrow(f_quadrature(DoubleDouble(x), oracle_config(o.rel_tol)))
               : f_quadrature(x, oracle_config(o.rel_tol));
}

EvalResult eval_K(double x, const CommonOpts& o) {
    const bool ext = o.precision == "extended";
    const DoubleDouble nu_dd = DoubleDouble(o.nu);
    if (o.regime == "auto") return bessel_k(o.nu, x, o.rel_tol);
    if (o.regime == "closed")
        return ext ? narrow(bessel_k_convergent(nu_dd, DoubleDouble(x),
                                                DoubleDouble(o.rel_tol)))
                   : bessel_k_convergent(o.nu, x, o.rel_tol);
    if (o.regime == "large")
        return ext ? narrow(bessel_k_asymptotic(nu_dd, DoubleDouble(x)))
                   : bessel_k_asymptotic(o.nu, x);
    if (o.regime == "oracle")
        return ext ? narrow(k_nu_quadrature(nu_dd, DoubleDouble(x), oracle_config(o.rel_tol)))
                   : k_nu_quadrature(o.nu, x, oracle_config(o.rel_tol));
    throw DomainError("eval: regime 'small' applies only to --fn F");
}

EvalResult eval_point(double x, const CommonOpts& o) {
    return o.fn == "F" ? eval_F(x, o) : eval_K(x, o);
}

std::string result_row(double x, const EvalResult& r) {
    return format_shortest(x) + "," + format_shortest(r.value) + "," + regime_name(r.regime) +
           "," + std::to_string(r.order_used) + "," + format_shortest(r.abs_error_estimate);
}

int cmd_eval(double x, const CommonOpts& o) {
    EvalResult r = eval_point(x, o);
    std::cout << kRowHeader << "\n" << result_row(x, r) << "\n";
    return 0;
}

int cmd_grid(const CommonOpts& o, const GridOpts& g, const std::string& out_path) {
    check_grid(g);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "grid: cannot open output file: " << out_path << "\n";
            return 2;
        }
        out = &file;
    }
    std::string buf;
    buf += kRowHeader;
    buf += "\n";
    for (int i = 0; i < g.points; ++i) {
        double x = grid_point(g, i);
        try {
            buf += result_row(x, eval_point(x, o));
        } catch (const Error&) {
            buf += format_shortest(x) + ",,error,0,";
        }
        buf += "\n";
    }
    (*out) << buf;
    out->flush();
    if (!*out) {
        std::cerr << "grid: write failed" << (out_path.empty() ? "" : ": " + out_path) << "\n";
        return 2;
    }
    return 0;
}

int cmd_table1() {
    Table1Outcome t = run_table1();
    std::cout << "x,terms,s_m,f_exact,expected_f_exact,rel_err,expected_rel_err,ok\n";
    for (const Table1Row& r : t.rows) {
        int xi = r.x == 0.001 ? 0 : (r.x == 0.01 ? 1 : 2);
        std::cout << format_shortest(r.x) << "," << r.terms << "," << format_shortest(r.s_m)
                  << "," << format_shortest(r.f_exact) << ","
                  << format_shortest(t.expected_f_exact[std::size_t(xi)]) << ","
                  << format_shortest(r.rel_err) << "," << format_shortest(r.expected_rel_err)
                  << "," << (r.ok ? "true" : "false") << "\n";
    }
    if (!t.all_ok) {
        for (const Table1Row& r : t.rows)
            if (!r.ok)
                std::cerr << "table1: mismatch at x=" << r.x << " M=" << r.terms
                          << ": rel_err=" << r.rel_err << " expected " << r.expected_rel_err
                          << "\n";
        for (int i = 0; i < 3; ++i)
            if (!t.f_exact_ok[std::size_t(i)])
                std::cerr << "table1: F mismatch at x index " << i << "\n";
        return 1;
    }
    return 0;
}

int cmd_bench(const CommonOpts& o, const GridOpts& g, int repetitions) {
    check_grid(g);
    if (repetitions < 1) throw DomainError("bench: repetitions must be at least 1");
    using clock = std::chrono::steady_clock;

    auto median_latency = [&](auto&& f) {
        std::vector<double> per_point;
        per_point.reserve(std::size_t(g.points) * std::size_t(repetitions));
        for (int rep = 0; rep < repetitions; ++rep) {
            for (int i = 0; i < g.points; ++i) {
                double x = grid_point(g, i);
                auto t0 = clock::now();
                f(x);
                auto t1 = clock::now();
                per_point.push_back(std::chrono::duration<double>(t1 - t0).count());
            }
        }
        std::sort(per_point.begin(), per_point.end());
        return per_point[per_point.size() / 2];
    };

    double series, oracle;
    if (o.fn == "F") {
        series = median_latency([&](double x) { return f_eval(x, o.rel_tol); });
        QuadratureConfig q = oracle_config(o.rel_tol);
        oracle = median_latency([&](double x) { return f_quadrature(x, q); });
    } else {
        series = median_latency([&](double x) { return bessel_k(o.nu, x, o.rel_tol); });
        QuadratureConfig q = oracle_config(o.rel_tol);
        oracle = median_latency([&](double x) { return k_nu_quadrature(o.nu, x, q); });
    }
    const char* noisy = repetitions == 1 ? "true" : "false";
    std::cout << "route,median_seconds_per_point,points,repetitions,noisy\n";
    std::cout << "series," << format_shortest(series) << "," << g.points << "," << repetitions
              << "," << noisy << "\n";
    std::cout << "oracle," << format_shortest(oracle) << "," << g.points << "," << repetitions
              << "," << noisy << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"synchrotron function and modified Bessel K_nu evaluator"};
    app.require_subcommand(1);

    CommonOpts eval_opts;
    double eval_x = 0.0;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one point, print a CSV row");
    add_common(eval_cmd, eval_opts);
    eval_cmd->add_option("--x", eval_x, "argument")->required();

    CLI::App* table_cmd =
        app.add_subcommand("table1", "recompute the small-x truncation-error reference table");

    CommonOpts grid_opts;
    GridOpts grid_grid;
    std::string grid_out;
    CLI::App* grid_cmd = app.add_subcommand("grid", "evaluate on a grid, emit CSV");
    add_common(grid_cmd, grid_opts);
    add_grid(grid_cmd, grid_grid);
    grid_cmd->add_option("--out", grid_out, "output file (default stdout)");

    CommonOpts bench_opts;
    GridOpts bench_grid;
    int bench_reps = 5;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "time series routes against the quadrature oracle");
    add_common(bench_cmd, bench_opts, /*with_regime=*/false);
    add_grid(bench_cmd, bench_grid);
    bench_cmd->add_option("--repetitions", bench_reps, "timing repetitions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval_cmd->parsed()) {
            if (eval_opts.fn == "F" && eval_cmd->count("--nu") > 0)
                throw DomainError("eval: --nu is only supported with --fn K");
            return cmd_eval(eval_x, eval_opts);
        }
        if (table_cmd->parsed()) return cmd_table1();
        if (grid_cmd->parsed()) return cmd_grid(grid_opts, grid_grid, grid_out);
        if (bench_cmd->parsed()) return cmd_bench(bench_opts, bench_grid, bench_reps);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
