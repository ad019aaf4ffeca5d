// Command-line front end: exact zonal polynomial computations, verification
// suites, and the zero-pattern bitmap.
//
// Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage
// error, 3 I/O error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zonal/closed_forms.hpp"
#include "zonal/coefficients.hpp"
#include "zonal/hypergeometric.hpp"
#include "zonal/io.hpp"
#include "zonal/verify.hpp"
#include "zonal/wishart.hpp"
#include "zonal/zonal_polynomials.hpp"

namespace {

std::vector<zonal::Rational> parse_rational_list(const std::string& text) {
    std::vector<zonal::Rational> out;
    if (text.empty()) return out;
    std::istringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) out.push_back(zonal::rational_from_string(token));
    return out;
}

std::vector<std::string> parse_name_list(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token.empty()) throw std::invalid_argument("empty variable name");
        out.push_back(token);
    }
    return out;
}

zonal::Partition parse_partition_warned(const std::string& text) {
    bool reordered = false;
    zonal::Partition p = zonal::parse_partition_arg(text, &reordered);
    if (reordered)
        std::cerr << "warning: partition " << text << " reordered to " << p.to_string() << "\n";
    return p;
}

int run(int argc, char** argv) {
    CLI::App app{"exact zonal polynomial computations"};
    app.require_subcommand(1);

    // poly
    auto* poly = app.add_subcommand("poly", "zonal polynomial C_kappa");
    std::string poly_partition;
    int poly_vars = 0;
    std::string poly_names;
    bool poly_m_basis = false;
    bool poly_json = false;
    poly->add_option("partition", poly_partition, "partition, e.g. 3,1")->required();
    poly->add_option("--vars", poly_vars, "number of variables (default: number of parts)");
    poly->add_option("--names", poly_names, "comma-separated variable names");
    poly->add_flag("--m-basis", poly_m_basis, "print coordinates over the monomial symmetric basis");
    poly->add_flag("--json", poly_json, "JSON output");

    // coeff
    auto* coeff = app.add_subcommand("coeff", "coefficient c_{kappa,lambda}");
    std::string coeff_kappa, coeff_lambda;
    coeff->add_option("kappa", coeff_kappa)->required();
    coeff->add_option("lambda", coeff_lambda)->required();

    // table
    auto* table_cmd = app.add_subcommand("table", "full coefficient table for weight n");
    int table_n = 0;
    bool table_json = false;
    int table_threads = 1;
    table_cmd->add_option("n", table_n)->required()->check(CLI::PositiveNumber);
    table_cmd->add_flag("--json", table_json, "JSON output");
    table_cmd->add_option("--threads", table_threads, "parallel table construction");

    // zeros
    auto* zeros = app.add_subcommand("zeros", "zero-pattern bitmap (plain PBM)");
    int zeros_n = 0;
    std::string zeros_path;
    zeros->add_option("n", zeros_n)->required()->check(CLI::PositiveNumber);
    zeros->add_option("path", zeros_path, "output file, or - for stdout")->required();

    // pfq
    auto* pfq = app.add_subcommand("pfq", "truncated hypergeometric function of a matrix argument");
    std::string pfq_upper, pfq_lower, pfq_eigs;
    int pfq_order = 0;
    bool pfq_float = false;
    pfq->add_option("--upper", pfq_upper, "upper parameters, e.g. 1/2,3/2");
    pfq->add_option("--lower", pfq_lower, "lower parameters");
    pfq->add_option("--eigs", pfq_eigs, "eigenvalues of the argument")->required();
    pfq->add_option("--order", pfq_order, "truncation order (all weights <= N)")->required();
    pfq->add_flag("--float", pfq_float, "evaluate in double precision instead of exactly");

    // verify
    auto* verify = app.add_subcommand("verify", "verification suites");
    std::string suite;
    verify->add_option("--suite", suite, "closed-forms|conjectures|identities|laplace|wishart|trace")
        ->required();
    int v_n_max = -1, v_m_max = -1, v_a_max = -1, v_a4_max = -1;
    int v_row1 = 20, v_twopart = 24, v_corner_large = 18, v_corner_small = 20;
    long v_samples = 100000;
    std::uint64_t v_seed = 42;
    int v_threads = 1;
    int v_n = 4, v_m = 2, v_nu = 3;
    std::string v_y;
    verify->add_option("--n-max", v_n_max);
    verify->add_option("--m-max", v_m_max);
    verify->add_option("--a-max", v_a_max);
    verify->add_option("--a4-max", v_a4_max);
    verify->add_option("--row1-n-max", v_row1);
    verify->add_option("--twopart-max", v_twopart);
    verify->add_option("--corner-largest-n-max", v_corner_large);
    verify->add_option("--corner-smallest-n-max", v_corner_small);
    verify->add_option("--samples", v_samples);
    verify->add_option("--seed", v_seed);
    verify->add_option("--threads", v_threads);
    verify->add_option("--n", v_n);
    verify->add_option("--m", v_m);
    verify->add_option("--nu", v_nu);
    verify->add_option("--y", v_y, "evaluation point for the wishart suite");

    // wishart
    auto* wishart = app.add_subcommand("wishart", "Monte-Carlo expectation against exact targets");
    int w_n = 4, w_m = 2, w_nu = 3;
    long w_samples = 100000;
    std::uint64_t w_seed = 42;
    std::string w_y;
    int w_threads = 1;
    wishart->add_option("--n", w_n)->required();
    wishart->add_option("--m", w_m)->required();
    wishart->add_option("--nu", w_nu)->required();
    wishart->add_option("--samples", w_samples);
    wishart->add_option("--seed", w_seed);
    wishart->add_option("--y", w_y, "diagonal of Y (default 1,2,...,m)");
    wishart->add_option("--threads", w_threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (poly->parsed()) {
        const zonal::Partition kappa = parse_partition_warned(poly_partition);
        zonal::CoeffTable table(kappa.weight());
        if (poly_m_basis) {
            const zonal::SymM coords = zonal::zonal_polynomial_m(kappa, table);
            std::cout << (poly_json ? zonal::symm_to_json(coords) : zonal::symm_to_text(coords))
                      << "\n";
            return 0;
        }
        std::vector<std::string> names;
        if (!poly_names.empty()) names = parse_name_list(poly_names);
        int m = poly_vars;
        if (!names.empty()) {
            if (m > 0 && m != static_cast<int>(names.size()))
                throw std::invalid_argument("--vars disagrees with --names");
            m = static_cast<int>(names.size());
        }
        if (m == 0) m = std::max(1, kappa.length());
        const zonal::MPoly p = zonal::zonal_polynomial(kappa, m, table);
        std::cout << (poly_json ? zonal::mpoly_to_json(p) : p.to_string(names)) << "\n";
        return 0;
    }

    if (coeff->parsed()) {
        const zonal::Partition kappa = parse_partition_warned(coeff_kappa);
        const zonal::Partition lambda = parse_partition_warned(coeff_lambda);
        std::cout << zonal::to_string(zonal::coefficient(kappa, lambda)) << "\n";
        return 0;
    }

    if (table_cmd->parsed()) {
        zonal::CoeffTable table(table_n);
        table.build_all(table_threads);
        std::cout << (table_json ? zonal::table_to_json(table) : zonal::table_to_text(table));
        return 0;
    }

    if (zeros->parsed()) {
        if (zeros_path == "-") {
            zonal::write_zero_bitmap(zeros_n, std::cout);
            return std::cout ? 0 : 3;
        }
        std::ofstream out(zeros_path);
        if (!out) {
            std::cerr << "error: cannot open " << zeros_path << " for writing\n";
            return 3;
        }
        zonal::write_zero_bitmap(zeros_n, out);
        out.flush();
        if (!out) {
            std::cerr << "error: failed writing " << zeros_path << "\n";
            return 3;
        }
        return 0;
    }

    if (pfq->parsed()) {
        const auto upper = parse_rational_list(pfq_upper);
        const auto lower = parse_rational_list(pfq_lower);
        const auto eigs = parse_rational_list(pfq_eigs);
        if (pfq_float) {
            zonal::PfqSpec<double> spec;
            for (const auto& r : upper) spec.upper.push_back(zonal::to_double(r));
            for (const auto& r : lower) spec.lower.push_back(zonal::to_double(r));
            spec.order = pfq_order;
            std::vector<double> point;
            for (const auto& r : eigs) point.push_back(zonal::to_double(r));
            std::ostringstream s;
            s.precision(17);
            s << zonal::matrix_pfq(spec, point);
            std::cout << s.str() << "\n";
        } else {
            zonal::PfqSpec<zonal::Rational> spec{upper, lower, pfq_order};
            std::cout << zonal::to_string(zonal::matrix_pfq(spec, eigs)) << "\n";
        }
        return 0;
    }

    if (verify->parsed()) {
        zonal::VerifyReport report;
        if (suite == "trace") {
            report = zonal::verify_trace(v_n_max < 0 ? 10 : v_n_max, v_m_max < 0 ? 4 : v_m_max,
                                         v_threads);
        } else if (suite == "laplace") {
            report = zonal::verify_laplace(v_n_max < 0 ? 6 : v_n_max, v_m_max < 0 ? 6 : v_m_max);
        } else if (suite == "closed-forms") {
            report = zonal::verify_closed_forms(v_row1, v_twopart, v_corner_large, v_corner_small);
        } else if (suite == "conjectures") {
            const int a3 = v_a_max < 0 ? 8 : v_a_max;
            const int a4 = v_a4_max < 0 ? std::min(a3, 6) : v_a4_max;
            report = zonal::verify_conjectures(a3, a4);
        } else if (suite == "identities") {
            report = zonal::verify_identities_suite(v_a_max < 0 ? 25 : v_a_max);
        } else if (suite == "wishart") {
            std::vector<zonal::Rational> y =
                v_y.empty() ? std::vector<zonal::Rational>() : parse_rational_list(v_y);
            if (y.empty())
                for (int i = 1; i <= v_m; ++i) y.emplace_back(i);
            report = zonal::verify_wishart(v_n, v_m, v_nu, y, v_samples, v_seed, v_threads);
        } else {
            std::cerr << "error: unknown suite " << suite << "\n";
            return 2;
        }
        std::cout << zonal::report_to_json(report) << "\n";
        return report.pass() ? 0 : 1;
    }

    if (wishart->parsed()) {
        std::vector<zonal::Rational> y =
            w_y.empty() ? std::vector<zonal::Rational>() : parse_rational_list(w_y);
        if (y.empty())
            for (int i = 1; i <= w_m; ++i) y.emplace_back(i);
        const zonal::McReport report =
            zonal::mc_expectation_u(w_n, w_m, w_nu, y, w_samples, w_seed, w_threads);
        std::cout << zonal::mc_report_to_json(report) << "\n";
        return report.pass ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
