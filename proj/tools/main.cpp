// gtorbit: exact Gelfand-Tsetlin analysis of unitary coadjoint orbits.
//
// Exit codes: 0 success, 1 parse or file error, 2 unsupported input
// (spectrum with two or more repeated eigenvalues; plot with n != 3),
// 3 failing verification suites.

#include <CLI11.hpp>

#include <gtorbit/gtpolytope.hpp>
#include <gtorbit/json_io.hpp>
#include <gtorbit/reconstruct.hpp>
#include <gtorbit/skeleton.hpp>

#include "svg_plot.hpp"
#include "verify_suites.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace gtorbit;

Spectrum parse_lambda(const std::string& text) {
    std::vector<Rational> values;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) values.push_back(parse_rational(token));
    if (values.empty()) throw std::invalid_argument("empty eigenvalue list");
    return Spectrum(std::move(values)); // rejects non-nonincreasing input
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << content;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Gelfand-Tsetlin polytopes, matrix realizations and Gromov-width bounds "
                 "for unitary coadjoint orbits"};
    app.require_subcommand(1);

    std::string lambda_text, input_path, output_path;
    double tol = 1e-9;
    int trials = 100;
    uint64_t seed = 12345;
    int exit_code = 0;

    auto* analyze = app.add_subcommand(
        "analyze", "orbit report: polytope data, edge rays and the Gromov-width lower bound");
    analyze->add_option("lambda", lambda_text, "nonincreasing eigenvalues, e.g. 5,5,4 or 9/2,3")
        ->required();
    analyze->callback([&] { std::cout << report_to_json(gromov_lower_bound(parse_lambda(lambda_text))) << "\n"; });

    auto* pattern = app.add_subcommand("pattern", "Gelfand-Tsetlin pattern of a matrix (JSON)");
    pattern->add_option("matrix", input_path, "matrix JSON file, or - for stdin")->required();
    pattern->add_option("--tol", tol, "eigensolver tolerance");
    pattern->callback([&] {
        auto m = matrix_from_json(read_input(input_path));
        std::cout << pattern_to_json(gt_map(m, tol)) << "\n";
    });

    auto* reconstruct = app.add_subcommand(
        "reconstruct", "Hermitian matrix realizing an exact pattern (JSON)");
    reconstruct->add_option("pattern", input_path, "pattern JSON file, or - for stdin")->required();
    reconstruct->add_option("--tol", tol, "eigensolver tolerance");
    reconstruct->callback([&] {
        auto p = exact_pattern_from_json(read_input(input_path));
        std::cout << matrix_to_json(reconstruct_matrix(p, tol)) << "\n";
    });

    auto* skeleton = app.add_subcommand("skeleton", "moment-image 1-skeleton graph (JSON)");
    skeleton->add_option("lambda", lambda_text, "nonincreasing eigenvalues")->required();
    skeleton->callback(
        [&] { std::cout << skeleton_to_json(skeleton_graph(parse_lambda(lambda_text))) << "\n"; });

    auto* verify = app.add_subcommand("verify", "run the module invariant suites");
    verify->add_option("lambda", lambda_text, "nonincreasing eigenvalues")->required();
    verify->add_option("--trials", trials, "iterations per randomized suite");
    verify->add_option("--seed", seed, "RNG seed for reproducible suites");
    verify->add_option("--tol", tol, "eigensolver tolerance");
    verify->callback([&] {
        if (run_verify_suites(parse_lambda(lambda_text), trials, seed, tol, std::cout) > 0)
            exit_code = 3;
    });

    auto* plot = app.add_subcommand("plot", "SVG of the n = 3 moment image with skeleton edges");
    plot->add_option("lambda", lambda_text, "nonincreasing eigenvalues, three entries")->required();
    plot->add_option("output", output_path, "output SVG path")->required();
    plot->callback([&] {
        Spectrum lambda = parse_lambda(lambda_text);
        if (lambda.size() != 3)
            throw UnsupportedSpectrumError("plot supports n = 3 only");
        write_output(output_path, moment_map_svg(skeleton_graph(lambda)));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const UnsupportedSpectrumError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
