#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "reflectfit/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Least-squares affine reflection fitting for point clouds"};
    app.require_subcommand(1);

    std::string p_path;
    std::string q_path;
    std::string plane_path;
    std::string matrix_path;

    auto* fit = app.add_subcommand("fit", "Fit the reflection mapping points P onto points Q");
    fit->add_option("P", p_path, "CSV file of source points")->required();
    fit->add_option("Q", q_path, "CSV file of target points")->required();

    auto* apply = app.add_subcommand("apply", "Reflect points across a plane");
    apply->add_option("plane", plane_path, "plane JSON file")->required();
    apply->add_option("P", p_path, "CSV file of points")->required();

    reflectfit::cli::GenOptions gen_opts;
    auto* gen =
        app.add_subcommand("gen", "Generate a synthetic instance: p.csv, q.csv, plane.json");
    gen->add_option("--dim", gen_opts.dim, "point dimension (>= 2)")->required();
    gen->add_option("--m", gen_opts.m, "number of points (>= 1)")->required();
    gen->add_option("--sigma", gen_opts.sigma, "per-coordinate Gaussian noise sigma")
        ->capture_default_str();
    gen->add_option("--seed", gen_opts.seed, "PRNG seed")->capture_default_str();
    gen->add_option("--out-prefix", gen_opts.out_prefix, "output path prefix")->required();

    reflectfit::cli::SymmetryOptions sym_opts;
    auto* symmetry =
        app.add_subcommand("symmetry", "Detect an approximate bilateral symmetry plane");
    symmetry->add_option("P", p_path, "CSV file of points")->required();
    symmetry->add_option("--iters", sym_opts.max_iterations, "maximum refinement iterations")
        ->capture_default_str();
    symmetry->add_option("--tol", sym_opts.tol, "relative objective-decrease tolerance")
        ->capture_default_str();

    auto* eigen = app.add_subcommand("eigen", "Eigen-decompose a symmetric CSV matrix");
    eigen->add_option("A", matrix_path, "CSV file holding a square symmetric matrix")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*fit) {
            reflectfit::cli::cmd_fit(p_path, q_path, std::cout);
        } else if (*apply) {
            reflectfit::cli::cmd_apply(plane_path, p_path, std::cout);
        } else if (*gen) {
            reflectfit::cli::cmd_gen(gen_opts);
        } else if (*symmetry) {
            reflectfit::cli::cmd_symmetry(p_path, sym_opts, std::cout);
        } else if (*eigen) {
            reflectfit::cli::cmd_eigen(matrix_path, std::cout);
        }
        return 0;
    } catch (const reflectfit::DegenerateInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const reflectfit::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
