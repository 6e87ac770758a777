#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace reflectfit::cli {

// Each command throws (InvalidInput, DegenerateInput, ...) on failure; the
// entry point maps exception types to exit codes.

void cmd_fit(const std::string& p_path, const std::string& q_path, std::ostream& out);

void cmd_apply(const std::string& plane_path, const std::string& p_path, std::ostream& out);

struct GenOptions {
    std::size_t dim = 2;
    std::size_t m = 1;
    double sigma = 0.0;
    std::uint64_t seed = 0;
    std::string out_prefix;
};

/// Writes <prefix>p.csv, <prefix>q.csv, <prefix>plane.json.
void cmd_gen(const GenOptions& opts);

struct SymmetryOptions {
    int max_iterations = 50;
    double tol = 1e-10;
};

void cmd_symmetry(const std::string& p_path, const SymmetryOptions& opts, std::ostream& out);

void cmd_eigen(const std::string& matrix_path, std::ostream& out);

}  // namespace reflectfit::cli
