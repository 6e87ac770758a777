#pragma once

// File plumbing for the reflectfit tool: numeric CSV point clouds and the
// flat-JSON plane interchange record.
//
// CSV: comma-separated doubles, one point per row, whitespace trimmed, no
// quoting. Lines that are blank or start with '#' are skipped. Every data
// row must have the same column count. Diagnostics name the file and the
// 1-based line.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reflectfit/linalg.hpp"
#include "reflectfit/reflection.hpp"

namespace reflectfit::cli {

/// Flat JSON plane record; dim/normal/offset are required on disk, the rest
/// appear when the producing command knows them.
struct PlaneRecord {
    std::size_t dim = 0;
    Vector normal;
    double offset = 0.0;
    std::optional<std::vector<double>> eigenvalues;
    std::optional<double> objective;
    std::optional<bool> degenerate;
    std::optional<std::uint64_t> seed;
};

/// %.17g, round-trip exact for doubles.
std::string format_value(double v);
std::string format_row(const Vector& v);

/// Rectangular numeric rows; throws InvalidInput naming file and line.
std::vector<Vector> read_csv_rows(const std::string& path);

/// Rows as a point set; additionally requires dimension >= 2.
PointSet read_points_csv(const std::string& path);

/// Rows as a square matrix.
Matrix read_matrix_csv(const std::string& path);

void write_points_csv(const std::string& path, const PointSet& points);

/// Parses and validates a PlaneRecord (len(normal) == dim >= 2, unit normal
/// within 1e-9). Unknown keys are ignored.
PlaneRecord read_plane_json(const std::string& path);

std::string plane_record_to_json(const PlaneRecord& record);

void write_plane_json(const std::string& path, const PlaneRecord& record);

}  // namespace reflectfit::cli
