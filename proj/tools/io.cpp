#include "io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string_view>

#include "json.hpp"

namespace reflectfit::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r\n";
    const auto begin = s.find_first_not_of(ws);
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail_at(const std::string& path, std::size_t line, const std::string& what) {
    throw InvalidInput(path + ":" + std::to_string(line) + ": " + what);
}

double parse_field(const std::string& path, std::size_t line, std::string_view field) {
    const std::string_view token = trim(field);
    if (token.empty()) fail_at(path, line, "empty field");
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        fail_at(path, line, "cannot parse '" + std::string(token) + "' as a number");
    if (!std::isfinite(value))
        fail_at(path, line, "non-finite value '" + std::string(token) + "'");
    return value;
}

}  // namespace

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_row(const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        out += format_value(v[i]);
    }
    return out;
}

std::vector<Vector> read_csv_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput(path + ": cannot open file");

    std::vector<Vector> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;

        Vector row;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = body.find(',', start);
            const std::string_view field =
                body.substr(start, comma == std::string_view::npos ? comma : comma - start);
            row.push_back(parse_field(path, line_no, field));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size())
            fail_at(path, line_no,
                    "expected " + std::to_string(rows.front().size()) + " columns, got " +
                        std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InvalidInput(path + ": no data rows");
    return rows;
}

PointSet read_points_csv(const std::string& path) {
    PointSet points = read_csv_rows(path);
    if (points.front().size() < 2)
        throw InvalidInput(path + ": points must have dimension >= 2, got " +
                           std::to_string(points.front().size()));
    return points;
}

Matrix read_matrix_csv(const std::string& path) {
    const std::vector<Vector> rows = read_csv_rows(path);
    if (rows.size() != rows.front().size())
        throw InvalidInput(path + ": matrix must be square, got " + std::to_string(rows.size()) +
                           "x" + std::to_string(rows.front().size()));
    return Matrix::from_rows(rows);
}

void write_points_csv(const std::string& path, const PointSet& points) {
    std::ofstream out(path);
    if (!out) throw InvalidInput(path + ": cannot open file for writing");
    for (const Vector& p : points) out << format_row(p) << '\n';
    if (!out) throw InvalidInput(path + ": write failed");
}

PlaneRecord read_plane_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput(path + ": cannot open file");

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
    if (!doc.is_object()) throw InvalidInput(path + ": expected a JSON object");

    PlaneRecord record;
    try {
        record.dim = doc.at("dim").get<std::size_t>();
        record.normal = doc.at("normal").get<Vector>();
        record.offset = doc.at("offset").get<double>();
        if (doc.contains("eigenvalues"))
            record.eigenvalues = doc["eigenvalues"].get<std::vector<double>>();
        if (doc.contains("objective")) record.objective = doc["objective"].get<double>();
        if (doc.contains("degenerate")) record.degenerate = doc["degenerate"].get<bool>();
        if (doc.contains("seed")) record.seed = doc["seed"].get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }

    if (record.dim < 2)
        throw InvalidInput(path + ": dim must be >= 2, got " + std::to_string(record.dim));
    if (record.normal.size() != record.dim)
        throw InvalidInput(path + ": normal has " + std::to_string(record.normal.size()) +
                           " components, dim says " + std::to_string(record.dim));
    if (!all_finite(record.normal) || !std::isfinite(record.offset))
        throw InvalidInput(path + ": non-finite plane values");
    if (std::abs(norm(record.normal) - 1.0) > 1e-9)
        throw InvalidInput(path + ": normal is not unit length");
    return record;
}

std::string plane_record_to_json(const PlaneRecord& record) {
    nlohmann::ordered_json doc;
    doc["dim"] = record.dim;
    doc["normal"] = record.normal;
    doc["offset"] = record.offset;
    if (record.eigenvalues) doc["eigenvalues"] = *record.eigenvalues;
    if (record.objective) doc["objective"] = *record.objective;
    if (record.degenerate) doc["degenerate"] = *record.degenerate;
    if (record.seed) doc["seed"] = *record.seed;
    return doc.dump(2);
}

void write_plane_json(const std::string& path, const PlaneRecord& record) {
    std::ofstream out(path);
    if (!out) throw InvalidInput(path + ": cannot open file for writing");
    out << plane_record_to_json(record) << '\n';
    if (!out) throw InvalidInput(path + ": write failed");
}

}  // namespace reflectfit::cli
