#include "cyclicsign/matrix_io.hpp"

#include "cyclicsign/errors.hpp"
#include "cyclicsign/serialize.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace cyclicsign {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

MatrixQ from_rows(const std::vector<std::vector<Rational>>& rows) {
  const auto n = rows.size();
  if (n == 0) throw ParseError("matrix has no rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ParseError("matrix is not square: row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(n));
    }
  }
  const auto size = static_cast<Eigen::Index>(n);
  MatrixQ m(size, size);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
  }
  return m;
}

Rational json_entry(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(v.get<std::uint64_t>())
                                  : Rational(v.get<std::int64_t>());
  }
  if (v.is_number_float()) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v.get<double>());
    if (res.ec != std::errc{}) throw ParseError("unrepresentable JSON number");
    return parse_rational(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
  }
  throw ParseError("matrix entries must be strings or numbers, got " + v.dump());
}

}  // namespace

MatrixQ parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (blank(line)) continue;
    const auto first = line.find_first_not_of(" \t");
    if (line[first] == '#') continue;
    std::vector<Rational> row;
    for (std::string_view cell : split(line, ',')) {
      try {
        row.push_back(parse_rational(cell));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

MatrixQ parse_matrix_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw ParseError("JSON matrix must be an object with a \"rows\" array");
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : doc["rows"]) {
    if (!row.is_array()) throw ParseError("each JSON matrix row must be an array");
    std::vector<Rational> parsed;
    for (const auto& v : row) parsed.push_back(json_entry(v));
    rows.push_back(std::move(parsed));
  }
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() != static_cast<std::int64_t>(rows.size())) {
      throw ParseError("JSON \"n\" does not match the number of rows");
    }
  }
  return from_rows(rows);
}

MatrixQ parse_matrix(std::string_view text, MatrixFormat format) {
  return format == MatrixFormat::Csv ? parse_matrix_csv(text) : parse_matrix_json(text);
}

MatrixQ read_matrix_file(const std::filesystem::path& path, MatrixFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str(), format);
}

std::string to_csv(const MatrixQ& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string to_json_text(const MatrixQ& m) { return matrix_json(m).dump() + "\n"; }

MatrixFormat parse_matrix_format(std::string_view name) {
  if (name == "csv") return MatrixFormat::Csv;
  if (name == "json") return MatrixFormat::Json;
  throw InvalidArgument("unknown matrix format '" + std::string(name) + "'");
}

}  // namespace cyclicsign
