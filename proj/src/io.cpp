#include "stf/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "stf/errors.hpp"

namespace stf {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::pair<std::size_t, std::size_t> line_column_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// Entries keyed for export order: by (col, row).
std::vector<std::pair<std::pair<int, int>, SignedRoot>> column_major(const SynthesisMatrix& m) {
  std::vector<std::pair<std::pair<int, int>, SignedRoot>> out(m.entries().begin(),
                                                              m.entries().end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.second, a.first.first) < std::pair(b.first.second, b.first.first);
  });
  return out;
}

mpz_class parse_mpz_field(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw ParseError(std::string("entry field \"") + key + "\" must be a decimal string");
  const std::string s = j[key].get<std::string>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(std::string("entry field \"") + key + "\" is not a decimal integer: \"" + s + "\"");
  return mpz_class(s);
}

double parse_strict_double(const std::string& token, std::size_t line, std::size_t column) {
  std::size_t consumed = 0;
  double v = 0;
  try {
    v = std::stod(token, &consumed);
  } catch (const std::exception&) {
    throw ParseError("not a number: \"" + token + "\"", line, column);
  }
  if (consumed != token.size())
    throw ParseError("trailing characters after number: \"" + token + "\"", line, column);
  return v;
}

}  // namespace

std::optional<MatrixFormat> format_from_path(std::string_view path) {
  auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  std::string ext(path.substr(dot + 1));
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (ext == "json") return MatrixFormat::kExactJson;
  if (ext == "mtx" || ext == "mm") return MatrixFormat::kMatrixMarket;
  if (ext == "csv") return MatrixFormat::kCsv;
  return std::nullopt;
}

std::string export_exact_json(const MatrixDocument& doc) {
  const SynthesisMatrix& m = doc.matrix;
  ordered_json j;
  j["format"] = "stf-matrix";
  j["version"] = 1;
  j["n"] = m.rows();
  j["N"] = m.cols();
  j["basis"] = m.basis_label();
  j["exact"] = m.is_exact();
  if (doc.spec) {
    ordered_json eigenvalues = ordered_json::array();
    for (const auto& l : doc.spec->lambdas) eigenvalues.push_back(l.to_string());
    j["eigenvalues"] = eigenvalues;
  } else {
    j["eigenvalues"] = nullptr;
  }
  if (doc.mu)
    j["mu"] = *doc.mu;
  else
    j["mu"] = nullptr;
  j["sparsity"] = m.nonzero_count();

  ordered_json entries = ordered_json::array();
  for (const auto& [pos, value] : column_major(m)) {
    Rational square = value.square();
    ordered_json e;
    e["row"] = pos.first;
    e["col"] = pos.second;
    e["sign"] = value.coefficient().is_negative() ? -1 : 1;
    e["num"] = square.numerator().get_str();
    e["den"] = square.denominator().get_str();
    e["value"] = value.to_double();
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

MatrixDocument import_exact_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_column_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("invalid JSON: ") + e.what(), line, column);
  }

  if (!j.is_object() || j.value("format", "") != "stf-matrix")
    throw ParseError("not an stf-matrix document (missing format field)");
  if (j.value("version", 0) != 1)
    throw ParseError("unsupported document version");
  if (!j.contains("n") || !j["n"].is_number_integer() || !j.contains("N") ||
      !j["N"].is_number_integer())
    throw ParseError("missing or non-integer dimensions n/N");

  const int n = j["n"].get<int>();
  const int cols = j["N"].get<int>();
  if (n < 1 || cols < 1) throw ParseError("dimensions must be positive");
  const std::string basis = j.value("basis", "standard");
  const bool exact = j.value("exact", true);

  SynthesisMatrix m(n, cols, basis, exact);
  if (!j.contains("entries") || !j["entries"].is_array())
    throw ParseError("missing entries array");
  for (const auto& e : j["entries"]) {
    if (!e.contains("row") || !e.contains("col") || !e.contains("sign"))
      throw ParseError("entry missing row/col/sign");
    int row = e["row"].get<int>();
    int col = e["col"].get<int>();
    int sign = e["sign"].get<int>();
    if (row < 0 || row >= n || col < 0 || col >= cols)
      throw ParseError("entry index out of range: (" + std::to_string(row) + ", " +
                       std::to_string(col) + ")");
    if (sign != 1 && sign != -1) throw ParseError("entry sign must be 1 or -1");
    mpz_class num = parse_mpz_field(e, "num");
    mpz_class den = parse_mpz_field(e, "den");
    if (den == 0) throw ParseError("entry with zero denominator");
    if (num == 0) throw ParseError("zero entry stored explicitly");
    if (!m.entry(row, col).is_zero())
      throw ParseError("duplicate entry at (" + std::to_string(row) + ", " +
                       std::to_string(col) + ")");
    m.set(row, col, SignedRoot::sqrt_of(Rational(num, den), sign));
  }

  if (j.contains("sparsity") && j["sparsity"].is_number_integer() &&
      j["sparsity"].get<std::size_t>() != m.nonzero_count())
    throw ParseError("sparsity field disagrees with entry count");

  MatrixDocument doc{std::move(m), std::nullopt, std::nullopt};
  if (j.contains("eigenvalues") && j["eigenvalues"].is_array()) {
    std::vector<Rational> lambdas;
    for (const auto& s : j["eigenvalues"]) {
      if (!s.is_string()) throw ParseError("eigenvalues must be rational strings");
      lambdas.push_back(Rational::parse(s.get<std::string>()));
    }
    try {
      doc.spec = EigenvalueSpec::create(std::move(lambdas));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("invalid spectrum in header: ") + e.what());
    }
    if (doc.spec->n != n || doc.spec->N != cols)
      throw ParseError("spectrum in header disagrees with matrix dimensions");
  }
  if (j.contains("mu") && j["mu"].is_number_integer()) doc.mu = j["mu"].get<int>();
  return doc;
}

std::string export_matrix_market(const SynthesisMatrix& m) {
  std::string out = "%%MatrixMarket matrix coordinate real general\n";
  out += std::to_string(m.rows()) + " " + std::to_string(m.cols()) + " " +
         std::to_string(m.nonzero_count()) + "\n";
  for (const auto& [pos, value] : column_major(m))
    out += std::to_string(pos.first + 1) + " " + std::to_string(pos.second + 1) + " " +
           format_double(value.to_double()) + "\n";
  return out;
}

SynthesisMatrix import_matrix_market(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) throw ParseError("empty MatrixMarket file", 1);
  ++lineno;
  {
    std::istringstream header(line);
    std::string banner, object, fmt, field, symmetry;
    header >> banner >> object >> fmt >> field >> symmetry;
    auto lower = [](std::string s) {
      std::transform(s.begin(), s.end(), s.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      return s;
    };
    if (banner != "%%MatrixMarket" || lower(object) != "matrix" || lower(fmt) != "coordinate" ||
        lower(field) != "real" || lower(symmetry) != "general")
      throw ParseError("unsupported MatrixMarket header (need \"matrix coordinate real general\")",
                       1);
  }

  // Comment lines may follow the banner.
  long long rows = -1, cols = -1, nnz = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '%') continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream sizes(line);
    if (!(sizes >> rows >> cols >> nnz)) throw ParseError("malformed size line", lineno);
    break;
  }
  if (rows < 1 || cols < 1 || nnz < 0)
    throw ParseError("invalid matrix dimensions", lineno);

  SynthesisMatrix m(static_cast<int>(rows), static_cast<int>(cols), "standard",
                    /*exact=*/false);
  long long seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream entry(line);
    long long r = 0, c = 0;
    std::string value_token;
    if (!(entry >> r >> c >> value_token)) throw ParseError("malformed entry line", lineno);
    if (r < 1 || r > rows || c < 1 || c > cols)
      throw ParseError("entry index out of range", lineno);
    double v = parse_strict_double(value_token, lineno, 0);
    ++seen;
    if (v == 0.0) continue;  // tolerate explicit zeros
    if (!m.entry(static_cast<int>(r - 1), static_cast<int>(c - 1)).is_zero())
      throw ParseError("duplicate entry", lineno);
    m.set(static_cast<int>(r - 1), static_cast<int>(c - 1),
          SignedRoot::of_rational(Rational::from_double_exact(v)));
  }
  if (seen != nnz)
    throw ParseError("entry count " + std::to_string(seen) + " disagrees with header " +
                     std::to_string(nnz));
  return m;
}

std::string export_csv(const SynthesisMatrix& m) {
  std::vector<std::vector<double>> dense(
      static_cast<std::size_t>(m.rows()),
      std::vector<double>(static_cast<std::size_t>(m.cols()), 0.0));
  for (const auto& [pos, value] : m.entries())
    dense[static_cast<std::size_t>(pos.first)][static_cast<std::size_t>(pos.second)] =
        value.to_double();
  std::string out;
  for (const auto& row : dense) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ",";
      out += format_double(row[c]);
    }
    out += "\n";
  }
  return out;
}

SynthesisMatrix import_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> grid;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() && in.eof()) break;
    std::vector<double> row;
    std::size_t start = 0;
    std::size_t field = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      std::string token = line.substr(start, comma == std::string::npos ? std::string::npos
                                                                        : comma - start);
      ++field;
      row.push_back(parse_strict_double(token, lineno, field));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!grid.empty() && row.size() != grid.front().size())
      throw ParseError("row has " + std::to_string(row.size()) + " fields, expected " +
                       std::to_string(grid.front().size()), lineno);
    grid.push_back(std::move(row));
  }
  if (grid.empty() || grid.front().empty()) throw ParseError("empty CSV matrix");

  SynthesisMatrix m(static_cast<int>(grid.size()), static_cast<int>(grid.front().size()),
                    "standard", /*exact=*/false);
  for (std::size_t r = 0; r < grid.size(); ++r)
    for (std::size_t c = 0; c < grid[r].size(); ++c)
      if (grid[r][c] != 0.0)
        m.set(static_cast<int>(r), static_cast<int>(c),
              SignedRoot::of_rational(Rational::from_double_exact(grid[r][c])));
  return m;
}

std::string export_matrix(const MatrixDocument& doc, MatrixFormat format) {
  switch (format) {
    case MatrixFormat::kExactJson: return export_exact_json(doc);
    case MatrixFormat::kMatrixMarket: return export_matrix_market(doc.matrix);
    case MatrixFormat::kCsv: return export_csv(doc.matrix);
  }
  throw std::logic_error("unknown format");
}

MatrixDocument import_matrix(const std::string& text, MatrixFormat format) {
  switch (format) {
    case MatrixFormat::kExactJson: return import_exact_json(text);
    case MatrixFormat::kMatrixMarket:
      return {import_matrix_market(text), std::nullopt, std::nullopt};
    case MatrixFormat::kCsv: return {import_csv(text), std::nullopt, std::nullopt};
  }
  throw std::logic_error("unknown format");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure: " + path);
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("write failure: " + path);
}

}  // namespace stf
