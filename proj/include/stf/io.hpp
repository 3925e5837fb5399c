// Serialization of synthesis matrices.
//
// Three formats:
//   exact-json    lossless; entries stored as (row, col, sign, num, den)
//                 meaning sign * sqrt(num/den), i.e. the signed squared
//                 value before canonicalization, plus a rendered float.
//                 Re-exporting an imported document is byte-identical.
//   matrix-market "%%MatrixMarket matrix coordinate real general", 1-based
//                 indices, 17-significant-digit floats.
//   csv           dense row-major float grid, comma-separated, no header.
//
// Matrices restored from the two float formats are flagged inexact: their
// entries are the exact binary rationals of the stored doubles, which is
// enough for toleranced checks but not for exact certification.
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "stf/blocks.hpp"
#include "stf/synthesis.hpp"

namespace stf {

enum class MatrixFormat { kExactJson, kMatrixMarket, kCsv };

// Returns the format conventionally associated with a filename extension
// (.json, .mtx/.mm, .csv), or nullopt.
std::optional<MatrixFormat> format_from_path(std::string_view path);

// A matrix plus the metadata the exact-json header carries. The spectrum and
// mu are absent for matrices imported from float formats.
struct MatrixDocument {
  SynthesisMatrix matrix;
  std::optional<EigenvalueSpec> spec;
  std::optional<int> mu;
};

std::string export_exact_json(const MatrixDocument& doc);
MatrixDocument import_exact_json(const std::string& text);

std::string export_matrix_market(const SynthesisMatrix& m);
SynthesisMatrix import_matrix_market(const std::string& text);

std::string export_csv(const SynthesisMatrix& m);
SynthesisMatrix import_csv(const std::string& text);

// Format-dispatching entry points. exact-json uses the full document; the
// float formats use only the matrix.
std::string export_matrix(const MatrixDocument& doc, MatrixFormat format);
MatrixDocument import_matrix(const std::string& text, MatrixFormat format);

// Whole-file helpers; throw IoError on filesystem failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace stf
