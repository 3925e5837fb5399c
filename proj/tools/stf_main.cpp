// stf: construct and verify optimally sparse unit-norm frames with a
// prescribed frame-operator spectrum (Spectral Tetris).
//
// Exit codes: 0 success, 1 I/O or unreadable matrix file, 2 invalid spectrum
// or arguments, 3 exact-search limit exceeded, 4 verification failed,
// 5 exact checks requested on an inexact (float-format) matrix.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "stf/analysis.hpp"
#include "stf/blocks.hpp"
#include "stf/errors.hpp"
#include "stf/io.hpp"
#include "stf/tetris.hpp"

namespace {

struct SpecOptions {
  int dim = 0;
  long long count = 0;
  std::string eigenvalues;
  bool tight = false;
};

void add_spec_options(CLI::App* cmd, SpecOptions& opts, bool spectrum_required) {
  cmd->add_option("--dim", opts.dim, "Dimension n of the frame vectors");
  cmd->add_option("--count", opts.count, "Number N of frame vectors");
  auto* ev = cmd->add_option("--eigenvalues", opts.eigenvalues,
                             "Comma-separated rational eigenvalues, e.g. 8/3,8/3,8/3,2");
  auto* tight = cmd->add_flag("--tight", opts.tight,
                              "Tight spectrum: every eigenvalue N/n (needs --dim and --count)");
  ev->excludes(tight);
  if (spectrum_required) {
    // exactly one of the two ways to state the spectrum
    cmd->callback([&opts]() {
      if (!opts.tight && opts.eigenvalues.empty())
        throw CLI::ValidationError("spectrum", "pass --eigenvalues or --tight");
    });
  }
}

std::vector<stf::Rational> parse_eigenvalue_list(const std::string& text) {
  std::vector<stf::Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string token =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(stf::Rational::parse(token));
    } catch (const stf::ParseError& e) {
      throw std::invalid_argument("bad eigenvalue \"" + token + "\": " + e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// --dim/--count may restate what the spectrum implies, but must not disagree.
void check_requested_dims(const SpecOptions& opts, const stf::EigenvalueSpec& spec) {
  if (opts.dim != 0 && opts.dim != spec.n)
    throw std::invalid_argument("--dim " + std::to_string(opts.dim) + " disagrees with " +
                                std::to_string(spec.n) + " eigenvalues");
  if (opts.count != 0 && opts.count != spec.N)
    throw std::invalid_argument("--count " + std::to_string(opts.count) +
                                " disagrees with eigenvalue sum " + std::to_string(spec.N));
}

stf::EigenvalueSpec make_spec(const SpecOptions& opts) {
  if (opts.tight) {
    if (opts.dim <= 0 || opts.count <= 0)
      throw std::invalid_argument("--tight needs --dim and --count");
    return stf::EigenvalueSpec::tight(opts.dim, opts.count);
  }
  auto spec = stf::EigenvalueSpec::create(parse_eigenvalue_list(opts.eigenvalues));
  check_requested_dims(opts, spec);
  return spec;
}

std::string join_rationals(const std::vector<stf::Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += values[i].to_string();
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

stf::MatrixFormat resolve_format(const std::string& flag, const std::string& path) {
  if (!flag.empty()) {
    if (flag == "exact-json") return stf::MatrixFormat::kExactJson;
    if (flag == "matrix-market") return stf::MatrixFormat::kMatrixMarket;
    if (flag == "csv") return stf::MatrixFormat::kCsv;
    throw std::invalid_argument("unknown format: " + flag);
  }
  if (auto inferred = stf::format_from_path(path)) return *inferred;
  throw std::invalid_argument("cannot infer format from \"" + path +
                              "\"; pass --format exact-json|matrix-market|csv");
}

void print_trace(const stf::CursorTrace& trace) {
  for (const auto& step : trace) {
    const char* kind = step.kind == stf::StepKind::kBlock
                           ? "2x2 block"
                           : (step.kind == stf::StepKind::kFinalOne ? "final one" : "one");
    std::cout << "# row " << step.row << " col " << step.col << ": " << kind
              << " (remaining weight " << step.lambda_before.to_string() << ")\n";
  }
}

int cmd_generate(const SpecOptions& spec_opts, const std::string& ordering_mode,
                 const std::string& format_flag, const std::string& output, int limit,
                 bool verbose) {
  auto spec = make_spec(spec_opts);
  auto blocks = stf::maximal_block_number(spec, limit);
  const std::vector<stf::Rational>& ordering =
      ordering_mode == "as-given" ? spec.lambdas : blocks.ordering;
  auto result = stf::spectral_tetris(spec, ordering);

  const std::size_t bound = static_cast<std::size_t>(spec.N) +
                            2 * (static_cast<std::size_t>(spec.n) -
                                 static_cast<std::size_t>(blocks.mu));
  const std::size_t nnz = result.matrix.nonzero_count();

  std::cout << "n=" << spec.n << "\n";
  std::cout << "N=" << spec.N << "\n";
  std::cout << "mu=" << blocks.mu << "\n";
  std::cout << "ordering=" << join_rationals(ordering) << "\n";
  std::cout << "sparsity=" << nnz << "\n";
  std::cout << "bound=" << bound << "\n";
  std::cout << "optimal=" << bool_str(nnz == bound) << "\n";
  if (verbose) print_trace(result.trace);

  if (!output.empty()) {
    stf::MatrixFormat format = stf::MatrixFormat::kExactJson;
    if (!format_flag.empty())
      format = resolve_format(format_flag, output);
    else if (auto inferred = stf::format_from_path(output))
      format = *inferred;
    stf::MatrixDocument doc{result.matrix, spec, blocks.mu};
    stf::write_file(output, stf::export_matrix(doc, format));
    std::cout << "output=" << output << "\n";
  }
  return 0;
}

int cmd_mu(const SpecOptions& spec_opts, int limit) {
  auto spec = make_spec(spec_opts);
  auto blocks = stf::maximal_block_number(spec, limit);
  std::cout << "mu=" << blocks.mu << "\n";
  std::cout << "ordering=" << join_rationals(blocks.ordering) << "\n";
  return 0;
}

int cmd_verify(const std::string& path, const std::string& format_flag,
               const SpecOptions& spec_opts, bool exact_only, int limit, bool verbose) {
  stf::MatrixFormat format = resolve_format(format_flag, path);
  stf::MatrixDocument doc = [&] {
    try {
      return stf::import_matrix(stf::read_file(path), format);
    } catch (const stf::ParseError& e) {
      throw stf::IoError("cannot parse " + path + ": " + e.what());
    }
  }();

  // Spectrum to check against: explicit flags win over the one embedded in
  // the file; a bare --dim/--count is cross-checked against the embedded one.
  std::optional<stf::EigenvalueSpec> spec;
  if (spec_opts.tight || !spec_opts.eigenvalues.empty()) {
    spec = make_spec(spec_opts);
  } else if (doc.spec) {
    spec = doc.spec;
    check_requested_dims(spec_opts, *spec);
  }
  if (!spec)
    throw std::invalid_argument("no spectrum: the file carries none, pass --eigenvalues or --tight");

  const stf::SynthesisMatrix& m = doc.matrix;
  if (exact_only && !m.is_exact())
    throw stf::InexactMatrixError("exact checks requested on a matrix imported from a float format");

  bool all = false;
  std::cout << "exact=" << bool_str(m.is_exact()) << "\n";
  if (m.is_exact()) {
    auto report = stf::verify(m, *spec, limit);
    std::cout << "unit_norm=" << bool_str(report.unit_norm_ok) << "\n";
    std::cout << "rows_orthogonal=" << bool_str(report.rows_orthogonal_ok) << "\n";
    std::cout << "row_sums=" << join_rationals(report.row_sums) << "\n";
    std::cout << "spectrum=" << bool_str(report.spectrum_matches) << "\n";
    std::cout << "sparsity=" << report.sparsity << "\n";
    std::cout << "bound=" << report.sparsity_bound << "\n";
    std::cout << "optimal=" << bool_str(report.optimal) << "\n";
    std::cout << "block_order=" << report.block_order << "\n";
    std::cout << "mu=" << report.mu << "\n";
    all = report.all_passed();
  } else {
    auto report = stf::verify_float(m, *spec, 1e-10, limit);
    std::cout << "unit_norm=" << bool_str(report.unit_norm_ok) << "\n";
    std::cout << "rows_orthogonal=" << bool_str(report.rows_orthogonal_ok) << "\n";
    std::string sums;
    for (std::size_t i = 0; i < report.row_sums.size(); ++i) {
      if (i) sums += ",";
      sums += format_double(report.row_sums[i]);
    }
    std::cout << "row_sums=" << sums << "\n";
    std::cout << "spectrum=" << bool_str(report.spectrum_matches) << "\n";
    std::cout << "sparsity=" << report.sparsity << "\n";
    std::cout << "bound=" << report.sparsity_bound << "\n";
    std::cout << "optimal=" << bool_str(report.optimal) << "\n";
    std::cout << "block_order=" << report.block_order << "\n";
    std::cout << "mu=" << report.mu << "\n";
    all = report.all_passed();
  }
  std::cout << "all=" << bool_str(all) << "\n";
  if (verbose && !all)
    std::cout << "# one or more checks failed; see the report lines above\n";
  return all ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse unit-norm frames with a prescribed spectrum (Spectral Tetris)"};
  app.require_subcommand(1);

  SpecOptions gen_spec;
  std::string gen_ordering = "blockwise";
  std::string gen_format;
  std::string gen_output;
  int gen_limit = 16;
  bool gen_verbose = false;
  auto* gen = app.add_subcommand("generate", "Construct an optimally sparse frame");
  add_spec_options(gen, gen_spec, /*spectrum_required=*/true);
  gen->add_option("--ordering", gen_ordering, "Eigenvalue ordering mode")
      ->check(CLI::IsMember({"blockwise", "as-given"}))
      ->capture_default_str();
  gen->add_option("--format", gen_format, "Output format: exact-json, matrix-market, csv");
  gen->add_option("--output", gen_output, "Write the matrix to this file");
  gen->add_option("--limit", gen_limit, "Exact-search limit on non-integer eigenvalues")
      ->capture_default_str();
  gen->add_flag("-v,--verbose", gen_verbose, "Also print the construction steps");

  SpecOptions mu_spec;
  int mu_limit = 16;
  auto* mu = app.add_subcommand("mu", "Maximal block number and blockwise ordering");
  add_spec_options(mu, mu_spec, /*spectrum_required=*/true);
  mu->add_option("--limit", mu_limit, "Exact-search limit on non-integer eigenvalues")
      ->capture_default_str();

  std::string verify_path;
  std::string verify_format;
  SpecOptions verify_spec;
  bool verify_exact = false;
  int verify_limit = 16;
  bool verify_verbose = false;
  auto* verify = app.add_subcommand("verify", "Check a matrix against a spectrum");
  verify->add_option("path", verify_path, "Matrix file")->required();
  verify->add_option("--format", verify_format,
                     "Input format (default: inferred from the extension)");
  add_spec_options(verify, verify_spec, /*spectrum_required=*/false);
  verify->add_flag("--exact", verify_exact, "Insist on exact checks (fails on float imports)");
  verify->add_option("--limit", verify_limit, "Exact-search limit on non-integer eigenvalues")
      ->capture_default_str();
  verify->add_flag("-v,--verbose", verify_verbose, "Extra diagnostics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed())
      return cmd_generate(gen_spec, gen_ordering, gen_format, gen_output, gen_limit, gen_verbose);
    if (mu->parsed()) return cmd_mu(mu_spec, mu_limit);
    if (verify->parsed())
      return cmd_verify(verify_path, verify_format, verify_spec, verify_exact, verify_limit,
                        verify_verbose);
  } catch (const stf::LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const stf::InexactMatrixError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const stf::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const stf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
