#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "glnq/mnrule.hpp"
#include "glnq/rational.hpp"

namespace glnq {

/// One table row: a label, a unipotent class and the exact value, plus the
/// integer specialization when an evaluation point was requested.
struct CharRecord {
  ColoredPattern label;
  Partition mu;
  RatFun value;
  std::optional<Rat> value_at_q;

  std::string to_json() const;
  std::string to_csv_row() const;
  static std::string csv_header();
};

struct TableOptions {
  int n = 1;
  int max_degree = 0;  // 0 means n
  std::optional<Rat> eval_q;
  int jobs = 1;
};

/// Every (pattern, class) pair at weight n in deterministic order; with
/// jobs > 1 the values are computed concurrently and then emitted sorted,
/// so output is independent of scheduling.
std::vector<CharRecord> build_table(CharEngine& engine, const TableOptions& options);

/// Outcome of one verification suite: per-identity report lines plus a
/// global flag. Lines are stable across runs.
struct VerifyReport {
  bool ok = true;
  std::vector<std::string> lines;

  void record(bool pass, const std::string& what);
};

/// Engine equals the Fock-space expansion on every (pattern, class) pair of
/// weight n.
VerifyReport verify_oracle(CharEngine& engine, int n);

/// Second orthogonality at a concrete prime power q0: for all unipotent u, v,
/// sum over labels (patterns weighted by label multiplicities) of
/// chi(u) chi(v) = delta_{uv} a_u(q0).
VerifyReport verify_orthogonality(CharEngine& engine, int n, const Rat& q0);

/// Closed-form evaluators (single row, single column, multi-row kernel,
/// hooks, degree) against the engine on all applicable weight-n instances.
VerifyReport verify_closedforms(CharEngine& engine, int n);

/// Steinberg label against the closed form on all unipotent classes of
/// weight n, plus the classification of column class types.
VerifyReport verify_steinberg(CharEngine& engine, int n);

/// Append-only memo persistence. A cache file starts with a versioned
/// header line; each entry line is "<memo key>\t<value json>". Unreadable
/// files, foreign versions and corrupt lines degrade to warnings on the
/// diagnostic stream, never to failures.
class CacheFile {
 public:
  explicit CacheFile(std::string path);

  /// Loads entries into the engine memo; returns the number accepted.
  std::size_t load_into(CharEngine& engine, std::ostream& diagnostics);

  /// Writes memo entries not yet on disk; rewrites the file when the header
  /// was missing or foreign. Returns the number of entries written.
  std::size_t store_from(const CharEngine& engine, std::ostream& diagnostics);

  static const char* header();

 private:
  std::string path_;
  std::vector<std::string> keys_on_disk_;
  bool needs_rewrite_ = false;
  bool loaded_ = false;
};

}  // namespace glnq
