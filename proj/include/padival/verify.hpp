#pragma once

#include "padival/natural.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Identity-verification sweeps over (n, p[, k]) grids. Each identity has
// a stable name used by the CLI and in CI logs; checks are written in
// cross-multiplied form so a false identity surfaces as a Failure (CLI
// exit 1), while a tripped exact-division assertion inside the library
// still propagates as inconsistency_error (CLI exit 3).
namespace padival::verify {

struct Failure {
  /// Named inputs in a fixed order (p, n[, k]); used for both display and
  /// the deterministic sort.
  std::vector<std::pair<std::string, Natural>> inputs;
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::string identity;
  std::string grid;
  std::uint64_t checked = 0;
  std::vector<Failure> failures;
  /// Diagnostics only; never serialized into the stdout payload.
  double elapsed_seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

struct Options {
  std::optional<Natural> prime;  ///< restrict the sweep to one prime
  std::optional<std::uint64_t> n_lo;
  std::optional<std::uint64_t> n_hi;
  std::optional<std::uint64_t> k_max;
  std::optional<std::uint64_t> cap;  ///< shrink every default grid bound
  unsigned threads = 0;              ///< 0 = hardware concurrency
};

/// Canonical identity names, in registry order.
std::vector<std::string> identity_names();

bool is_identity(const std::string& name_or_alias);

/// Resolves aliases (e.g. "eq-2.2" -> "eq-5.1"); throws
/// std::invalid_argument for unknown names.
std::string canonical_identity(const std::string& name_or_alias);

/// One-line statement of what the identity checks.
std::string identity_summary(const std::string& name_or_alias);

Report run_identity(const std::string& name_or_alias,
                    const Options& opts = {});

std::vector<Report> run_all(const Options& opts = {});

}  // namespace padival::verify
