#pragma once

// Seeded invariant suites, one per module family, driven by `qdeform verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qdeform {

struct CaseResult {
  std::string name;
  /// The case's error metric; the case passes iff it is <= tolerance.
  double max_rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;
  /// Parameters the cases ran at (q values, scales c, sample counts).
  std::vector<std::pair<std::string, double>> metadata;

  bool pass() const noexcept;
};

enum class Suite { identities, dynamics, stirling, mlp, canonical, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

/// Runs every case of `suite`. Output is a pure function of (suite, seed).
VerificationReport run_suite(Suite suite, std::uint64_t seed);

/// Closed-form q-Gaussian normalization via the Beta function; an
/// independent reference for the quadrature in normalization().
double normalization_closed_form(double q, double beta);

}  // namespace qdeform
