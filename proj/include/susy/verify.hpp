#pragma once

#include <string>
#include <vector>

#include "susy/rational.hpp"

namespace susy {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Every mismatch is a known misprint of the printed closed forms.
  bool errata_only = false;
  std::vector<std::string> details;
};

inline constexpr int kCriterionCount = 12;

/// Runs one acceptance criterion (1..12) at its fixed parameters.
CriterionResult run_criterion(int id);

struct VerifyOptions {
  Rational m{3, 2};
  int order = 6;
  bool allow_published_errata = false;
};

struct VerifyReport {
  std::vector<std::string> summary;  // checks at the requested m and order
  bool summary_ok = true;
  std::vector<CriterionResult> criteria;

  bool ok(bool allow_published_errata) const;
  std::string text(bool allow_published_errata) const;
  std::string json(bool allow_published_errata) const;
};

VerifyReport verify(const VerifyOptions& options);

}  // namespace susy
