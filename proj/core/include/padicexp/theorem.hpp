#pragma once

#include "padicexp/expansion.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace padicexp {

/// Classification of a positive unit fraction c/d at prime p by the size of
/// the threshold c(p-1)/(2dp) (c/(2d) for p = 2):
///   Case1     c < d
///   Case21    c > d, threshold < 1
///   Case22    c > d, threshold > 1; carries the stage count m
///   Boundary  threshold = 1 exactly (excluded from bound assertions)
///   Trivial   c = d (forces c = d = 1) or c = 0
enum class CaseTag { Case1, Case21, Case22, Boundary, Trivial };

/// Stable identifier, e.g. "Case2.2" (used in JSON).
std::string_view case_tag_id(CaseTag tag);
/// Human form, e.g. "Case 2.2".
std::string_view case_tag_display(CaseTag tag);

/// One bound-check outcome: which index, which bound, which beta value.
struct BoundCheck {
  std::size_t index = 0;
  std::string bound;
  Int beta;

  bool operator==(const BoundCheck&) const = default;
};

struct CaseReport {
  CaseTag case_tag = CaseTag::Trivial;
  std::optional<unsigned> m;  // present iff case_tag == Case22
  ReducedRational threshold;  // exact, reduced
  std::vector<BoundCheck> violations;
  std::vector<BoundCheck> strict_warnings;
};

/// Classifies (c, d, p). Requires c >= 0, d >= 1, p prime, and the standing
/// hypotheses gcd(c,d) = gcd(c,p) = gcd(d,p) = 1 (relaxed for c = 0, which is
/// Trivial). Violated hypotheses throw std::invalid_argument with a message
/// naming the failed gcd condition. For Case22, m is the largest integer with
/// p^m <= threshold, found by exact integer comparison — never by a
/// floating-point logarithm, whose rounding could misclassify near powers
/// of p.
CaseReport classify_case(const Int& c, const Int& d, const Int& prime);

/// Fills report.violations / report.strict_warnings from the trace's beta
/// values at indices [0, horizon).
///
/// Hard bounds (violations) follow the envelope that actually holds at every
/// index:
///   Case1   |beta_i| <  d  for i >= 0
///   Case21  |beta_i| <  d  for i >= 1
///   Case22  d <= beta_i <= c  for 0 <= i <= m,
///           |beta_{m+1}| < c,
///           |beta_i| <= d  for i >= m+2
/// Strict warnings record where the tighter textbook form of a bound fails
/// while the hard form holds: beta_i = c or beta_i = d within [0, m]
/// ("strict_d_lt_beta_lt_c"), |beta_{m+1}| > d ("stmt_abs_beta_le_d"), and
/// |beta_i| = d beyond m+1 ("strict_abs_beta_lt_d"). Boundary and Trivial
/// instances are not checked.
///
/// Requires horizon <= trace.beta_count(), and horizon >= m+2 for Case22;
/// otherwise throws std::out_of_range.
CaseReport check_bounds(const BetaTrace& trace, CaseReport report, std::size_t horizon);

}  // namespace padicexp
