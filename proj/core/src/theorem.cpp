#include "padicexp/theorem.hpp"

#include <stdexcept>

namespace padicexp {

std::string_view case_tag_id(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case21: return "Case2.1";
    case CaseTag::Case22: return "Case2.2";
    case CaseTag::Boundary: return "Boundary";
    case CaseTag::Trivial: return "Trivial";
  }
  return "?";
}

std::string_view case_tag_display(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1: return "Case 1";
    case CaseTag::Case21: return "Case 2.1";
    case CaseTag::Case22: return "Case 2.2";
    case CaseTag::Boundary: return "Boundary";
    case CaseTag::Trivial: return "Trivial";
  }
  return "?";
}

CaseReport classify_case(const Int& c, const Int& d, const Int& prime) {
  if (!is_prime(prime)) throw std::invalid_argument("classify: base must be a prime number");
  if (c < 0) throw std::invalid_argument("classify: c must be nonnegative");
  if (d < 1) throw std::invalid_argument("classify: d must be positive");
  if (c != 0) {
    if (gcd(c, d) != 1) throw std::invalid_argument("classify: hypothesis gcd(c, d) = 1 fails");
    if (gcd(c, prime) != 1)
      throw std::invalid_argument("classify: hypothesis gcd(c, p) = 1 fails");
  }
  if (gcd(d, prime) != 1) throw std::invalid_argument("classify: hypothesis gcd(d, p) = 1 fails");

  CaseReport report;
  report.threshold = prime == 2 ? reduce(c, 2 * d) : reduce(c * (prime - 1), 2 * d * prime);
  if (c == 0 || c == d) {
    report.case_tag = CaseTag::Trivial;
    return report;
  }
  if (c < d) {
    report.case_tag = CaseTag::Case1;
    return report;
  }
  const Int& num = report.threshold.numerator();
  const Int& den = report.threshold.denominator();
  if (num < den) {
    report.case_tag = CaseTag::Case21;
    return report;
  }
  if (num == den) {
    report.case_tag = CaseTag::Boundary;
    return report;
  }
  report.case_tag = CaseTag::Case22;
  // Largest m with p^m <= threshold, by exact comparison p^m * den <= num.
  unsigned m = 0;
  Int pk = 1;
  while (pk * prime * den <= num) {
    pk *= prime;
    ++m;
  }
  report.m = m;
  return report;
}

CaseReport check_bounds(const BetaTrace& trace, CaseReport report, std::size_t horizon) {
  if (horizon < 1) throw std::out_of_range("check_bounds: horizon must be >= 1");
  if (horizon > trace.beta_count())
    throw std::out_of_range("check_bounds: horizon exceeds trace length");
  report.violations.clear();
  report.strict_warnings.clear();

  const Int& c = trace.operand.unit_num();
  const Int& d = trace.operand.unit_den();

  switch (report.case_tag) {
    case CaseTag::Trivial:
    case CaseTag::Boundary:
      return report;  // no bound is claimed for these

    case CaseTag::Case1:
    case CaseTag::Case21: {
      const std::size_t first = report.case_tag == CaseTag::Case1 ? 0 : 1;
      for (std::size_t i = first; i < horizon; ++i) {
        if (abs(trace.beta_at(i)) >= d)
          report.violations.push_back({i, "abs_beta_lt_d", trace.beta_at(i)});
      }
      return report;
    }

    case CaseTag::Case22: {
      const unsigned m = report.m.value();
      if (horizon < static_cast<std::size_t>(m) + 2)
        throw std::out_of_range("check_bounds: horizon must cover index m+1");
      for (std::size_t i = 0; i <= m; ++i) {
        const Int& beta = trace.beta_at(i);
        if (beta < d || beta > c) {
          report.violations.push_back({i, "d_le_beta_le_c", beta});
        } else if (beta == d || beta == c) {
          report.strict_warnings.push_back({i, "strict_d_lt_beta_lt_c", beta});
        }
      }
      {
        const Int& beta = trace.beta_at(m + 1);
        if (abs(beta) >= c) {
          report.violations.push_back({m + 1, "abs_beta_lt_c", beta});
        } else if (abs(beta) > d) {
          report.strict_warnings.push_back({m + 1, "stmt_abs_beta_le_d", beta});
        }
      }
      for (std::size_t i = m + 2; i < horizon; ++i) {
        const Int& beta = trace.beta_at(i);
        if (abs(beta) > d) {
          report.violations.push_back({i, "abs_beta_le_d", beta});
        } else if (abs(beta) == d) {
          report.strict_warnings.push_back({i, "strict_abs_beta_lt_d", beta});
        }
      }
      return report;
    }
  }
  return report;
}

}  // namespace padicexp
