#pragma once

#include "padicexp/period.hpp"
#include "padicexp/scan.hpp"
#include "padicexp/theorem.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace padicexp {

// Text output conventions, frozen for golden-file stability:
//  - digit lists are concatenated for p <= 10 and comma-separated for p > 10;
//  - the digit stream reads least-significant digit first; a negative
//    valuation inserts '.' between the exponent -1 and exponent 0 digits, a
//    positive valuation shows as leading zero digits;
//  - negative values use ASCII '-' and table columns are right-aligned on the
//    widest entry of each column.

std::string digit_list_string(const std::vector<Int>& digits, const Int& prime);

/// First `count` stream digits, with valuation handling as above.
std::string render_digit_stream(const PAdicExpansion& e, std::size_t count);

/// "period=1210, preperiod=11, valuation=0"; empty lists render "(empty)".
std::string render_period_line(const PAdicExpansion& e);

/// Three-row table (k / alpha_k / beta_k) over the first `columns` steps.
std::string render_trace_table(const BetaTrace& trace, std::size_t columns);

/// Multi-line classification summary; first line "case: Case 2.2, m=2".
std::string render_case_report(const CaseReport& report, std::size_t horizon);

/// Expansion document; every integer is a decimal string. Schema:
/// {prime, valuation, preperiod, period, digits, case:{tag, m,
/// threshold:"num/den"}|null, trace:[{k, alpha, beta}]}.
std::string render_expansion_json(const PAdicExpansion& e, const BetaTrace& trace,
                                  const std::optional<CaseReport>& report,
                                  std::size_t digit_count);

/// Key/value scan summary, one "key: value" per line.
std::string render_scan_report(const ScanReport& report);

/// JSON scan summary with the options echoed; integers as decimal strings.
std::string render_scan_report_json(const ScanReport& report, const ScanOptions& options);

}  // namespace padicexp
