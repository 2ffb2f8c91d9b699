#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shimura/rational.hpp"
#include "shimura/report.hpp"

namespace shimura {

struct CmTableRow {
    std::size_t line = 0;          ///< 1-based line in the source file
    std::string field_label;       ///< "8.0.D.k"
    int degree = 0;
    int signature = 0;
    Integer disc;                  ///< D from the label
    std::vector<std::pair<Integer, unsigned>> disc_factorization;
    std::string definition_field_label;
};

inline constexpr const char* kCmTableHeader = "field_label\tdisc_factorization\tdefinition_field_label";

/// Parses TSV text; errors name the source and line.
std::vector<CmTableRow> parse_cm_table(const std::string& text, const std::string& source = "<input>");
std::vector<CmTableRow> load_cm_table(const std::string& path);

/// Which prime the table pins and at what exponent (7^4 or 3^8).
struct CmTableExpectation {
    std::string name;
    Integer prime;
    unsigned exponent;
};
CmTableExpectation cm_expectation_x7();
CmTableExpectation cm_expectation_x9();

/// Per-row recomposition, independent factorization, fourth powers and the pinned valuation.
SuiteResult verify_cm_rows(const std::vector<CmTableRow>& rows, const CmTableExpectation& expect);

} // namespace shimura
