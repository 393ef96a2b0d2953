#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamfix/classifier4.hpp"
#include "hamfix/tfd.hpp"

namespace hamfix {

struct ReportRow {
    std::string label;
    int dim = 6;
    std::vector<int> levels;
    std::vector<std::string> components;  // "level:summary"
    int b2 = 0;
    int bOdd = 0;
    long long chern = 0;  // c1^3, or c1^2 in dimension four
    std::optional<std::string> gromovWidth, hoferZehnder;
    std::optional<std::string> eulerMin;  // e(P_min^+), dimension four

    bool operator==(const ReportRow& o) const;
};

ReportRow report_row(const TFD& t);
ReportRow report_row(const TFD4& t);

std::string to_json(const std::vector<ReportRow>& rows);
std::vector<ReportRow> rows_from_json(const std::string& text);
std::string to_tsv(const std::vector<ReportRow>& rows);

// Line diff with a single full-context hunk; empty when the texts agree.
std::string unified_diff(const std::string& a, const std::string& b, const std::string& nameA, const std::string& nameB);

}  // namespace hamfix
