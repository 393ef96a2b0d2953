#include "hamfix/report.hpp"

#include <sstream>

#include <json.hpp>

#include "hamfix/classifier6.hpp"
#include "hamfix/errors.hpp"
#include "hamfix/localization.hpp"

namespace hamfix {

namespace {

using json = nlohmann::json;

std::string multiple_of_u(long long e) {
    if (e == 0) return "0";
    if (e == 1) return "u";
    if (e == -1) return "-u";
    return std::to_string(e) + "u";
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

bool ReportRow::operator==(const ReportRow& o) const {
    return label == o.label && dim == o.dim && levels == o.levels && components == o.components && b2 == o.b2 &&
           bOdd == o.bOdd && chern == o.chern && gromovWidth == o.gromovWidth && hoferZehnder == o.hoferZehnder &&
           eulerMin == o.eulerMin;
}

ReportRow report_row(const TFD& t) {
    ReportRow r;
    r.label = t.label;
    r.dim = 6;
    r.levels = t.levels();
    for (const auto& ev : t.crit)
        for (const auto& fc : ev.components) r.components.push_back(std::to_string(ev.level) + ":" + fc.summary());
    auto b = t.bettiNumbers ? *t.bettiNumbers : betti(t);
    r.b2 = b[2];
    r.bOdd = b[1] + b[3] + b[5];
    r.chern = t.chern ? *t.chern : chern_number(t);
    if (t.minimum().kind == ComponentKind::IsolatedPoint) {
        auto c = capacities(t);
        r.gromovWidth = to_string(c.gromovWidth);
        r.hoferZehnder = to_string(c.hoferZehnder);
    }
    return r;
}

ReportRow report_row(const TFD4& t) {
    ReportRow r;
    r.label = t.label;
    r.dim = 4;
    r.levels = t.levels();
    auto ext = [](const Extremum4& e) { return std::to_string(e.level) + ":" + (e.dim == 0 ? "pt" : "S2"); };
    r.components.push_back(ext(t.min));
    for (int i = 0; i < t.k; ++i) r.components.push_back("0:pt");
    r.components.push_back(ext(t.max));
    r.b2 = t.betti[2];
    r.bOdd = t.betti[1] + t.betti[3];
    r.chern = t.c1sq;
    if (t.min.dim == 0) {
        auto lv = t.levels();
        r.gromovWidth = std::to_string(lv[1] - lv[0]);
        r.hoferZehnder = std::to_string(lv.back() - lv[0]);
    }
    r.eulerMin = multiple_of_u(t.eulerMin);
    return r;
}

std::string to_json(const std::vector<ReportRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json j;
        j["label"] = r.label;
        j["dim"] = r.dim;
        j["levels"] = r.levels;
        j["components"] = r.components;
        j["b2"] = r.b2;
        j["b_odd"] = r.bOdd;
        j["chern"] = r.chern;
        j["gromov_width"] = r.gromovWidth ? json(*r.gromovWidth) : json(nullptr);
        j["hofer_zehnder"] = r.hoferZehnder ? json(*r.hoferZehnder) : json(nullptr);
        if (r.eulerMin) j["euler_min"] = *r.eulerMin;
        arr.push_back(j);
    }
    return arr.dump(2);
}

std::vector<ReportRow> rows_from_json(const std::string& text) {
    std::vector<ReportRow> out;
    try {
        for (const auto& j : json::parse(text)) {
            ReportRow r;
            r.label = j.at("label").get<std::string>();
            r.dim = j.at("dim").get<int>();
            r.levels = j.at("levels").get<std::vector<int>>();
            r.components = j.at("components").get<std::vector<std::string>>();
            r.b2 = j.at("b2").get<int>();
            r.bOdd = j.at("b_odd").get<int>();
            r.chern = j.at("chern").get<long long>();
            if (!j.at("gromov_width").is_null()) r.gromovWidth = j["gromov_width"].get<std::string>();
            if (!j.at("hofer_zehnder").is_null()) r.hoferZehnder = j["hofer_zehnder"].get<std::string>();
            if (j.contains("euler_min")) r.eulerMin = j["euler_min"].get<std::string>();
            out.push_back(r);
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("report JSON: ") + e.what());
    }
    return out;
}

std::string to_tsv(const std::vector<ReportRow>& rows) {
    bool four = !rows.empty() && rows.front().dim == 4;
    std::ostringstream os;
    os << "label\tlevels\tcomponents\tb2\tb_odd\t" << (four ? "c1^2" : "c1^3") << "\tgromov_width\thofer_zehnder";
    if (four) os << "\teuler_min";
    os << "\n";
    auto join = [](const auto& v) {
        std::ostringstream s;
        for (size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
        return s.str();
    };
    for (const auto& r : rows) {
        os << r.label << "\t" << join(r.levels) << "\t" << join(r.components) << "\t" << r.b2 << "\t" << r.bOdd << "\t"
           << r.chern << "\t" << r.gromovWidth.value_or("") << "\t" << r.hoferZehnder.value_or("");
        if (four) os << "\t" << r.eulerMin.value_or("");
        os << "\n";
    }
    return os.str();
}

std::string unified_diff(const std::string& a, const std::string& b, const std::string& nameA, const std::string& nameB) {
    auto x = split_lines(a), y = split_lines(b);
    size_t n = x.size(), m = y.size();
    std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
    for (size_t i = n; i-- > 0;)
        for (size_t j = m; j-- > 0;)
            lcs[i][j] = x[i] == y[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    if (static_cast<size_t>(lcs[0][0]) == n && n == m) return "";
    std::ostringstream os;
    os << "--- " << nameA << "\n+++ " << nameB << "\n@@ -1," << n << " +1," << m << " @@\n";
    size_t i = 0, j = 0;
    while (i < n || j < m) {
        if (i < n && j < m && x[i] == y[j]) {
            os << " " << x[i++] << "\n";
            ++j;
        } else if (i < n && (j == m || lcs[i + 1][j] >= lcs[i][j + 1])) {
            os << "-" << x[i++] << "\n";
        } else {
            os << "+" << y[j++] << "\n";
        }
    }
    return os.str();
}

}  // namespace hamfix
