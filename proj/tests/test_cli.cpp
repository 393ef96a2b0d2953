#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "hamfix/cli.hpp"
#include "hamfix/classifier4.hpp"
#include "hamfix/classifier6.hpp"
#include "hamfix/errors.hpp"
#include "hamfix/report.hpp"

using namespace hamfix;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int c = run(args, out, err);
    return {c, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

size_t tabs(const std::string& s) { return std::count(s.begin(), s.end(), '\t'); }

}  // namespace

TEST_CASE("cli: chern of a row") {
    auto r = cli({"chern", "--row", "III-3.2"});
    CHECK(r.code == 0);
    CHECK(r.out == "46\n");
    CHECK(cli({"chern", "--row", "I-2"}).out == "48\n");
    CHECK(cli({"chern", "--row", "I-1", "--dim", "4"}).out == "8\n");
}

TEST_CASE("cli: invalid input exits 2") {
    auto r = cli({"chern", "--row", "IV-1"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("IV-1") != std::string::npos);
    CHECK(cli({"classify", "--dim", "5"}).code == 2);
    CHECK(cli({"classify", "--dim", "6", "--nope"}).code == 2);
    CHECK(cli({"classify"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"toric", "verify", "--polytope", "/nonexistent.json"}).code == 2);
    CHECK(cli({"toric", "verify", "--polytope", HAMFIX_TEST_DATA "/polytopes/cube.json", "--xi", "1,x,0"}).code == 2);
    CHECK(cli({"classify", "--dim", "6", "--bound", "2"}).code == 2);
}

TEST_CASE("cli: four-dimensional table") {
    auto r = cli({"classify", "--dim", "4"});
    CHECK(r.code == 0);
    auto l = lines(r.out);
    REQUIRE(l.size() == 9);
    for (const auto& x : l) CHECK(tabs(x) == tabs(l[0]));
    CHECK(l[5].rfind("III-1\t", 0) == 0);
    CHECK(l[5].substr(l[5].rfind('\t') + 1) == "0");
    CHECK(l[1].substr(l[1].rfind('\t') + 1) == "-u");
    auto iii = cli({"classify", "--dim", "4", "--case", "III"});
    CHECK(lines(iii.out).size() == 5);
}

TEST_CASE("cli: six-dimensional table") {
    auto r = cli({"classify", "--dim", "6", "--format", "tsv", "--verbose"});
    auto l = lines(r.out);
    // eighteen printed rows and the unprinted survivor, which makes this a mismatch
    CHECK(r.code == 1);
    REQUIRE(l.size() == 20);
    for (const auto& x : l) CHECK(tabs(x) == tabs(l[0]));
    CHECK(l[1].rfind("I-1\t", 0) == 0);
    CHECK(l[19].rfind("\t", 0) == 0);
    CHECK(r.err.find("largest coefficient") != std::string::npos);
    CHECK(r.err.find("+ ") != std::string::npos);

    auto one = cli({"classify", "--dim", "6", "--case", "I"});
    CHECK(one.code == 0);
    CHECK(lines(one.out).size() == 4);
    auto three = cli({"classify", "--dim", "6", "--case", "III"});
    CHECK(three.code == 0);
    CHECK(lines(three.out).size() == 11);
    CHECK(cli({"classify", "--dim", "6", "--case", "II"}).code == 1);
}

TEST_CASE("cli: JSON output is stable") {
    auto r = cli({"classify", "--dim", "6", "--case", "III", "--format", "json"});
    auto rows = rows_from_json(r.out);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0].label == "III-1");
    CHECK(rows[0].chern == 64);
    CHECK(rows[0].gromovWidth == std::optional<std::string>("4"));
    CHECK(to_json(rows) + "\n" == r.out);
    CHECK(rows_from_json(to_json(rows)) == rows);
    CHECK_THROWS_AS(rows_from_json("[{\"label\": 3}]"), Error);
}

TEST_CASE("cli: DH samples") {
    auto r = cli({"classify", "--dim", "6", "--case", "III", "--emit-dh"});
    auto l = lines(r.out);
    CHECK(l[0] == "label\tt\tdh");
    // III-1 starts at the point minimum with DH zero and ends at a positive value
    CHECK(l[1] == "III-1\t-3\t0");
    CHECK(std::find(l.begin(), l.end(), "III-1\t1\t16") != l.end());
}

TEST_CASE("cli: capacities") {
    auto r = cli({"capacities"});
    // I-1 disagrees with the printed table
    CHECK(r.code == 1);
    CHECK(r.err.find("I-1: computed (3, 6), printed (2, 6)") != std::string::npos);
    auto l = lines(r.out);
    CHECK(l.size() == 19);
    CHECK(std::find(l.begin(), l.end(), "III-1\t4\t4\t4\t4") != l.end());
}

TEST_CASE("cli: toric verify") {
    auto r = cli({"toric", "verify", "--polytope", HAMFIX_TEST_DATA "/polytopes/simplex.json", "--xi", "1,1,1"});
    CHECK(r.out.find("III-1") != std::string::npos);
    auto c = cli({"toric", "verify", "--corpus", HAMFIX_TEST_DATA "/polytopes"});
    CHECK(c.code == 0);
    CHECK(lines(c.out).size() == 15);
}

TEST_CASE("cli: tables diff") {
    auto a = cli({"tables", "diff"});
    auto b = cli({"tables", "diff"});
    CHECK(a.out == b.out);
    CHECK(a.code == 1);
    auto l = lines(a.out);
    REQUIRE(l.size() > 3);
    CHECK(l[0] == "--- golden");
    CHECK(l[1] == "+++ computed");
    CHECK(std::find(l.begin(), l.end(), "-I-1 2 6") != l.end());
    CHECK(std::find(l.begin(), l.end(), "+I-1 3 6") != l.end());
    int changed = 0;
    for (size_t i = 3; i < l.size(); ++i) changed += l[i][0] != ' ';
    // capacity of I-1 (two lines) and the unprinted row in both sections (two lines)
    CHECK(changed == 4);
    CHECK(render_golden_tables() == render_golden_tables());
}

TEST_CASE("unified diff") {
    CHECK(unified_diff("a\nb\n", "a\nb\n", "x", "y").empty());
    CHECK(unified_diff("a\nb\n", "a\nc\n", "x", "y") == "--- x\n+++ y\n@@ -1,2 +1,2 @@\n a\n-b\n+c\n");
}
