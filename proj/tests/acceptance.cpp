// One PASS/FAIL line per acceptance criterion; exits 1 if any line fails.
#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>

#include "hamfix/classifier4.hpp"
#include "hamfix/classifier6.hpp"
#include "hamfix/cli.hpp"
#include "hamfix/golden.hpp"
#include "hamfix/localization.hpp"
#include "hamfix/reduction.hpp"
#include "hamfix/toric.hpp"

using namespace hamfix;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << n << " " << what;
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
    failures += !ok;
}

struct Cli {
    int code;
    std::string out, err;
};

Cli cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int c = run(args, out, err);
    return {c, out.str(), err.str()};
}

int data_lines(const std::string& tsv) { return static_cast<int>(std::count(tsv.begin(), tsv.end(), '\n')) - 1; }

const TFD* find(const std::vector<TFD>& rows, const std::string& label) {
    for (const auto& t : rows)
        if (t.label == label) return &t;
    return nullptr;
}

}  // namespace

int main() {
    EnumStats stats;
    auto rows = enumerate_all(6, &stats);
    auto diff = match_golden(rows);
    const auto& gold = golden6();

    {
        auto r = cli({"classify", "--dim", "6", "--format", "tsv"});
        bool empties = enumerate_tfd({0, 2}, {-1}).empty() && enumerate_tfd({0, 2}, {-1, 1}).empty();
        int printed = 0;
        for (const auto& g : gold) printed += find(rows, g.label) != nullptr;
        std::ostringstream d;
        d << printed << "/" << gold.size() << " printed rows reproduced, " << diff.missing.size() << " missing, "
          << diff.mismatched.size() << " mismatched, " << diff.extra.size() << " unprinted survivors";
        for (const auto& e : diff.extra) d << " [" << e << "]";
        d << "; cli printed " << data_lines(r.out) << " rows, exit " << r.code
          << "; empty cases " << (empties ? "empty" : "NOT empty");
        report(1, "six-dimensional classification", diff.empty() && empties && r.code == 0 && data_lines(r.out) == 18,
               d.str());
    }

    {
        std::string bad;
        for (const auto& g : gold) {
            const TFD* t = find(rows, g.label);
            if (!t || *t->chern != g.chern) bad += " " + g.label;
        }
        auto r = cli({"chern", "--row", "III-3.2"});
        bool ok = bad.empty() && r.code == 0 && r.out == "46\n";
        report(2, "Chern numbers", ok, bad.empty() ? "18 rows exact, III-3.2 -> " + r.out.substr(0, r.out.size() - 1)
                                                   : "wrong:" + bad);
    }

    {
        std::string bad;
        for (const auto& g : gold) {
            const TFD* t = find(rows, g.label);
            if (!t || !integrate(*t, Integrand::One).is_zero() || !integrate(*t, Integrand::C1).is_zero()) bad += " " + g.label;
        }
        report(3, "localization of 1 and c1", bad.empty(), bad.empty() ? "both vanish on 18 rows" : "nonzero:" + bad);
    }

    {
        std::string bad;
        for (const auto& g : gold) {
            const TFD* t = find(rows, g.label);
            if (!t) {
                bad += " " + g.label;
                continue;
            }
            const auto& b = *t->bettiNumbers;
            if (b[2] != g.b2 || b[3] != g.b3 || b[1] != 0 || b[5] != 0 || !is_palindromic(b)) bad += " " + g.label;
        }
        report(4, "Betti numbers", bad.empty(), bad.empty() ? "b2, b_odd and palindromy on 18 rows" : "wrong:" + bad);
    }

    {
        std::string bad;
        for (const auto& g : gold) {
            const TFD* t = find(rows, g.label);
            if (!t) {
                bad += " " + g.label + " missing";
                continue;
            }
            auto c = capacities(*t);
            if (c.gromovWidth != g.gromov || c.hoferZehnder != g.hoferZehnder)
                bad += " " + g.label + " computed (" + to_string(c.gromovWidth) + "," + to_string(c.hoferZehnder) +
                       ") printed (" + std::to_string(g.gromov) + "," + std::to_string(g.hoferZehnder) + ")";
        }
        report(5, "capacities", bad.empty(), bad.empty() ? "18 rows exact" : bad.substr(1));
    }

    {
        auto r = cli({"classify", "--dim", "4", "--format", "tsv"});
        std::vector<long long> e;
        for (const auto& t : classify4()) e.push_back(t.eulerMin);
        bool eok = e == std::vector<long long>{-1, -1, -1, -1, 0, -1, 0, -1};
        bool tok = enumerate_case3_tuples() == golden_case3_tuples();
        std::ostringstream d;
        d << data_lines(r.out) << " rows, exit " << r.code << ", Euler column " << (eok ? "exact" : "WRONG")
          << ", tuples " << (tok ? "exact" : "WRONG");
        report(6, "four-dimensional classification", r.code == 0 && data_lines(r.out) == 8 && eok && tok, d.str());
    }

    {
        auto reports = verify_corpus(default_corpus_dir(), rows);
        std::string bad;
        int labelled = 0;
        for (const auto& p : reports) {
            if (!p.ok) bad += " " + p.name + " (" + p.message + ")";
            labelled += !p.expected.empty();
        }
        std::ostringstream d;
        d << reports.size() << " polytopes, " << labelled << " labelled";
        if (!bad.empty()) d << ", failed:" << bad;
        report(7, "toric corpus", bad.empty() && labelled >= 13, d.str());
    }

    {
        int dh = 0, drop = 0, inv = 0;
        for (const auto& t : rows) {
            for (size_t i = 1; i + 1 < t.crit.size(); ++i) {
                if (dh_difference(t.slices[i - 1], t.slices[i])[0] != 0) ++dh;
                if (t.crit[i].level == -1 &&
                    !check_dh_decrease(t.slices[i - 1], t.slices[i], static_cast<int>(t.crit[i].components.size())))
                    ++drop;
            }
            TFD f = flip(t);
            TFD ff = flip(f);
            bool same = ff.slices == t.slices && ff.levels() == t.levels();
            if (!same || chern_number(f) != *t.chern) ++inv;
        }
        int lists = 0;
        for (int k = 0; k <= 3; ++k) {
            SurfaceLattice L = SurfaceLattice::blowup(k);
            std::set<std::vector<long long>> listed, brute;
            for (int i = 1; i <= k; ++i) {
                std::vector<long long> v(k + 1, 0);
                v[i] = 1;
                listed.insert(v);
                for (int j = i + 1; j <= k; ++j) {
                    std::vector<long long> w(k + 1, 0);
                    w[0] = 1;
                    w[i] = w[j] = -1;
                    listed.insert(w);
                }
            }
            for (const auto& c : exceptional_classes(L, 6)) brute.insert(c.to_ints());
            lists += listed != brute;
        }
        bool box = stats.maxCoefficient < 6;
        std::ostringstream d;
        d << rows.size() << " survivors: " << dh << " DH jumps, " << drop << " bad drops, " << inv
          << " flip failures, " << lists << " exceptional list mismatches, largest coefficient " << stats.maxCoefficient;
        report(8, "property suites", dh == 0 && drop == 0 && inv == 0 && lists == 0 && box, d.str());
    }

    return failures ? 1 : 0;
}
