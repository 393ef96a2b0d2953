#include "hamfix/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hamfix/classifier4.hpp"
#include "hamfix/classifier6.hpp"
#include "hamfix/errors.hpp"
#include "hamfix/golden.hpp"
#include "hamfix/reduction.hpp"
#include "hamfix/report.hpp"
#include "hamfix/toric.hpp"

namespace hamfix {

namespace {

std::string case_of_dim(int maxDim) { return maxDim == 0 ? "I" : maxDim == 2 ? "II" : "III"; }

bool label_in_case(const std::string& label, const std::string& c) { return label.rfind(c + "-", 0) == 0; }

std::string ints(const std::vector<long long>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string levels_str(const std::set<int>& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int l : s) {
        os << (first ? "" : ",") << l;
        first = false;
    }
    os << "}";
    return os.str();
}

std::string z0_str(std::vector<std::string> parts) {
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
    return s.empty() ? "-" : s;
}

std::string line6(const std::string& label, int maxDim, const std::set<int>& crit, int k, int m, const std::string& z0,
                  long long chern, int b2, int b3) {
    std::ostringstream os;
    os << (label.empty() ? "?" : label) << " max=" << maxDim << " crit=" << levels_str(crit) << " k=" << k << " m=" << m
       << " Z0=" << z0 << " c1^3=" << chern << " b2=" << b2 << " b3=" << b3;
    return os.str();
}

std::string line4(const std::string& label, const std::string& manifold, int minDim, int maxDim, int interior, long long e,
                  int b2) {
    std::ostringstream os;
    os << label << " " << manifold << " min=" << minDim << " max=" << maxDim << " interior=" << interior << " e=" << e
       << " b2=" << b2;
    return os.str();
}

IVec3 parse_xi(const std::string& s) {
    IVec3 v{};
    std::istringstream in(s);
    std::string tok;
    int i = 0;
    while (std::getline(in, tok, ',')) {
        if (i >= 3) throw Error(ErrorCode::InvalidInput, "xi needs three integers: " + s);
        try {
            size_t used = 0;
            v[i++] = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidInput, "bad xi component '" + tok + "'");
        }
    }
    if (i != 3) throw Error(ErrorCode::InvalidInput, "xi needs three integers: " + s);
    return v;
}

struct Options {
    int dim = 6;
    std::string caseName = "all";
    std::string format = "tsv";
    int bound = 6;
    bool emitDh = false;
    bool verbose = false;
    std::string row;
    std::string polytope, xi, corpus;
};

std::string dh_table(const std::vector<TFD>& rows) {
    std::ostringstream os;
    os << "label\tt\tdh\n";
    for (const auto& t : rows)
        for (size_t i = 0; i < t.slices.size(); ++i) {
            const auto& s = t.slices[i];
            // quarter steps, both endpoints on the last slice only
            for (Rational x = s.lo; x < s.hi || (i + 1 == t.slices.size() && x == s.hi); x += Rational(1, 4))
                os << (t.label.empty() ? "?" : t.label) << "\t" << to_string(x) << "\t" << to_string(dh(s, x)) << "\n";
        }
    return os.str();
}

int do_classify(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<ReportRow> report;
    bool mismatch = false;
    if (o.dim == 4) {
        auto rows = classify4();
        for (const auto& t : rows)
            if (o.caseName == "all" || label_in_case(t.label, o.caseName)) report.push_back(report_row(t));
        if (o.emitDh) {
            out << "label\tt\tarea\n";
            for (const auto& t : rows)
                for (size_t i = 0; i < t.slices.size(); ++i) {
                    const auto& s = t.slices[i];
                    for (Rational x = s.lo; x < s.hi || (i + 1 == t.slices.size() && x == s.hi); x += Rational(1, 4))
                        out << t.label << "\t" << to_string(x) << "\t" << to_string(s.area(x)) << "\n";
                }
            return 0;
        }
    } else {
        EnumStats st;
        auto rows = enumerate_all(o.bound, &st);
        auto diff = match_golden(rows);
        if (o.verbose)
            err << "bound " << o.bound << ": " << st.boxCandidates << " box candidates, " << st.prefilterSurvivors
                << " after prefilter, " << st.assembled << " assembled, largest coefficient " << st.maxCoefficient
                << " < " << o.bound << "\n";
        std::vector<TFD> kept;
        for (const auto& t : rows)
            if (o.caseName == "all" || case_of_dim(max_dim(t)) == o.caseName) kept.push_back(t);
        for (const auto& s : diff.missing)
            if (o.caseName == "all" || label_in_case(s, o.caseName)) mismatch = true;
        for (const auto& s : diff.mismatched)
            if (o.caseName == "all" || label_in_case(s, o.caseName)) mismatch = true;
        for (const auto& t : kept)
            if (t.label.empty()) mismatch = true;
        if (mismatch) err << diff.to_string();
        if (o.emitDh) {
            out << dh_table(kept);
            return mismatch ? 1 : 0;
        }
        for (const auto& t : kept) report.push_back(report_row(t));
    }
    out << (o.format == "json" ? to_json(report) + "\n" : to_tsv(report));
    return mismatch ? 1 : 0;
}

int do_chern(const Options& o, std::ostream& out) {
    if (o.dim == 4) {
        for (const auto& t : classify4())
            if (t.label == o.row) {
                out << t.c1sq << "\n";
                return 0;
            }
    } else {
        auto rows = enumerate_all(6);
        match_golden(rows);
        for (const auto& t : rows)
            if (!t.label.empty() && t.label == o.row) {
                out << *t.chern << "\n";
                return 0;
            }
    }
    throw Error(ErrorCode::InvalidInput, "unknown row " + o.row);
}

int do_capacities(std::ostream& out, std::ostream& err) {
    auto rows = enumerate_all(6);
    match_golden(rows);
    bool mismatch = false;
    out << "label\tgromov_width\thofer_zehnder\tprinted_gromov_width\tprinted_hofer_zehnder\n";
    for (const auto& g : golden6()) {
        auto it = std::find_if(rows.begin(), rows.end(), [&](const TFD& t) { return t.label == g.label; });
        if (it == rows.end()) {
            err << g.label << ": no classified row\n";
            mismatch = true;
            continue;
        }
        auto c = capacities(*it);
        bool same = c.gromovWidth == g.gromov && c.hoferZehnder == g.hoferZehnder;
        if (!same) {
            err << g.label << ": computed (" << to_string(c.gromovWidth) << ", " << to_string(c.hoferZehnder)
                << "), printed (" << g.gromov << ", " << g.hoferZehnder << ")\n";
            mismatch = true;
        }
        out << g.label << "\t" << to_string(c.gromovWidth) << "\t" << to_string(c.hoferZehnder) << "\t" << g.gromov << "\t"
            << g.hoferZehnder << "\n";
    }
    return mismatch ? 1 : 0;
}

int do_toric(const Options& o, std::ostream& out) {
    auto candidates = enumerate_all(6);
    match_golden(candidates);
    std::vector<PolytopeReport> reports;
    if (!o.polytope.empty()) {
        if (o.xi.empty()) throw Error(ErrorCode::InvalidInput, "--polytope needs --xi");
        reports.push_back(verify_polytope(load_polytope(o.polytope), parse_xi(o.xi), candidates));
    } else {
        reports = verify_corpus(o.corpus.empty() ? default_corpus_dir() : o.corpus, candidates);
    }
    bool ok = true;
    out << "name\texpected\tmatched\tsemifree\tchern_volume\tchern_localization\tok\tmessage\n";
    for (const auto& r : reports) {
        out << r.name << "\t" << (r.expected.empty() ? "-" : r.expected) << "\t" << (r.matched.empty() ? "-" : r.matched)
            << "\t" << (r.semifree ? "yes" : "no") << "\t" << r.chernVolume << "\t" << r.chernLocalization << "\t"
            << (r.ok ? "ok" : "FAIL") << "\t" << r.message << "\n";
        ok = ok && r.ok;
    }
    return ok ? 0 : 1;
}

}  // namespace

std::string render_golden_tables() {
    std::ostringstream os;
    os << "# dimension 6\n";
    for (const auto& g : golden6()) {
        std::vector<std::string> parts;
        for (const auto& p : g.z0) parts.push_back(ints(p.coeffs) + "g" + std::to_string(p.genus));
        os << line6(g.label, g.maxDim, g.crit, g.k, g.m, z0_str(parts), g.chern, g.b2, g.b3) << "\n";
    }
    os << "# capacities\n";
    for (const auto& g : golden6()) os << g.label << " " << g.gromov << " " << g.hoferZehnder << "\n";
    os << "# dimension 4\n";
    for (const auto& g : golden4())
        os << line4(g.label, g.manifold, g.minDim, g.maxDim, g.interior, g.eulerMin, g.b2) << "\n";
    return os.str();
}

std::string render_computed_tables(int bound) {
    auto rows = enumerate_all(bound);
    match_golden(rows);
    std::ostringstream os;
    os << "# dimension 6\n";
    for (const auto& t : rows) {
        auto c = candidate_of(t);
        std::vector<std::string> parts;
        for (const auto& p : c.z0) parts.push_back(ints(p.cls.to_ints()) + "g" + std::to_string(p.genus));
        os << line6(t.label, c.maxDim, interior_levels(t), c.k, c.m, z0_str(parts), *t.chern, (*t.bettiNumbers)[2],
                    (*t.bettiNumbers)[3])
           << "\n";
    }
    os << "# capacities\n";
    for (const auto& t : rows) {
        auto c = capacities(t);
        os << (t.label.empty() ? "?" : t.label) << " " << to_string(c.gromovWidth) << " " << to_string(c.hoferZehnder)
           << "\n";
    }
    os << "# dimension 4\n";
    for (const auto& t : classify4()) os << line4(t.label, t.manifold, t.min.dim, t.max.dim, t.k, t.eulerMin, t.betti[2]) << "\n";
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Semifree Hamiltonian circle actions on monotone six-manifolds"};
    app.require_subcommand(1);
    Options o;

    auto* classify = app.add_subcommand("classify", "enumerate fixed point data");
    classify->add_option("--dim", o.dim)->required()->check(CLI::IsMember({4, 6}));
    classify->add_option("--case", o.caseName)->check(CLI::IsMember({"I", "II", "III", "all"}));
    classify->add_option("--format", o.format)->check(CLI::IsMember({"json", "tsv"}));
    classify->add_option("--bound", o.bound)->check(CLI::Range(1, 64));
    classify->add_flag("--emit-dh", o.emitDh, "print (t, DH(t)) samples instead of rows");
    classify->add_flag("--verbose", o.verbose);

    auto* chern = app.add_subcommand("chern", "Chern number of a table row");
    chern->add_option("--row", o.row)->required();
    chern->add_option("--dim", o.dim)->check(CLI::IsMember({4, 6}));

    auto* caps = app.add_subcommand("capacities", "Gromov width and Hofer-Zehnder capacity per row");

    auto* toric = app.add_subcommand("toric", "toric examples");
    toric->require_subcommand(1);
    auto* verify = toric->add_subcommand("verify", "check polytopes against the classification");
    auto* poly = verify->add_option("--polytope", o.polytope)->check(CLI::ExistingFile);
    verify->add_option("--xi", o.xi)->needs(poly);
    auto* corpus = verify->add_option("--corpus", o.corpus)->check(CLI::ExistingDirectory);
    poly->excludes(corpus);

    auto* tables = app.add_subcommand("tables", "golden tables");
    tables->require_subcommand(1);
    auto* diff = tables->add_subcommand("diff", "recompute and diff against the embedded tables");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (classify->parsed()) return do_classify(o, out, err);
        if (chern->parsed()) return do_chern(o, out);
        if (caps->parsed()) return do_capacities(out, err);
        if (verify->parsed()) return do_toric(o, out);
        if (diff->parsed()) {
            std::string d = unified_diff(render_golden_tables(), render_computed_tables(), "golden", "computed");
            out << d;
            return d.empty() ? 0 : 1;
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::ClassificationMismatch:
            case ErrorCode::NoMatchingTFD:
                return 1;
            default:
                return 2;
        }
    }
    return 2;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace hamfix
