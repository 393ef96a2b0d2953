#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hamfix/golden.hpp"
#include "hamfix/tfd.hpp"

namespace hamfix {

struct ExtremalProfile {
    int minDim = 0;
    int maxDim = 0;
};

// A candidate before the sweep: point counts at -1 and +1 and the Z_0 components
// as classes of P^2 # k.
struct Candidate {
    int maxDim = 0;
    int k = 0;
    int m = 0;
    Splitting z0;
};

// Builds the TFD and runs the full predicate suite. On rejection returns
// nullopt and, if `why` is given, stores the first failed predicate.
std::optional<TFD> assemble(const Candidate& c, std::string* why = nullptr);

// Re-runs every predicate on an assembled TFD.
bool predicates_hold(const TFD& t, std::string* why = nullptr);

TFD flip(const TFD& t);

Capacities capacities(const TFD& t);

struct EnumStats {
    long long boxCandidates = 0;
    long long prefilterSurvivors = 0;
    long long assembled = 0;
    int maxCoefficient = 0;  // largest |coefficient| among survivors
};

std::vector<TFD> enumerate_tfd(const ExtremalProfile& profile, const std::set<int>& crit, int bound = 6,
                               EnumStats* stats = nullptr);

// Candidate data recovered from an emitted TFD.
Candidate candidate_of(const TFD& t);
int max_dim(const TFD& t);
std::set<int> interior_levels(const TFD& t);

struct TableDiff {
    std::vector<std::string> missing;
    std::vector<std::string> extra;
    std::vector<std::string> mismatched;
    bool empty() const { return missing.empty() && extra.empty() && mismatched.empty(); }
    std::string to_string() const;
};

// Labels rows against the golden table (relabelling E indices to the printed
// ones), sorts them in table order and reports every disagreement. Rows with
// no printed counterpart stay, unlabelled, after the table rows.
TableDiff match_golden(std::vector<TFD>& rows);

// Every profile and crit subset; throws ClassificationMismatch unless the
// output is exactly the golden table.
std::vector<TFD> classify_all(int bound = 6, EnumStats* stats = nullptr);

// Union of enumerate_tfd over every profile and crit subset, unlabelled.
std::vector<TFD> enumerate_all(int bound = 6, EnumStats* stats = nullptr);

}  // namespace hamfix
