#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hamfix {

// Exit codes: 0 match, 1 classification or verification mismatch, 2 invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

// Text renderings used by `tables diff`.
std::string render_golden_tables();
std::string render_computed_tables(int bound = 6);

}  // namespace hamfix
