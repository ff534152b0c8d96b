#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stratos::cli {

// Runs one command line (without the program name). Exit codes: 0 answered,
// 1 answered false under --strict, 2 usage or model error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const std::vector<std::string>& verbs();
// Closest candidate by edit distance, or empty when nothing is close.
std::string suggest(const std::string& word, const std::vector<std::string>& candidates);

}  // namespace stratos::cli
