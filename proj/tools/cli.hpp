#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "report_json.hpp"

namespace catalan::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kComputational = 2 };

enum class OutputMode { Text, Structured };

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

LemmaReport verify_lemma(OddPrime p, OddPrime q, std::uint64_t r, std::uint64_t trials, std::uint64_t seed);

std::string render(const WieferichReport& r, OutputMode mode);
std::string render(const SearchReport& r, OutputMode mode);
std::string render(const ClassNumberResult& r, OutputMode mode);
std::string render(const BoundsReport& r, OutputMode mode);
std::string render(const LemmaReport& r, OutputMode mode);
std::string render(const CriterionVerdict& v, OutputMode mode);
std::string render(const BruteSearchReport& r, OutputMode mode);

}  // namespace catalan::cli
