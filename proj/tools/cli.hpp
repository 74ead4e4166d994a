#pragma once

// koszulspec command line: invariants, spectrum and check.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kspec/pipeline.hpp"

namespace kspec::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kAssumption = 3, kViolation = 4, kIo = 5 };

/// Entry point; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Identifiers occurring in `text`, sorted and deduplicated.
std::vector<std::string> infer_vars(std::string_view text);

/// Rows gamma, mu', mu'', mu, nu, mu(2), nu(2), Sp_P over k = 1..k_max.
/// Zeros are blank; '?' marks entries that need degrees beyond the window.
std::string format_table(const PipelineResult& res);

}  // namespace kspec::cli
