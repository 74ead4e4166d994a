#pragma once

// Built-in inputs with known local data, used by `check --builtin`, the
// test suites and the benchmarks.

#include <optional>
#include <string>
#include <vector>

namespace kspec {

struct CorpusEntry {
  std::string name;
  std::string vars;  // "x,y,z"
  std::string poly;
  // smooth, nodal, wh (only weighted homogeneous singularities), nonwh,
  // fewer-vars, monomial-powers, binary
  std::vector<std::string> tags;
  std::optional<std::string> alpha_min;        // minimal local exponent, n = 3
  std::optional<std::string> local_exponents;  // "3/4 3/4 1 1 5/4 5/4"
  std::optional<int> rspan;  // dimension of the span of the singular points

  bool has(const std::string& tag) const;
};

const std::vector<CorpusEntry>& builtin_corpus();

}  // namespace kspec
