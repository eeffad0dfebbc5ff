#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kkw {

inline constexpr const char* kReportVersion = "1";

struct RunConfig {
  int dim = 4;
  std::string task = "all";  // traces, lemmas, psi, theorem, interior, all
  std::string case_filter;   // psi only: aI, aII, aIII, b, c
  int samples = 32;
  std::uint64_t seed = 1;
  bool substitute_constants = false;
  bool timing = false;  // wall-clock millis; off keeps reports byte-identical
};

// Throws std::invalid_argument on an invalid configuration.
void validate(const RunConfig& c);

struct ResultEntry {
  std::string id;
  std::string anchor;
  std::string verdict;  // holds, fails, computed
  bool binding = true;
  std::string value;
  int samples = 0;
  std::uint64_t seed = 0;
  long long millis = 0;
  std::vector<std::uint64_t> failing_seeds;
  std::map<std::string, std::vector<std::string>> diff;  // family -> residual terms
};

struct Report {
  RunConfig config;
  std::vector<ResultEntry> results;
  bool binding_pass() const;
};

Report run(const RunConfig& c);

std::string to_json(const Report& r);
std::string to_markdown(const Report& r);

}  // namespace kkw
