#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fgv/configuration.hpp"
#include "fgv/vconfig.hpp"

namespace fgv {

struct ClassifyOptions {
  std::uint64_t max_nodes = 1'000'000;
  double max_seconds = 0;  // 0 = no wall-clock limit
};

enum class ClassifyVerdict { Complete, BudgetExhausted };

/// Isomorph-free search for connected symmetric V-configurations whose
/// diameter matches the derived parameter table.
struct ClassifyResult {
  ClassifyVerdict verdict = ClassifyVerdict::Complete;
  std::vector<LineConfiguration> classes;
  ParameterTable table;
  std::uint64_t nodes = 0;
  std::uint64_t canonical_rejects = 0;
  std::uint64_t candidates_checked = 0;
  double seconds = 0;
  std::string note;
};

ClassifyResult classify_v_configurations(const LineConfiguration& v,
                                         const ClassifyOptions& opts);

}  // namespace fgv
