#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "cheb/fields.hpp"

namespace cheb {

struct SelftestOptions {
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

/// Module names accepted by run_selftest, in run order.
const std::vector<std::string>& selftest_modules();

/// Oracle comparisons for one module (or "all"). The report contains no
/// timings, so equal inputs give byte-identical output.
nlohmann::ordered_json run_selftest(const std::string& module, const Catalog& catalog, const SelftestOptions& opts);

}  // namespace cheb
