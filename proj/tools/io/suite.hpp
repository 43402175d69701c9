#pragma once

#include <cstdint>
#include <optional>

#include <nlohmann/json.hpp>

#include "fae/oracle.hpp"
#include "fae/statement.hpp"

namespace fae::io {

/// Shift cap used for randomized runs: the full m(2m Delta + 1)^m when
/// m = 1 or Delta <= 1, otherwise 16 (nullopt means the full cap).
std::optional<Int> desk_cap(const InputStatement& s);

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t count = 40;
  std::optional<Int> l1_cap;  // overrides desk_cap
  OracleOptions oracle;
};

/// Random box instances (m in {1,2}, n <= 3, Delta <= 2, widths <= 6), each
/// decided by the pipeline and by the naive oracle.
nlohmann::json run_suite(const SuiteOptions& options);

}  // namespace fae::io
