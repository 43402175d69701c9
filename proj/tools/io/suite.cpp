#include "suite.hpp"

#include "fae/random_instances.hpp"
#include "fae/reduction.hpp"
#include "instance_io.hpp"

namespace fae::io {

std::optional<Int> desk_cap(const InputStatement& s) {
  if (s.m() == 1 || s.delta() <= 1) return std::nullopt;
  return Int(16);
}

nlohmann::json run_suite(const SuiteOptions& options) {
  Rng rng(options.seed);
  json instances = json::array();
  std::size_t agree = 0, counterexamples = 0;
  for (std::size_t k = 0; k < options.count; ++k) {
    const std::size_t m = 1 + rng.index(2);
    InputStatement s = random_statement(rng, BodyKind::box, m, 3, 2, 4, 6);
    DecideOptions d;
    d.l1_cap = options.l1_cap ? options.l1_cap : desk_cap(s);
    d.oracle = options.oracle;
    Verdict pipeline = decide(s, d);
    Verdict naive = decide_naive(s, options.oracle);
    const bool same = pipeline.status == naive.status;
    agree += same;
    counterexamples += !pipeline.valid();
    instances.push_back({{"index", k},
                         {"instance", statement_to_json(s)},
                         {"l1_cap", to_json(pipeline.trace->l1_cap)},
                         {"decide", verdict_to_json(pipeline)},
                         {"oracle", verdict_to_json(naive)},
                         {"agree", same}});
  }
  return {{"seed", options.seed},
          {"instances", instances},
          {"summary", {{"count", options.count}, {"agree", agree}, {"counterexamples", counterexamples}}}};
}

}  // namespace fae::io
