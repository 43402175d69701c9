// fae: decide forall-exist integer statements from JSON instance files.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fae/frobenius.hpp"
#include "fae/oracle.hpp"
#include "fae/orthant_solver.hpp"
#include "fae/reduction.hpp"
#include "io/instance_io.hpp"
#include "io/suite.hpp"

namespace {

using fae::io::json;

constexpr int kValid = 0;
constexpr int kCounterexample = 1;
constexpr int kError = 2;

struct Args {
  std::string input;
  std::optional<std::int64_t> l1_cap;
  std::optional<std::size_t> budget;
  std::uint64_t seed = 1;
  std::size_t count = 40;
  std::optional<std::int64_t> t_max;
  std::int64_t z_box = 200;
  bool oracle = false;
};

void print(const json& j) { std::cout << j.dump() << "\n"; }

fae::OracleOptions oracle_options(const Args& a) {
  fae::OracleOptions o;
  if (a.budget) o.node_budget = *a.budget;
  return o;
}

fae::DecideOptions decide_options(const Args& a) {
  fae::DecideOptions d;
  if (a.l1_cap) d.l1_cap = fae::Int(*a.l1_cap);
  if (a.budget) d.max_shift_elements = *a.budget;
  d.oracle = oracle_options(a);
  return d;
}

int status_code(const fae::Verdict& v) { return v.valid() ? kValid : kCounterexample; }

int run_decide(const Args& a, bool use_oracle) {
  auto s = fae::io::statement_from_json(fae::io::read_json_file(a.input));
  fae::Verdict v = use_oracle ? fae::decide_naive(s, oracle_options(a)) : fae::decide(s, decide_options(a));
  print(fae::io::verdict_to_json(v));
  return status_code(v);
}

int run_trace(const Args& a) {
  auto s = fae::io::statement_from_json(fae::io::read_json_file(a.input));
  fae::Verdict v = fae::decide(s, decide_options(a));
  json out = fae::io::verdict_to_json(v);
  out["trace"] = fae::io::trace_to_json(*v.trace);
  print(out);
  return status_code(v);
}

int run_eq3(const Args& a) {
  json j = fae::io::read_json_file(a.input);
  if (!j.contains("Q") || !j.contains("C")) throw fae::ParseError("eq3 instance needs \"Q\" and \"C\"");
  auto q = fae::io::body_from_json(j.at("Q"));
  auto shifts = fae::io::int_vectors_from_json(j.at("C"));
  for (const auto& c : shifts)
    if (c.size() != q->dim()) throw fae::DimensionMismatch("shift dimension differs from Q");
  auto b = a.oracle ? fae::decide_orthant_naive(*q, shifts, oracle_options(a)) : fae::solve(*q, shifts);
  if (!b) {
    print({{"status", "valid"}});
    return kValid;
  }
  bool covered = false;
  for (const auto& c : shifts) {
    bool le = true;
    for (std::size_t i = 0; i < c.size(); ++i) le = le && c[i] <= (*b)[i];
    covered = covered || le;
  }
  print({{"status", "counterexample"}, {"b", fae::io::to_json(*b)}, {"verified", q->contains(*b) && !covered}});
  return kCounterexample;
}

int run_frobenius(const Args& a) {
  json j = fae::io::read_json_file(a.input);
  if (!j.contains("W")) throw fae::ParseError("frobenius instance needs \"W\"");
  auto w = fae::io::int_matrix_from_json(j.at("W"));
  std::optional<fae::Int> t_max;
  if (a.t_max) t_max = fae::Int(*a.t_max);
  auto report = fae::frobenius_report(w, fae::Int(a.z_box), t_max);
  print(fae::io::frobenius_to_json(report));
  return report.search.t ? kValid : kError;
}

int run_suite(const Args& a) {
  fae::io::SuiteOptions o;
  o.seed = a.seed;
  o.count = a.count;
  if (a.l1_cap) o.l1_cap = fae::Int(*a.l1_cap);
  o.oracle = oracle_options(a);
  json out = fae::io::run_suite(o);
  print(out);
  return out["summary"]["agree"] == out["summary"]["count"] ? kValid : kError;
}

void add_common(CLI::App* cmd, Args& a, bool needs_input) {
  auto* in = cmd->add_option("--input", a.input, "instance JSON file");
  if (needs_input) in->required()->check(CLI::ExistingFile);
  cmd->add_option("--l1-cap", a.l1_cap, "multiplicity cap for shift sets (overrides m(2m Delta+1)^m)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--budget", a.budget, "enumeration guard: search nodes per feasibility query");
  cmd->add_option("--seed", a.seed, "seed for randomized suites");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide forall-exist integer statements  for all b in Q: exists x in Z^n, W x <= b"};
  app.require_subcommand(1);
  Args a;

  auto* decide = app.add_subcommand("decide", "run the reduction pipeline");
  add_common(decide, a, true);
  decide->add_flag("--oracle", a.oracle, "use the brute-force oracle instead");
  auto* oracle = app.add_subcommand("oracle", "brute-force scan of every b in Q");
  add_common(oracle, a, true);
  auto* trace = app.add_subcommand("trace", "pipeline verdict with per-basis statistics");
  add_common(trace, a, true);
  auto* eq3 = app.add_subcommand("eq3", "terminal problem: for all b in Q exists c in C with c <= b");
  add_common(eq3, a, true);
  eq3->add_flag("--oracle", a.oracle, "use the naive scan instead of the cell solver");
  auto* frob = app.add_subcommand("frobenius", "diagonal Frobenius number and bounds");
  add_common(frob, a, true);
  frob->add_option("--t-max", a.t_max, "largest level searched (default: closed-form bound)");
  frob->add_option("--z-box", a.z_box, "search region [-z, z]^m")->capture_default_str();
  auto* suite = app.add_subcommand("suite", "randomized pipeline vs oracle comparison");
  add_common(suite, a, false);
  suite->add_option("--count", a.count, "number of instances")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (decide->parsed()) return run_decide(a, a.oracle);
    if (oracle->parsed()) return run_decide(a, true);
    if (trace->parsed()) return run_trace(a);
    if (eq3->parsed()) return run_eq3(a);
    if (frob->parsed()) return run_frobenius(a);
    if (suite->parsed()) return run_suite(a);
  } catch (const fae::ParseError& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
  } catch (const fae::DimensionMismatch& e) {
    std::cerr << "error: dimension mismatch: " << e.what() << "\n";
  } catch (const fae::UnboundedBody& e) {
    std::cerr << "error: unbounded Q: " << e.what() << "\n";
  } catch (const fae::BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << "\n";
  } catch (const fae::NotPointed& e) {
    std::cerr << "error: cone not pointed: " << e.what() << "\n";
  } catch (const fae::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kError;
}
