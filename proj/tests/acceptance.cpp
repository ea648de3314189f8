// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mdt/cli/run.hpp"
#include "mdt/lang/print.hpp"
#include "mdt/testkit/fuzz.hpp"
#include "mdt/testkit/generate.hpp"
#include "mdt/testkit/laws.hpp"

namespace {

using namespace mdt;
using namespace mdt::testkit;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  double seconds = 0;
  std::string detail;
};

int failures = 0;

void line(int n, const std::string& title, const Outcome& o, double limit) {
  const bool in_time = limit <= 0 || o.seconds < limit;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s %2d %s (%.2fs", pass ? "PASS" : "FAIL", n, title.c_str(), o.seconds);
  if (limit > 0) std::printf(" / limit %.0fs", limit);
  std::printf(")");
  if (!in_time) std::printf(" over time limit");
  if (!o.detail.empty()) std::printf(" %s", o.detail.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Reports for every suite at default options, keyed by check name.
std::map<std::string, Check> checks;

void run_suites() {
  for (auto s : {Suite::Kernel, Suite::Indexed, Suite::Mutual, Suite::Arith, Suite::Lang})
    for (auto& c : law_suite(s).checks) checks[std::string(suite_name(s)) + ": " + c.name] = c;
}

Outcome from_checks(const std::vector<std::string>& names) {
  Outcome o;
  std::size_t total = 0;
  for (const auto& n : names) {
    auto it = checks.find(n);
    if (it == checks.end()) {
      o.ok = false;
      o.detail += "[missing " + n + "] ";
      continue;
    }
    const auto& c = it->second;
    o.seconds += c.elapsed.count();
    total += c.checked;
    if (!c.ok() || c.checked == 0) {
      o.ok = false;
      o.detail += "[" + n + ": " + std::to_string(c.failed) + " failed";
      if (!c.witnesses.empty()) o.detail += ", e.g. " + c.witnesses.front();
      o.detail += "] ";
    }
  }
  if (o.ok) o.detail = "checked=" + std::to_string(total);
  return o;
}

Outcome fuzz_criterion() {
  auto t0 = Clock::now();
  FuzzOptions f;
  f.seed = 42;
  f.count = 1000;
  f.fuel = 50;
  auto r = fuzz_preservation(f);
  Outcome o;
  o.seconds = since(t0);
  o.ok = r.ok() && r.configs == 1000;
  o.detail = "configs=" + std::to_string(r.configs) + " steps=" + std::to_string(r.steps) +
             " counterexamples=" + std::to_string(r.counterexamples.size());
  return o;
}

Outcome mutation_criterion() {
  auto t0 = Clock::now();
  Outcome o;
  std::vector<std::string> caught;

  LawOptions swap;
  swap.swap_fmap_slots = true;
  const bool swap_caught = !law_suite(Suite::Kernel, swap).ok();
  caught.push_back(std::string("swapped-slots=") + (swap_caught ? "caught" : "missed"));

  FuzzOptions left;
  left.seed = 42;
  left.count = 1000;
  left.bias = lang::Bias::Left;
  const auto lr = fuzz_preservation(left);
  const bool left_caught = !lr.counterexamples.empty();
  caught.push_back(std::string("left-bias=") + (left_caught ? "caught" : "missed"));

  LawOptions sum;
  sum.eval_sig = without_side_conditions(arith::eval_sig(), "ev2");
  const bool sum_caught = !law_suite(Suite::Arith, sum).ok();
  caught.push_back(std::string("dropped-sum=") + (sum_caught ? "caught" : "missed"));

  o.ok = swap_caught && left_caught && sum_caught;
  o.seconds = since(t0);
  for (const auto& s : caught) o.detail += (o.detail.empty() ? "" : " ") + s;
  return o;
}

std::string capture(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return std::to_string(code) + "\n" + out.str() + "\x1f" + err.str();
}

Outcome cli_criterion() {
  auto t0 = Clock::now();
  Outcome o;
  GenConfig g;
  g.seed = 42;
  g.count = 1000;
  const auto corpus = gen_corpus(g);
  std::size_t trips = 0, bad = 0;
  std::string first_bad;
  for (const auto& cfg : corpus) {
    const auto t = lang::to_sexpr(cfg.term);
    const auto r = lang::to_sexpr(cfg.rho);
    const auto y = lang::to_sexpr(cfg.gamma);
    const bool same = lang::parse_term(t) == cfg.term && lang::to_sexpr(lang::parse_term(t)) == t &&
                      lang::parse_env_e(r) == cfg.rho && lang::parse_env_t(y) == cfg.gamma;
    ++trips;
    if (!same && bad++ == 0) first_bad = t;
  }

  // Through the command line: parse to JSON, print back, and rerun each command.
  std::size_t runs = 0, diverged = 0;
  for (std::size_t i = 0; i < corpus.size(); i += 10) {
    const auto t = lang::to_sexpr(corpus[i].term);
    const auto r = lang::to_sexpr(corpus[i].rho);
    std::ostringstream json, err;
    if (cli::run({"lang", "parse", t}, json, err) != cli::Ok) {
      if (bad++ == 0) first_bad = t;
      continue;
    }
    std::ostringstream printed;
    cli::run({"lang", "print", json.str()}, printed, err);
    if (printed.str() != t + "\n" && bad++ == 0) first_bad = t;
    for (const auto& argv : std::vector<std::vector<std::string>>{
             {"lang", "parse", t},
             {"lang", "typecheck", "--env", lang::to_sexpr(corpus[i].gamma), "--derivation", t},
             {"lang", "trace", "--env", r, "--emit-derivations", t}}) {
      int c1 = 0, c2 = 0;
      ++runs;
      if (capture(argv, c1) != capture(argv, c2)) ++diverged;
    }
  }
  for (const auto& argv : std::vector<std::vector<std::string>>{{"fuzz", "--seed", "42", "--count", "100"},
                                                                {"fuzz", "--seed", "42", "--count", "100", "--bias", "left"},
                                                                {"laws", "--suite", "mutual"},
                                                                {"arith", "derive", "(add (lit 2) (add (lit -1) (lit 1)))"}}) {
    int c1 = 0, c2 = 0;
    ++runs;
    if (capture(argv, c1) != capture(argv, c2)) ++diverged;
  }

  o.seconds = since(t0);
  o.ok = bad == 0 && diverged == 0;
  o.detail = "round-trips=" + std::to_string(trips) + " mismatches=" + std::to_string(bad) +
             " reruns=" + std::to_string(runs) + " diverged=" + std::to_string(diverged);
  if (!first_bad.empty()) o.detail += " first=" + first_bad;
  return o;
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  run_suites();

  line(1, "functor laws",
       from_checks({"kernel: fmap identity", "kernel: fmap composition", "indexed: ifmap identity",
                    "indexed: ifmap composition", "mutual: bifmap identity", "mutual: bifmap composition"}),
       5);
  line(2, "isomorphism laws",
       from_checks({"kernel: in/out isomorphism", "indexed: din/dout isomorphism", "mutual: bin/bout isomorphism",
                    "mutual: hin/hout isomorphism"}),
       30);
  line(3, "computation rules",
       from_checks({"kernel: fold_c computation rule", "kernel: mfold computation rule", "indexed: ifold computation rule",
                    "mutual: bifold computation rules", "mutual: hfold computation rules"}),
       30);
  line(4, "representation isomorphism", from_checks({"kernel: representation isomorphism"}), 10);
  line(5, "oracle equivalence", from_checks({"arith: oracle equivalence"}), 10);
  line(6, "agreement",
       from_checks({"arith: agreement (built derivations)", "arith: agreement (validating derivations)",
                    "arith: eval_of_derivation"}),
       10);
  line(7, "arith preservation", from_checks({"arith: preservation"}), 10);
  line(8, "uniqueness sampling", from_checks({"kernel: uniqueness sampling", "kernel: broken hypothesis flagged"}), 5);
  line(9, "subject reduction fuzz", fuzz_criterion(), 60);
  line(10, "mutation sensitivity", mutation_criterion(), 0);
  line(11, "cli round trip and determinism", cli_criterion(), 10);

  std::printf("%d of 11 criteria failed (%.1fs total)\n", failures, since(t0));
  return failures == 0 ? 0 : 1;
}
