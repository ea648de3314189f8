#include "mdt/cli/run.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "mdt/arith/preservation.hpp"
#include "mdt/indexed/json.hpp"
#include "mdt/kernel/json.hpp"
#include "mdt/lang/json.hpp"
#include "mdt/lang/print.hpp"
#include "mdt/lang/step.hpp"
#include "mdt/lang/typing.hpp"
#include "mdt/lang/values.hpp"
#include "mdt/mutual/json.hpp"
#include "mdt/sexpr.hpp"
#include "mdt/testkit/fuzz.hpp"
#include "mdt/testkit/laws.hpp"

namespace mdt::cli {

namespace {

using mutual::Component;

/// Input that could not be read or parsed; reported with exit code 2.
struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Domain failure; reported with exit code 1.
struct Failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto parsing(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const sexpr::ParseError& e) {
    throw BadInput(what + ": " + e.what());
  } catch (const kernel::MalformedNode& e) {
    throw BadInput(what + ": " + e.what());
  } catch (const lang::DuplicateBinding& e) {
    throw BadInput(what + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw BadInput(what + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadInput("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t default_fuel() {
  if (const char* v = std::getenv("MDT_FUEL")) {
    try {
      std::size_t used = 0;
      const auto n = std::stoull(v, &used);
      if (used == std::string(v).size()) return n;
    } catch (const std::exception&) {
    }
    throw BadInput(std::string("MDT_FUEL is not a number: ") + v);
  }
  return 50;
}

lang::Bias parse_bias(const std::string& s) {
  if (s == "right") return lang::Bias::Right;
  if (s == "left") return lang::Bias::Left;
  throw BadInput("bias must be right or left");
}

// ---------------------------------------------------------------- stuck states

std::string stuck_exp(const lang::EnvE& rho, const lang::Exp& e);

std::string stuck_dec(const lang::EnvE& rho, const lang::Dec& d) {
  auto v = lang::view_dec(d);
  if (const auto* m = std::get_if<lang::view::Match>(&v)) {
    if (!lang::is_value(m->e)) return stuck_exp(rho, m->e);
    return "pattern matching failure";
  }
  if (const auto* j = std::get_if<lang::view::Join>(&v)) {
    auto lv = lang::view_dec(j->d1);
    const auto* left = std::get_if<lang::view::EnvD>(&lv);
    if (!left) return stuck_dec(rho, j->d1);
    return stuck_dec(lang::merge(rho, left->rho), j->d2);
  }
  return "no rule applies";
}

std::string stuck_exp(const lang::EnvE& rho, const lang::Exp& e) {
  auto v = lang::view_exp(e);
  if (const auto* x = std::get_if<lang::view::Var>(&v)) return "unbound variable " + x->x.name;
  if (const auto* a = std::get_if<lang::view::App>(&v)) {
    if (!lang::is_value(a->fn)) return stuck_exp(rho, a->fn);
    if (!lang::is_value(a->arg)) return stuck_exp(rho, a->arg);
    auto fv = lang::view_exp(a->fn);
    if (!std::holds_alternative<lang::view::Clos>(fv)) return "application of a non-function";
    return "pattern matching failure";
  }
  if (const auto* s = std::get_if<lang::view::Scope>(&v)) {
    auto dv = lang::view_dec(s->d);
    const auto* en = std::get_if<lang::view::EnvD>(&dv);
    if (!en) return stuck_dec(rho, s->d);
    return stuck_exp(lang::merge(rho, en->rho), s->body);
  }
  return "no rule applies";
}

bool is_final(const mutual::BiTerm& t) {
  if (t.which() == Component::Second) return lang::is_value(t);
  return std::holds_alternative<lang::view::EnvD>(lang::view_dec(t));
}

struct Stepped {
  mutual::BiTerm next;
  std::string rule;
  nlohmann::json derivation;
};

std::optional<Stepped> step_once(const lang::EnvE& rho, const mutual::BiTerm& t) {
  if (t.which() == Component::Second) {
    if (auto s = lang::step_exp(rho, t)) return Stepped{s->first, s->second.rule_name(), mutual::to_json(s->second)};
  } else if (auto s = lang::step_dec(rho, t)) {
    return Stepped{s->first, s->second.rule_name(), mutual::to_json(s->second)};
  }
  return std::nullopt;
}

std::string final_label(const lang::EnvE& rho, const mutual::BiTerm& t) {
  if (is_final(t)) return "value";
  return "stuck: " + (t.which() == Component::Second ? stuck_exp(rho, t) : stuck_dec(rho, t));
}

// ---------------------------------------------------------------- commands

void dump_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

void add_arith(CLI::App& app, std::ostream& out, std::function<void()>& action) {
  auto* arith = app.add_subcommand("arith", "Arithmetic expressions");
  arith->require_subcommand(1);
  auto term = std::make_shared<std::string>();

  auto* eval = arith->add_subcommand("eval", "Evaluate a term");
  eval->add_option("term", *term, "Term, e.g. (add (lit 2) (lit 3))")->required();
  eval->callback([&, term] {
    action = [&, term] {
      auto t = parsing("term", [&] { return arith::parse_trm(*term); });
      out << arith::to_sexpr(arith::eval(t)) << "\n";
    };
  });

  auto* derive = arith->add_subcommand("derive", "Print the evaluation derivation of a term as JSON");
  derive->add_option("term", *term, "Term")->required();
  derive->callback([&, term] {
    action = [&, term] {
      auto t = parsing("term", [&] { return arith::parse_trm(*term); });
      dump_json(out, indexed::to_json(arith::build_eval_derivation(t)));
    };
  });

  auto* preserve = arith->add_subcommand("preserve", "Transform the typing of a term into the typing of its value");
  auto via = std::make_shared<bool>(false);
  preserve->add_option("term", *term, "Term")->required();
  preserve->add_flag("--via-istrm", *via, "Fold over the IsTrm witness instead of the Eval derivation");
  preserve->callback([&, term, via] {
    action = [&, term, via] {
      auto t = parsing("term", [&] { return arith::parse_trm(*term); });
      auto td = arith::build_typof_derivation(t);
      auto result = *via ? arith::preservation_via_istrm(arith::build_istrm(t), td)
                         : arith::preservation(arith::build_eval_derivation(t), td);
      dump_json(out, indexed::to_json(result));
    };
  });
}

void add_lang(CLI::App& app, std::ostream& out, std::function<void()>& action) {
  auto* lang_cmd = app.add_subcommand("lang", "The language L");
  lang_cmd->require_subcommand(1);
  auto term = std::make_shared<std::string>();
  auto env = std::make_shared<std::string>("()");
  auto env_file = std::make_shared<std::string>();
  auto with_derivation = std::make_shared<bool>(false);
  auto bias = std::make_shared<std::string>("right");

  auto runtime_env = [env, env_file] {
    const std::string text = env_file->empty() ? *env : read_file(*env_file);
    return parsing("environment", [&] { return lang::parse_env_e(text); });
  };
  auto parse_term = [term] { return parsing("term", [&] { return lang::parse_term(*term); }); };

  auto* parse = lang_cmd->add_subcommand("parse", "Parse an s-expression and print its JSON form");
  parse->add_option("term", *term, "Dec or Exp")->required();
  parse->callback([&, parse_term] { action = [&, parse_term] { dump_json(out, mutual::to_json(parse_term())); }; });

  auto* print = lang_cmd->add_subcommand("print", "Print a JSON term as an s-expression");
  print->add_option("json", *term, "Term in JSON form")->required();
  print->callback([&, term] {
    action = [&, term] {
      auto t = parsing("term", [&] { return mutual::biterm_from_json(lang::syntax_sig(), nlohmann::json::parse(*term)); });
      out << lang::to_sexpr(t) << "\n";
    };
  });

  auto* typecheck = lang_cmd->add_subcommand("typecheck", "Type a term under a typing context");
  typecheck->add_option("term", *term, "Dec or Exp")->required();
  typecheck->add_option("--env", *env, "Typing context, e.g. ((x (ty a)))");
  typecheck->add_flag("--derivation", *with_derivation, "Print the typing derivation as JSON");
  typecheck->add_option("--bias", *bias, "Context extension: right or left");
  typecheck->callback([&, env, parse_term, with_derivation, bias] {
    action = [&, env, parse_term, with_derivation, bias] {
      auto gamma = parsing("context", [&] { return lang::parse_env_t(*env); });
      auto t = parse_term();
      const auto b = parse_bias(*bias);
      auto emit = [&](const auto& checked) {
        if (!checked) throw Failed("untypable: " + checked.error.to_string());
        if (*with_derivation)
          dump_json(out, mutual::to_json(*checked.derivation));
        else
          out << lang::to_sexpr_typ(checked.derivation->conclusion().t) << "\n";
      };
      if (t.which() == Component::Second)
        emit(lang::typecheck_exp(gamma, t, b));
      else
        emit(lang::typecheck_dec(gamma, t, b));
    };
  });

  auto* step = lang_cmd->add_subcommand("step", "Take one step under a runtime environment");
  step->add_option("term", *term, "Dec or Exp")->required();
  step->add_option("--env", *env, "Runtime environment");
  step->add_option("--env-file", *env_file, "File holding the runtime environment");
  step->add_flag("--derivation", *with_derivation, "Print the step derivation as JSON");
  step->callback([&, runtime_env, parse_term, with_derivation] {
    action = [&, runtime_env, parse_term, with_derivation] {
      auto rho = runtime_env();
      auto t = parse_term();
      if (auto s = step_once(rho, t)) {
        out << s->rule << " " << lang::to_sexpr(s->next) << "\n";
        if (*with_derivation) dump_json(out, s->derivation);
      } else {
        out << final_label(rho, t) << "\n";
      }
    };
  });

  auto* trace = lang_cmd->add_subcommand("trace", "Step until a value, a stuck state or the fuel runs out");
  auto fuel = std::make_shared<std::optional<std::size_t>>();
  auto emit = std::make_shared<bool>(false);
  trace->add_option("term", *term, "Dec or Exp")->required();
  trace->add_option("--env", *env, "Runtime environment");
  trace->add_option("--env-file", *env_file, "File holding the runtime environment");
  trace->add_option("--fuel", *fuel, "Maximum number of steps (default: MDT_FUEL or 50)");
  trace->add_flag("--emit-derivations", *emit, "Print each step derivation as one JSON line");
  trace->callback([&, runtime_env, parse_term, fuel, emit] {
    action = [&, runtime_env, parse_term, fuel, emit] {
      auto rho = runtime_env();
      auto t = parse_term();
      const std::size_t limit = fuel->has_value() ? **fuel : default_fuel();
      out << "0 " << lang::to_sexpr(t) << "\n";
      std::size_t n = 0;
      for (; n < limit; ++n) {
        auto s = step_once(rho, t);
        if (!s) break;
        t = s->next;
        out << n + 1 << " " << s->rule << " " << lang::to_sexpr(t) << "\n";
        if (*emit) out << s->derivation.dump() << "\n";
      }
      if (n == limit && !is_final(t) && step_once(rho, t))
        out << "out of fuel after " << n << " steps\n";
      else
        out << final_label(rho, t) << " after " << n << " steps\n";
    };
  });
}

void add_laws(CLI::App& app, std::ostream& out, std::function<void()>& action) {
  auto* laws = app.add_subcommand("laws", "Run a law suite and print its JSON report");
  auto suite = std::make_shared<std::string>();
  auto opts = std::make_shared<testkit::LawOptions>();
  laws->add_option("--suite", *suite, "kernel, indexed, mutual, arith or lang")->required();
  laws->add_option("--seed", opts->seed, "Seed for sampled checks");
  laws->add_option("--samples", opts->samples, "Number of sampled composites");
  laws->callback([&, suite, opts] {
    action = [&, suite, opts] {
      auto s = testkit::parse_suite(*suite);
      if (!s) throw BadInput("unknown suite " + *suite);
      auto report = testkit::law_suite(*s, *opts);
      dump_json(out, testkit::to_json(report));
      if (!report.ok()) throw Failed("law failures in suite " + *suite);
    };
  });
}

void add_fuzz(CLI::App& app, std::ostream& out, std::function<void()>& action) {
  auto* fuzz = app.add_subcommand("fuzz", "Check subject reduction on generated configurations");
  fuzz->alias("fuzz-preservation");
  auto opts = std::make_shared<testkit::FuzzOptions>();
  auto fuel = std::make_shared<std::optional<std::size_t>>();
  auto dump_dir = std::make_shared<std::string>();
  auto replay = std::make_shared<std::string>();
  auto bias = std::make_shared<std::string>("right");
  fuzz->add_option("--seed", opts->seed, "Seed");
  fuzz->add_option("--count", opts->count, "Number of configurations");
  fuzz->add_option("--fuel", *fuel, "Steps per configuration (default: MDT_FUEL or 50)");
  fuzz->add_option("--workers", opts->workers, "Worker threads, 0 for one per hardware thread");
  fuzz->add_option("--bias", *bias, "Context extension of the typing under test");
  fuzz->add_option("--dump-dir", *dump_dir, "Directory for counterexample files");
  auto* rep = fuzz->add_option("--replay", *replay, "Rerun a dumped counterexample");
  for (const char* name : {"--seed", "--count", "--workers", "--dump-dir"}) rep->excludes(name);
  fuzz->callback([&, opts, fuel, dump_dir, replay, bias] {
    action = [&, opts, fuel, dump_dir, replay, bias] {
      if (!replay->empty()) {
        auto c = parsing("counterexample", [&] { return testkit::counterexample_from_json(nlohmann::json::parse(read_file(*replay))); });
        auto again = testkit::replay(c);
        if (again) {
          out << "reproduced: " << *again << "\n";
          throw Failed("counterexample reproduced");
        }
        out << "passes\n";
        return;
      }
      opts->fuel = fuel->has_value() ? **fuel : default_fuel();
      opts->bias = parse_bias(*bias);
      auto result = testkit::fuzz_preservation(*opts);
      if (!dump_dir->empty()) {
        std::filesystem::create_directories(*dump_dir);
        for (const auto& c : result.counterexamples) {
          std::ofstream f(std::filesystem::path(*dump_dir) / ("counterexample-" + std::to_string(c.index) + ".json"));
          f << testkit::to_json(c).dump(2) << "\n";
        }
      }
      dump_json(out, testkit::to_json(result));
      if (!result.ok()) throw Failed(std::to_string(result.counterexamples.size()) + " counterexamples");
    };
  });
}

const kernel::Signature* find_signature(const std::string& name) {
  for (const auto* s : {arith::trm_g1().get(), arith::trm_g2().get(), arith::trm_sig().sum().get(), lang::typ_sig().get(),
                        lang::pat_sig().get(), &lang::syntax_sig()->component(Component::First),
                        &lang::syntax_sig()->component(Component::Second)})
    if (s->name() == name) return s;
  return nullptr;
}

void add_dump(CLI::App& app, std::ostream& out, std::function<void()>& action) {
  auto* dump = app.add_subcommand("dump", "Print a syntax signature as JSON");
  auto name = std::make_shared<std::string>();
  dump->add_option("--signature", *name, "Trm_G1, Trm_G2, Trm_G, Typ, Pat, Dec or Exp")->required();
  dump->callback([&, name] {
    action = [&, name] {
      const auto* sig = find_signature(*name);
      if (!sig) throw BadInput("unknown signature " + *name);
      dump_json(out, kernel::signature_to_json(*sig));
    };
  });
}

// Flat command names, accepted as shorthands for the grouped ones.
std::vector<std::string> expand_shorthand(const std::vector<std::string>& args) {
  static const std::map<std::string, std::vector<std::string>> shorthands{
      {"eval-arith", {"arith", "eval"}}, {"derive", {"arith", "derive"}}, {"parse", {"lang", "parse"}},
      {"print", {"lang", "print"}},      {"typecheck", {"lang", "typecheck"}}, {"step", {"lang", "step"}},
      {"trace", {"lang", "trace"}}};
  if (args.empty()) return args;
  auto it = shorthands.find(args.front());
  if (it == shorthands.end()) return args;
  std::vector<std::string> out = it->second;
  out.insert(out.end(), args.begin() + 1, args.end());
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modular datatypes and derivations", "mdt"};
  app.require_subcommand(1);
  std::function<void()> action;
  add_arith(app, out, action);
  add_lang(app, out, action);
  add_laws(app, out, action);
  add_fuzz(app, out, action);
  add_dump(app, out, action);

  const auto expanded = expand_shorthand(args);
  std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (app.exit(e, out, err) == 0) return Ok;
    return Usage;
  }

  try {
    if (action) action();
    return Ok;
  } catch (const BadInput& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const Failed& e) {
    err << e.what() << "\n";
    return DomainFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return DomainFailure;
  }
}

}  // namespace mdt::cli
