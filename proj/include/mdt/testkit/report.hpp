#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace mdt::testkit {

/// One named property with its tally. Only the first few witnesses are kept.
struct Check {
  static constexpr std::size_t kMaxWitnesses = 5;

  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> witnesses;
  /// Wall time; never rendered, so reports stay byte-identical across runs.
  std::chrono::duration<double> elapsed{0};

  bool ok() const { return failed == 0; }

  /// Counts one instance; `witness` is only evaluated on failure.
  void expect(bool holds, const std::function<std::string()>& witness);
  void fail(std::string witness);
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  std::size_t checked() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
  const Check* find(const std::string& name) const;
};

/// Runs `body` on a fresh check and records its wall time. An escaping
/// exception counts as one failure with the message as witness.
Check timed_check(std::string name, const std::function<void(Check&)>& body);

/// One "PASS name checked=N" or "FAIL name checked=N failed=M" line per
/// check, witnesses indented below, then a summary line.
std::string to_text(const Report& r);
/// {suite, checked, failed, witnesses[], checks[{name, checked, failed, witnesses[]}]}
nlohmann::json to_json(const Report& r);

}  // namespace mdt::testkit
