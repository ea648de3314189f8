#include "mdt/testkit/report.hpp"

#include <exception>
#include <sstream>

namespace mdt::testkit {

void Check::expect(bool holds, const std::function<std::string()>& witness) {
  ++checked;
  if (holds) return;
  ++failed;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(witness());
}

void Check::fail(std::string witness) {
  ++checked;
  ++failed;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

std::size_t Report::checked() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.checked;
  return n;
}

std::size_t Report::failed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.failed;
  return n;
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Check timed_check(std::string name, const std::function<void(Check&)>& body) {
  Check c;
  c.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  c.elapsed = std::chrono::steady_clock::now() - start;
  return c;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.ok() ? "PASS " : "FAIL ") << r.suite << '/' << c.name << " checked=" << c.checked;
    if (!c.ok()) out << " failed=" << c.failed;
    out << '\n';
    for (const auto& w : c.witnesses) out << "  witness: " << w << '\n';
  }
  out << (r.ok() ? "OK " : "FAILED ") << r.suite << " checked=" << r.checked() << " failed=" << r.failed() << '\n';
  return out.str();
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"checked", c.checked}, {"failed", c.failed}, {"witnesses", c.witnesses}});
    for (const auto& w : c.witnesses) witnesses.push_back(c.name + ": " + w);
  }
  return {{"suite", r.suite}, {"checked", r.checked()}, {"failed", r.failed()}, {"witnesses", witnesses}, {"checks", checks}};
}

}  // namespace mdt::testkit
