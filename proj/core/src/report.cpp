#include "bolalg/report.hpp"

#include <algorithm>
#include <sstream>

namespace bolalg {

void Report::add_pass(std::string name, std::string note) {
  checks_.push_back(Check{std::move(name), true, std::nullopt, std::move(note)});
}

void Report::add_fail(std::string name, Witness witness, std::string note) {
  checks_.push_back(Check{std::move(name), false, std::move(witness), std::move(note)});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (Check c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

const Check* Report::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const Check& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

bool Report::passed(const std::string& name) const {
  const Check* c = find(name);
  return c != nullptr && c->passed;
}

std::string to_string(const Report& report) {
  std::ostringstream os;
  for (const auto& c : report.checks()) {
    os << (c.passed ? "pass " : "FAIL ") << c.name;
    if (c.witness) {
      os << " at (";
      for (std::size_t i = 0; i < c.witness->indices.size(); ++i)
        os << (i ? "," : "") << c.witness->indices[i];
      os << ")";
      if (c.witness->residual.size()) os << " residual " << to_string(c.witness->residual);
      if (!c.witness->detail.empty()) os << " : " << c.witness->detail;
    }
    if (!c.note.empty()) os << " [" << c.note << "]";
    os << '\n';
  }
  return os.str();
}

}  // namespace bolalg
