#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "bolalg/error.hpp"
#include "bolalg_cli/cli.hpp"

namespace bolalg::cli {

using nlohmann::json;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "error";
}

int exit_code(Status s) {
  switch (s) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    case Status::error: return 2;
  }
  return 2;
}

void CommandReport::add(const Report& report, const std::string& prefix) {
  for (Check c : report.checks()) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
}

void CommandReport::settle() {
  if (status == Status::error) return;
  status = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; })
               ? Status::pass
               : Status::fail;
}

namespace {

bool same_witness(const std::optional<Witness>& a, const std::optional<Witness>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  return a->indices == b->indices && a->residual == b->residual && a->detail == b->detail;
}

json witness_json(const Witness& w) {
  json res = json::array();
  for (const auto& q : w.residual) res.push_back(bolalg::to_string(q));
  return json{{"indices", w.indices}, {"residual", res}, {"detail", w.detail}};
}

Status status_from(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "error") return Status::error;
  throw ParseError("report: unknown status '" + s + "'", 0, 0);
}

std::string witness_text(const Witness& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.indices.size(); ++i) os << (i ? "," : "") << w.indices[i];
  os << ")";
  if (w.residual.size()) os << " residual " << bolalg::to_string(w.residual);
  if (!w.detail.empty()) os << "  " << w.detail;
  return os.str();
}

}  // namespace

bool operator==(const CommandReport& a, const CommandReport& b) {
  if (a.command != b.command || a.status != b.status || a.facts != b.facts ||
      a.timing_us != b.timing_us || a.message != b.message || a.checks.size() != b.checks.size())
    return false;
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    const Check& x = a.checks[i];
    const Check& y = b.checks[i];
    if (x.name != y.name || x.passed != y.passed || x.note != y.note ||
        !same_witness(x.witness, y.witness))
      return false;
  }
  return true;
}

std::string emit_report(const CommandReport& r, Format format) {
  if (format == Format::machine) {
    json checks = json::array();
    for (const auto& c : r.checks) {
      json entry{{"name", c.name}, {"verdict", c.passed ? "pass" : "fail"}, {"note", c.note}};
      entry["witness"] = c.witness ? witness_json(*c.witness) : json(nullptr);
      checks.push_back(std::move(entry));
    }
    json facts = json::array();
    for (const auto& [k, v] : r.facts) facts.push_back(json{{"key", k}, {"value", v}});
    json doc{{"schema", report_schema},  {"command", r.command},
             {"status", to_string(r.status)}, {"checks", checks},
             {"facts", facts},               {"timing_us", r.timing_us},
             {"message", r.message}};
    return doc.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "command: " << r.command << '\n';
  if (!r.checks.empty()) {
    std::size_t width = 5;
    for (const auto& c : r.checks) width = std::max(width, c.name.size());
    os << std::left << std::setw(static_cast<int>(width)) << "check" << "  verdict  witness\n";
    for (const auto& c : r.checks) {
      os << std::left << std::setw(static_cast<int>(width)) << c.name << "  "
         << std::setw(7) << (c.passed ? "pass" : "FAIL") << "  ";
      if (c.witness) os << witness_text(*c.witness);
      if (!c.note.empty()) os << (c.witness ? "  " : "") << "[" << c.note << "]";
      os << '\n';
    }
  }
  for (const auto& [k, v] : r.facts) os << k << ": " << v << '\n';
  if (!r.message.empty()) os << "message: " << r.message << '\n';
  os << "status: " << to_string(r.status) << "  (" << r.timing_us << " us)\n";
  return os.str();
}

CommandReport parse_machine_report(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("report: ") + e.what(), 0, 0);
  }
  try {
    if (doc.at("schema").get<std::string>() != report_schema)
      throw ParseError("report: unsupported schema", 0, 0);
    CommandReport r;
    r.command = doc.at("command").get<std::string>();
    r.status = status_from(doc.at("status").get<std::string>());
    r.timing_us = doc.at("timing_us").get<std::int64_t>();
    r.message = doc.at("message").get<std::string>();
    for (const auto& f : doc.at("facts"))
      r.facts.emplace_back(f.at("key").get<std::string>(), f.at("value").get<std::string>());
    for (const auto& c : doc.at("checks")) {
      Check check;
      check.name = c.at("name").get<std::string>();
      check.passed = c.at("verdict").get<std::string>() == "pass";
      check.note = c.at("note").get<std::string>();
      const json& w = c.at("witness");
      if (!w.is_null()) {
        Witness wit;
        wit.indices = w.at("indices").get<std::vector<std::size_t>>();
        std::vector<Scalar> res;
        for (const auto& q : w.at("residual")) res.push_back(parse_rational(q.get<std::string>()));
        wit.residual = Vector(std::move(res));
        wit.detail = w.at("detail").get<std::string>();
        check.witness = std::move(wit);
      }
      r.checks.push_back(std::move(check));
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report: ") + e.what(), 0, 0);
  }
}

}  // namespace bolalg::cli
