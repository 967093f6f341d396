#include "packcert/shell/report.hpp"

#include <sstream>

#include "json.hpp"

namespace packcert::shell {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Inconclusive: return "inconclusive";
    case Outcome::Info: return "info";
  }
  return "?";
}

ReportEntry& Report::add(std::string check, Outcome outcome) {
  entries_.push_back({std::move(check), outcome, {}});
  return entries_.back();
}

int Report::exit_code() const {
  bool inconclusive = false;
  for (const auto& e : entries_) {
    if (e.outcome == Outcome::Fail) return 1;
    inconclusive = inconclusive || e.outcome == Outcome::Inconclusive;
  }
  return inconclusive ? 2 : 0;
}

std::string Report::render(Format format) const {
  std::ostringstream out;
  for (const auto& e : entries_) {
    if (format == Format::JsonLines) {
      nlohmann::ordered_json j;
      j["check"] = e.check;
      j["outcome"] = to_string(e.outcome);
      for (const auto& [k, v] : e.fields) j[k] = v;
      out << j.dump() << "\n";
    } else {
      out << e.check << ": " << to_string(e.outcome) << "\n";
      for (const auto& [k, v] : e.fields) out << "  " << k << ": " << v << "\n";
    }
  }
  return out.str();
}

}  // namespace packcert::shell
