#pragma once

#include <string>
#include <utility>
#include <vector>

namespace packcert::shell {

enum class Outcome { Pass, Fail, Inconclusive, Info };
const char* to_string(Outcome o);

struct ReportEntry {
  std::string check;
  Outcome outcome = Outcome::Info;
  std::vector<std::pair<std::string, std::string>> fields;
};

enum class Format { Text, JsonLines };

/// Ordered list of check results. Info entries never affect the exit code.
class Report {
 public:
  ReportEntry& add(std::string check, Outcome outcome);
  const std::vector<ReportEntry>& entries() const { return entries_; }

  /// 1 if anything failed, else 2 if anything is inconclusive, else 0.
  int exit_code() const;
  std::string render(Format format) const;

 private:
  std::vector<ReportEntry> entries_;
};

}  // namespace packcert::shell
