#ifndef COMBCERT_REPORT_HPP
#define COMBCERT_REPORT_HPP

#include "combcert/bigint.hpp"

#include <string>
#include <utility>
#include <vector>

namespace combcert::rpt {

enum class Status { pass, fail, inconclusive, info };

std::string status_name(Status s);

/// One verified (or reported) fact. All values are exact strings; no
/// floating-point numeral ever reaches a report surface.
struct ResultItem {
  std::string item;      // e.g. "certify"
  std::string input;     // e.g. "n=17"
  std::string check;     // what was compared
  std::string value;     // computed outcome, exact
  std::string expected;  // expected value when there is one
  Status status = Status::info;
  std::string note;
};

/// Deterministic report: identical inputs produce byte-identical renderings
/// in every format. Items keep insertion order; `info` rows do not gate the
/// exit code, inconclusive rows do.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<ResultItem> items;
  std::vector<std::string> notes;

  long long count(Status s) const;
  /// 0 = every check passed; 1 = at least one failure or inconclusive.
  int exit_code() const;
};

std::string to_text(const Report& report);
std::string to_json(const Report& report);
std::string to_csv(const Report& report);

/// b-file exchange format: one "index value" pair per line, no header,
/// newline-terminated. The name is only validated (nonempty).
std::string emit_bfile(const std::string& name, const std::vector<BigInt>& values,
                       int start_index = 0);

}  // namespace combcert::rpt

#endif  // COMBCERT_REPORT_HPP
