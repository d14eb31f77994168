#include "combcert/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace combcert::rpt {

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    case Status::info: return "info";
  }
  return "unknown";
}

long long Report::count(Status s) const {
  long long n = 0;
  for (const auto& item : items)
    if (item.status == s) ++n;
  return n;
}

int Report::exit_code() const {
  return (count(Status::fail) == 0 && count(Status::inconclusive) == 0) ? 0 : 1;
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  for (const auto& [key, value] : report.params)
    out << "param: " << key << " = " << value << "\n";
  for (const auto& item : report.items) {
    out << "[" << status_name(item.status) << "] " << item.item;
    if (!item.input.empty()) out << " " << item.input;
    if (!item.check.empty()) out << " | " << item.check;
    if (!item.value.empty()) out << " | " << item.value;
    if (!item.expected.empty()) out << " | expected " << item.expected;
    if (!item.note.empty()) out << " | " << item.note;
    out << "\n";
  }
  out << "summary: pass=" << report.count(Status::pass)
      << " fail=" << report.count(Status::fail)
      << " inconclusive=" << report.count(Status::inconclusive)
      << " info=" << report.count(Status::info) << "\n";
  for (const auto& note : report.notes) out << "note: " << note << "\n";
  return out.str();
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["command"] = report.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.params) params[key] = value;
  j["params"] = params;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& item : report.items) {
    nlohmann::ordered_json row;
    row["item"] = item.item;
    row["input"] = item.input;
    row["check"] = item.check;
    row["value"] = item.value;
    row["expected"] = item.expected;
    row["status"] = status_name(item.status);
    row["note"] = item.note;
    results.push_back(std::move(row));
  }
  j["results"] = std::move(results);
  nlohmann::ordered_json summary;
  summary["pass"] = report.count(Status::pass);
  summary["fail"] = report.count(Status::fail);
  summary["inconclusive"] = report.count(Status::inconclusive);
  summary["info"] = report.count(Status::info);
  summary["notes"] = report.notes;
  j["summary"] = std::move(summary);
  return j.dump(2) + "\n";
}

namespace {
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}
}  // namespace

std::string to_csv(const Report& report) {
  std::ostringstream out;
  out << "item,input,check,value,expected,status,note\n";
  for (const auto& item : report.items) {
    out << csv_field(item.item) << "," << csv_field(item.input) << ","
        << csv_field(item.check) << "," << csv_field(item.value) << ","
        << csv_field(item.expected) << "," << status_name(item.status) << ","
        << csv_field(item.note) << "\n";
  }
  return out.str();
}

std::string emit_bfile(const std::string& name, const std::vector<BigInt>& values,
                       int start_index) {
  if (name.empty()) throw std::invalid_argument("emit_bfile: empty sequence name");
  if (values.empty()) throw std::invalid_argument("emit_bfile: no values");
  std::ostringstream out;
  int index = start_index;
  for (const auto& v : values) out << index++ << " " << v.str() << "\n";
  return out.str();
}

}  // namespace combcert::rpt
