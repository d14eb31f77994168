#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "combcert/report.hpp"
#include "combcert/suites.hpp"

#include <cctype>

using namespace combcert;
using namespace combcert::rpt;

TEST_CASE("b-file format examples") {
  CHECK(emit_bfile("B", suites::sequence_values("B", 3)) == "0 1\n1 1\n2 2\n3 4\n");
  CHECK(emit_bfile("p", suites::sequence_values("p", 4)) ==
        "0 1\n1 1\n2 2\n3 3\n4 5\n");
  CHECK_THROWS_AS(emit_bfile("", {BigInt(1)}), std::invalid_argument);
  CHECK_THROWS_AS(suites::sequence_values("nope", 3), std::invalid_argument);
}

TEST_CASE("exit code mapping") {
  Report r;
  r.command = "demo";
  CHECK(r.exit_code() == 0);
  r.items.push_back({"a", "", "", "", "", Status::pass, ""});
  r.items.push_back({"b", "", "", "", "", Status::info, ""});
  CHECK(r.exit_code() == 0);
  r.items.push_back({"c", "", "", "", "", Status::inconclusive, ""});
  CHECK(r.exit_code() == 1);
  r.items.pop_back();
  r.items.push_back({"d", "", "", "", "", Status::fail, ""});
  CHECK(r.exit_code() == 1);
}

TEST_CASE("renderings are deterministic and carry the summary") {
  suites::SuiteOptions opt;
  opt.n_max = 8;
  Report a = suites::circles_suite(opt);
  Report b = suites::circles_suite(opt);
  CHECK(to_text(a) == to_text(b));
  CHECK(to_json(a) == to_json(b));
  CHECK(to_csv(a) == to_csv(b));

  std::string text = to_text(a);
  CHECK(text.find("summary: pass=") != std::string::npos);
  CHECK(text.find("command: circles") != std::string::npos);

  std::string json = to_json(a);
  CHECK(json.find("\"command\": \"circles\"") != std::string::npos);
  CHECK(json.find("\"results\"") != std::string::npos);
  CHECK(json.find("\"summary\"") != std::string::npos);
  CHECK(json.find("\"params\"") != std::string::npos);

  std::string csv = to_csv(a);
  CHECK(csv.rfind("item,input,check,value,expected,status,note\n", 0) == 0);
}

namespace {
// A floating-point numeral needs a '.' or a digit-e-digit exponent; exact
// "p/q" surfaces have neither.
bool has_float_numeral(const std::string& s) {
  if (s.find('.') != std::string::npos) return true;
  for (size_t i = 1; i + 1 < s.size(); ++i)
    if ((s[i] == 'e' || s[i] == 'E') && std::isdigit(s[i - 1]) &&
        (std::isdigit(s[i + 1]) || s[i + 1] == '+' || s[i + 1] == '-'))
      return true;
  return false;
}
}  // namespace

TEST_CASE("no floating-point numerals on the report surface") {
  suites::SuiteOptions opt;
  opt.n_max = 6;
  for (const Report& r : {suites::bounds_suite(opt), suites::circles_suite(opt)}) {
    for (const auto& item : r.items) {
      CHECK_FALSE(has_float_numeral(item.value));
      CHECK_FALSE(has_float_numeral(item.expected));
    }
    for (const auto& note : r.notes) CHECK_FALSE(has_float_numeral(note));
  }
}

TEST_CASE("circles report flags the n=6 divergence row") {
  suites::SuiteOptions opt;
  opt.n_max = 8;
  Report r = suites::circles_suite(opt);
  bool found = false;
  for (const auto& item : r.items)
    if (item.item == "forest-oracle" && item.input == "n=6") {
      CHECK(item.note == "paper=49 oracle=48");
      CHECK(item.value == "paper=49 oracle=48");
      found = true;
    }
  CHECK(found);
  std::string csv = to_csv(r);
  CHECK(csv.find("paper=49 oracle=48") != std::string::npos);
}

TEST_CASE("suite reports pass at small scales") {
  suites::SuiteOptions opt;
  opt.n_max = 8;
  CHECK(suites::bounds_suite(opt).exit_code() == 0);
  CHECK(suites::circles_suite(opt).exit_code() == 0);
  CHECK(suites::series_suite(opt).exit_code() == 0);
  CHECK(suites::diff_suite(opt).exit_code() == 0);
}

TEST_CASE("csv quoting") {
  Report r;
  r.command = "demo";
  r.items.push_back({"x", "", "a,b", "say \"hi\"", "", Status::info, "line"});
  std::string csv = to_csv(r);
  CHECK(csv.find("\"a,b\"") != std::string::npos);
  CHECK(csv.find("\"say \"\"hi\"\"\"") != std::string::npos);
}
