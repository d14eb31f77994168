#include "combcert/report.hpp"
#include "combcert/suites.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <string>

namespace {

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return 2;
  }
  out << text;
  return 0;
}

std::string render(const combcert::rpt::Report& report, const std::string& format) {
  if (format == "json") return combcert::rpt::to_json(report);
  if (format == "csv") return combcert::rpt::to_csv(report);
  return combcert::rpt::to_text(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combcert: exact-arithmetic verification of combinatorial "
               "identities, counts and certified inequalities"};
  app.require_subcommand(1);

  combcert::suites::SuiteOptions opt;
  bool serial = false;
  std::string format = "text";
  std::string out_path;
  std::string sequence_id;

  auto add_common = [&](CLI::App* cmd, bool with_bits) {
    cmd->add_option("--n-max", opt.n_max, "range limit for the per-n checks")
        ->check(CLI::Range(1, 1000000));
    if (with_bits) {
      cmd->add_option("--bits", opt.bits, "starting pi-enclosure precision")
          ->check(CLI::Range(8, 65536));
      cmd->add_option("--bits-cap", opt.cap_bits, "precision escalation cap")
          ->check(CLI::Range(8, 1 << 20));
    }
    cmd->add_flag("--serial", serial, "use the serial reference kernels");
    cmd->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", out_path, "write the report to a file");
  };

  CLI::App* bounds = app.add_subcommand(
      "bounds", "certify the central-binomial inequality per n");
  add_common(bounds, true);
  CLI::App* circles = app.add_subcommand(
      "circles", "circle-nesting counts: routes, tables, oracle, bounds");
  add_common(circles, true);
  CLI::App* series = app.add_subcommand(
      "series", "binomial series closed forms and the power-sum identity");
  add_common(series, false);
  CLI::App* diff = app.add_subcommand(
      "diff", "finite-difference factorial theorem and surjection counts");
  add_common(diff, false);
  CLI::App* verify_all = app.add_subcommand(
      "verify-all", "run every suite at desk scale");
  add_common(verify_all, true);

  CLI::App* bfile = app.add_subcommand(
      "bfile", "emit a sequence in b-file format (index value per line)");
  int bfile_n_max = 12;
  std::string bfile_format = "bfile";
  bfile->add_option("--sequence", sequence_id, "sequence id: B or p")->required();
  bfile->add_option("--n-max", bfile_n_max, "last index to emit")
      ->check(CLI::Range(0, 100000));
  bfile->add_option("--format", bfile_format, "output format (b-file only)")
      ->check(CLI::IsMember({"bfile"}));
  bfile->add_option("--out", out_path, "write to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  opt.parallel = !serial;
  if (opt.cap_bits < opt.bits) {
    std::cerr << "error: --bits-cap must be >= --bits\n";
    return 2;
  }

  try {
    if (bfile->parsed()) {
      auto values = combcert::suites::sequence_values(sequence_id, bfile_n_max);
      return write_output(combcert::rpt::emit_bfile(sequence_id, values), out_path);
    }
    combcert::rpt::Report report;
    if (bounds->parsed()) report = combcert::suites::bounds_suite(opt);
    else if (circles->parsed()) report = combcert::suites::circles_suite(opt);
    else if (series->parsed()) report = combcert::suites::series_suite(opt);
    else if (diff->parsed()) report = combcert::suites::diff_suite(opt);
    else report = combcert::suites::verify_all_suite(opt);
    int write_rc = write_output(render(report, format), out_path);
    return write_rc != 0 ? write_rc : report.exit_code();
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
