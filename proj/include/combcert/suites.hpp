#ifndef COMBCERT_SUITES_HPP
#define COMBCERT_SUITES_HPP

#include "combcert/report.hpp"

#include <string>
#include <vector>

namespace combcert::suites {

/// Shared knobs of the verification suites. `parallel` selects the OpenMP
/// kernels; results are identical either way.
struct SuiteOptions {
  int n_max = 40;
  int bits = 256;       // pi enclosure starting precision
  int cap_bits = 4096;  // escalation cap
  bool parallel = true;
};

/// Inequality certification rows for n = 1..n_max, plus the envelope values.
rpt::Report bounds_suite(const SuiteOptions& opt);

/// B routes, p1/p2 tables, the exhaustive-forest comparison and the B(n)
/// bounds.
rpt::Report circles_suite(const SuiteOptions& opt);

/// Binomial series closed forms, telescoping product series and the
/// power-sum identity.
rpt::Report series_suite(const SuiteOptions& opt);

/// Finite-difference table checks, surjection counts, difference recursion.
rpt::Report diff_suite(const SuiteOptions& opt);

/// Everything above at desk scale, as summary items, plus the long exact
/// identity sweep (to 50 * n_max).
rpt::Report verify_all_suite(const SuiteOptions& opt);

/// Values for the b-file exporter. Known ids: "B" (circle nestings by the
/// partition-product rule) and "p" (partition counts).
std::vector<BigInt> sequence_values(const std::string& id, int n_max);

}  // namespace combcert::suites

#endif  // COMBCERT_SUITES_HPP
