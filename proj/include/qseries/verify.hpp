#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qseries/qcombinat.hpp"
#include "qseries/series.hpp"

namespace qseries {

struct Discrepancy {
  int m = 0;
  int w = 0;
  Coefficient value_a;
  Coefficient value_b;
};

// Outcome of comparing two routes to the same series on a window.
// The status is "match" exactly when there is no discrepancy.
struct VerificationReport {
  std::string route_a;
  std::string route_b;
  int x_window = 0;
  int q_window = 0;
  std::optional<Discrepancy> first_discrepancy;

  bool matched() const { return !first_discrepancy.has_value(); }
};

// Compares a and b cell by cell on 0..x_window by 0..q_window, in
// lexicographic (m, w) order, recording the first mismatch. Both series
// must cover the window.
VerificationReport compare_series(std::string route_a, const BiSeries& a, std::string route_b,
                                  const BiSeries& b, int x_window, int q_window);

// Header row for write_report.
void write_report_header(std::ostream& out);
// One TSV line: route_a, route_b, windows, status, then m, w, value_a,
// value_b of the first discrepancy or "-" when absent.
void write_report(std::ostream& out, const VerificationReport& report);

bool all_matched(const std::vector<VerificationReport>& reports);

// Three comparisons on q^0..q^q_max: Gordon counts vs congruence counts,
// congruence counts vs the product side, and the product side vs the
// x = 1 specialization of the multisum. The multisum x-order is the
// smallest one whose x = 1 image is exact up to q_max.
std::vector<VerificationReport> verify_gordon(const GordonCondition& cond, int q_max);

// For each e = 1..k+1: solver member F_{e-1}, multisum (k, e-1) and the
// ideal-quotient oracle, compared pairwise on the (max_charge, max_weight)
// window.
std::vector<VerificationReport> crosscheck(int k, int max_charge, int max_weight);

}  // namespace qseries
