#include "qseries/verify.hpp"

#include <algorithm>
#include <ostream>

#include "qseries/oracle.hpp"
#include "qseries/selberg.hpp"

namespace qseries {

VerificationReport compare_series(std::string route_a, const BiSeries& a, std::string route_b,
                                  const BiSeries& b, int x_window, int q_window) {
  if (x_window > a.x_order() || x_window > b.x_order() || q_window > a.q_order() ||
      q_window > b.q_order()) {
    throw UsageError("compare_series: window exceeds a compared series");
  }
  VerificationReport report{std::move(route_a), std::move(route_b), x_window, q_window, {}};
  for (int m = 0; m <= x_window; ++m) {
    for (int w = 0; w <= q_window; ++w) {
      if (a.at(m, w) != b.at(m, w)) {
        report.first_discrepancy = Discrepancy{m, w, a.at(m, w), b.at(m, w)};
        return report;
      }
    }
  }
  return report;
}

void write_report_header(std::ostream& out) {
  out << "route_a\troute_b\tx_window\tq_window\tstatus\tm\tw\tvalue_a\tvalue_b\n";
}

void write_report(std::ostream& out, const VerificationReport& report) {
  out << report.route_a << '\t' << report.route_b << '\t' << report.x_window << '\t'
      << report.q_window << '\t' << (report.matched() ? "match" : "mismatch");
  if (const auto& d = report.first_discrepancy) {
    out << '\t' << d->m << '\t' << d->w << '\t' << d->value_a << '\t' << d->value_b << '\n';
  } else {
    out << "\t-\t-\t-\t-\n";
  }
}

bool all_matched(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.matched(); });
}

namespace {

BiSeries counts_as_series(const std::vector<std::uint64_t>& counts) {
  BiSeries s(0, static_cast<int>(counts.size()) - 1);
  for (std::size_t n = 0; n < counts.size(); ++n) {
    s.at(0, static_cast<int>(n)) = Coefficient(static_cast<unsigned long>(counts[n]));
  }
  return s;
}

}  // namespace

std::vector<VerificationReport> verify_gordon(const GordonCondition& cond, int q_max) {
  if (q_max < 0) throw UsageError("verify_gordon: q_max must be >= 0");
  const int k = cond.level();
  const int i = cond.t() - 1;

  std::vector<std::uint64_t> gordon;
  for (const auto& by_charge : gordon_count_table(cond, q_max)) {
    std::uint64_t total = 0;
    for (auto c : by_charge) total += c;
    gordon.push_back(total);
  }
  const BiSeries gordon_counts = counts_as_series(gordon);
  const BiSeries congruence_counts = counts_as_series(congruence_count_table(cond, q_max));
  const BiSeries product = gordon_product(cond, q_max);

  int x_order = 0;
  while (lossless_q_order(k, x_order, q_max, XSpecialization::One) < q_max) ++x_order;
  const BiSeries multisum = andrews_gordon_multisum(k, i, x_order, q_max);
  const BiSeries sum_side = specialize_x(multisum, XSpecialization::One).series;

  return {
      compare_series("gordon-count", gordon_counts, "congruence-count", congruence_counts, 0,
                     q_max),
      compare_series("congruence-count", congruence_counts, "gordon-product", product, 0, q_max),
      compare_series("gordon-product", product, "multisum(x=1)", sum_side, 0,
                     lossless_q_order(k, x_order, q_max, XSpecialization::One)),
  };
}

std::vector<VerificationReport> crosscheck(int k, int max_charge, int max_weight) {
  if (k < 1) throw UsageError("crosscheck: k must be >= 1");
  const RecursionFamily fam = solve(k, max_charge, max_weight);
  std::vector<VerificationReport> reports;
  for (int e = 1; e <= k + 1; ++e) {
    const std::string tag = "[e=" + std::to_string(e) + "]";
    const BiSeries& solver = fam[e - 1];
    const BiSeries multisum = andrews_gordon_multisum(k, e - 1, max_charge, max_weight);
    const BiSeries oracle = hilbert_table(k, e, max_charge, max_weight).to_series();
    reports.push_back(compare_series("solver" + tag, solver, "multisum" + tag, multisum,
                                     max_charge, max_weight));
    reports.push_back(compare_series("solver" + tag, solver, "oracle" + tag, oracle, max_charge,
                                     max_weight));
    reports.push_back(compare_series("multisum" + tag, multisum, "oracle" + tag, oracle,
                                     max_charge, max_weight));
  }
  return reports;
}

}  // namespace qseries
