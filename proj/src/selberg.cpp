#include "qseries/selberg.hpp"

#include <algorithm>

namespace qseries {

RecursionFamily solve(int k, int x_order, int q_order) {
  if (k < 1) throw UsageError("solve: k must be >= 1");
  RecursionFamily fam{k, x_order, q_order, {}};
  fam.members.assign(static_cast<std::size_t>(k + 1), BiSeries(x_order, q_order));
  for (auto& f : fam.members) f.at(0, 0) = 1;

  // row(i, m) is a_{i,m}(q); negative m is zero.
  auto row = [&](int i, int m) {
    return m < 0 ? BiSeries(0, q_order) : fam[i].x_coefficient(m);
  };

  for (int m = 1; m <= x_order; ++m) {
    BiSeries lower(0, q_order);
    for (int j = 1; j <= std::min(k, m); ++j) lower += row(k - j, m - j);
    const BiSeries top =
        mul_monomial(lower, 0, m) * invert_one_minus_q_power(m, 0, q_order);
    fam[k].set_x_coefficient(m, top);

    BiSeries current = mul_monomial(top, 0, m);
    fam[0].set_x_coefficient(m, current);
    for (int i = 1; i < k; ++i) {
      current += mul_monomial(row(k - i, m - i), 0, m);
      fam[i].set_x_coefficient(m, current);
    }
  }
  return fam;
}

bool ResidualReport::all_zero() const {
  return std::all_of(residuals.begin(), residuals.end(),
                     [](const BiSeries& r) { return r.is_zero(); });
}

ResidualReport check_recursions(const RecursionFamily& fam) {
  const int k = fam.k;
  if (k < 1 || fam.members.size() != static_cast<std::size_t>(k + 1)) {
    throw UsageError("check_recursions: family must have k >= 1 and k+1 members");
  }
  ResidualReport report;
  for (int i = 1; i <= k; ++i) {
    report.labels.push_back("F" + std::to_string(i) + " - (xq)^" + std::to_string(i) + " F" +
                            std::to_string(k - i) + "(xq) - F" + std::to_string(i - 1));
    report.residuals.push_back(fam[i] - mul_monomial(qshift(fam[k - i], 1), i, i) - fam[i - 1]);
  }
  report.labels.push_back("F0 - F" + std::to_string(k) + "(xq)");
  report.residuals.push_back(fam[0] - qshift(fam[k], 1));
  return report;
}

BiSeries check_rr_recursion(const BiSeries& f) {
  return f - qshift(f, 1) - mul_monomial(qshift(f, 2), 1, 1);
}

ResidualReport check_k2_example(const RecursionFamily& fam) {
  if (fam.k != 2 || fam.members.size() != 3) {
    throw UsageError("check_k2_example: requires a level-2 family");
  }
  const BiSeries& two_l1 = fam[0];
  const BiSeries& l0_plus_l1 = fam[1];
  const BiSeries& two_l0 = fam[2];
  ResidualReport report;
  report.labels = {"chi'(L0+L1) - xq chi'(L0+L1)(xq) - chi'(2L1)",
                   "chi'(2L0) - (xq)^2 chi'(2L1)(xq) - chi'(L0+L1)",
                   "chi'(2L0)(xq) - chi'(2L1)"};
  report.residuals.push_back(l0_plus_l1 - mul_monomial(qshift(l0_plus_l1, 1), 1, 1) - two_l1);
  report.residuals.push_back(two_l0 - mul_monomial(qshift(two_l1, 1), 2, 2) - l0_plus_l1);
  report.residuals.push_back(qshift(two_l0, 1) - two_l1);
  return report;
}

bool in_one_plus_xq_ideal(const BiSeries& s) {
  if (s.at(0, 0) != 1) return false;
  for (int b = 1; b <= s.q_order(); ++b) {
    if (s.at(0, b) != 0) return false;
  }
  for (int a = 1; a <= s.x_order(); ++a) {
    if (s.at(a, 0) != 0) return false;
  }
  return true;
}

std::vector<std::string> family_violations(const RecursionFamily& fam) {
  std::vector<std::string> out;
  for (int i = 0; i <= fam.k; ++i) {
    const BiSeries& f = fam[i];
    const std::string name = "F" + std::to_string(i);
    if (!in_one_plus_xq_ideal(f)) out.push_back(name + " not in 1 + xq[[x,q]]");
    for (int a = 0; a <= f.x_order(); ++a) {
      for (int b = 0; b <= f.q_order(); ++b) {
        if (f.at(a, b) < 0) {
          out.push_back(name + " negative at (" + std::to_string(a) + "," + std::to_string(b) +
                        ")");
        }
        if (i > 0 && fam[i - 1].at(a, b) > f.at(a, b)) {
          out.push_back("F" + std::to_string(i - 1) + " > " + name + " at (" +
                        std::to_string(a) + "," + std::to_string(b) + ")");
        }
      }
    }
  }
  return out;
}

WeightData weight_data(int k0, int k1) {
  if (k0 < 0 || k1 < 0 || k0 + k1 < 1) {
    throw UsageError("weight_data: need k0, k1 >= 0 and k0 + k1 >= 1");
  }
  const int k = k0 + k1;
  WeightData w{k0, k1, mpq_class(k1 * (k1 + 2), 4 * (k + 2)), mpq_class(k1, 2)};
  w.conformal_weight.canonicalize();
  w.charge_offset.canonicalize();
  return w;
}

Character unnormalize(const BiSeries& normalized, const WeightData& weights) {
  return Character{weights.charge_offset, weights.conformal_weight, normalized};
}

Character unnormalize(const RecursionFamily& fam, int i) {
  if (i < 0 || i > fam.k) throw UsageError("unnormalize: member index out of range");
  return unnormalize(fam[i], weight_data(i, fam.k - i));
}

}  // namespace qseries
