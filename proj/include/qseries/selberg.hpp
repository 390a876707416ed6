#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

// F_0, ..., F_k at level k, where F_i is the normalized character of the
// principal subspace of weight i*Lambda_0 + (k-i)*Lambda_1. F_k is the
// vacuum member; F_0 = F_k(xq, q).
struct RecursionFamily {
  int k = 0;
  int x_order = 0;
  int q_order = 0;
  std::vector<BiSeries> members;

  const BiSeries& operator[](int i) const { return members.at(static_cast<std::size_t>(i)); }
  BiSeries& operator[](int i) { return members.at(static_cast<std::size_t>(i)); }

  friend bool operator==(const RecursionFamily&, const RecursionFamily&) = default;
};

// Unique family in 1 + xq[[x,q]] satisfying
//   F_i - (xq)^i F_{k-i}(xq, q) = F_{i-1},   i = 1..k,
//   F_0(x, q) = F_k(xq, q).
// Solved by induction on x-degree m: the telescoped system gives
//   a_{k,m} = q^m / (1 - q^m) * sum_{j=1}^{min(k,m)} a_{k-j, m-j},
// then a_{0,m} = q^m a_{k,m} and a_{i,m} = a_{i-1,m} + q^m a_{k-i,m-i}.
RecursionFamily solve(int k, int x_order, int q_order);

struct ResidualReport {
  std::vector<std::string> labels;
  std::vector<BiSeries> residuals;

  bool all_zero() const;
};

// Residuals F_i - (xq)^i F_{k-i}(xq,q) - F_{i-1} for i = 1..k, followed by
// F_0 - F_k(xq,q). All are zero iff the family solves the system.
ResidualReport check_recursions(const RecursionFamily& fam);

// F(x,q) - F(xq,q) - xq F(xq^2,q).
BiSeries check_rr_recursion(const BiSeries& f);

// The three level-2 equations written with weights spelled out:
//   chi'(L0+L1)(x) - xq chi'(L0+L1)(xq) = chi'(2L1)(x)
//   chi'(2L0)(x) - (xq)^2 chi'(2L1)(xq) = chi'(L0+L1)(x)
//   chi'(2L0)(xq) = chi'(2L1)(x)
// Throws UsageError unless fam.k == 2.
ResidualReport check_k2_example(const RecursionFamily& fam);

// Violations of the family invariants: initial condition, nonnegativity,
// and F_0 <= F_1 <= ... <= F_k coefficientwise. Empty when well formed.
std::vector<std::string> family_violations(const RecursionFamily& fam);

// True iff s has constant term 1 and no other term with a = 0 or b = 0.
bool in_one_plus_xq_ideal(const BiSeries& s);

// Lambda = k0*Lambda_0 + k1*Lambda_1.
struct WeightData {
  int k0 = 0;
  int k1 = 0;
  mpq_class conformal_weight;  // k1(k1+2) / (4(k+2))
  mpq_class charge_offset;     // k1/2
};

WeightData weight_data(int k0, int k1);

// chi = x^{x_exponent} q^{q_exponent} * series.
struct Character {
  mpq_class x_exponent;
  mpq_class q_exponent;
  BiSeries series;
};

Character unnormalize(const BiSeries& normalized, const WeightData& weights);
// Uses the weights of member i: k0 = i, k1 = k - i.
Character unnormalize(const RecursionFamily& fam, int i);

}  // namespace qseries
