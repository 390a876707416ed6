#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

// A weakly decreasing list of positive parts. Charge is the number of
// parts, weight their sum.
class Partition {
 public:
  Partition() = default;
  // Throws UsageError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int charge() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Modulus parameter l >= 2 (level k = l - 1) and 1 <= t <= l.
class GordonCondition {
 public:
  // Throws UsageError outside the valid range.
  GordonCondition(int l, int t);

  int l() const { return l_; }
  int t() const { return t_; }
  int level() const { return l_ - 1; }
  int modulus() const { return 2 * l_ + 1; }

  // Part size allowed on the product side: i mod (2l+1) not in {0, t, -t}.
  bool allows_part(int part) const;
  // Difference two at distance l-1, and at most t-1 parts equal to 1.
  bool admits(const Partition& p) const;

 private:
  int l_;
  int t_;
};

// (q)_n = (1-q)(1-q^2)...(1-q^n), truncated at q-order N.
BiSeries pochhammer(int n, int q_order);

// 1/(q)_n: partitions into parts of size at most n.
BiSeries inverse_pochhammer(int n, int q_order);

// Product over admissible i of 1/(1-q^i), truncated at q-order N.
BiSeries gordon_product(const GordonCondition& cond, int q_order);

// Sum over N_1 >= ... >= N_k >= 0 of
//   x^{N_1+...+N_k} q^{N_1^2+...+N_k^2 + N_{i+1}+...+N_k}
//   / ((q)_{N_1-N_2} ... (q)_{N_{k-1}-N_k} (q)_{N_k}),
// truncated at (x_order, q_order). Requires k >= 1 and 0 <= i <= k.
BiSeries andrews_gordon_multisum(int k, int i, int x_order, int q_order);

// Smallest N_1^2+...+N_k^2 over tuples with N_1+...+N_k = m. Every
// x^m term of the multisum has q-degree at least this.
std::int64_t min_quadratic_degree(int k, int m);

// Largest n such that the coefficients of q^0..q^n in the specialization
// of a multisum window (x_order, q_order) are unaffected by the terms of
// x-degree above x_order.
int lossless_q_order(int k, int x_order, int q_order, XSpecialization mode);

// Gordon-condition partitions of n, counted by exhaustive descent.
Coefficient count_gordon_partitions(const GordonCondition& cond, int n);
// Same, restricted to exactly m parts.
Coefficient count_gordon_partitions_refined(const GordonCondition& cond, int n, int m);
// Partitions of n into parts allowed by cond.allows_part.
Coefficient count_congruence_partitions(const GordonCondition& cond, int n);

// Gordon counts by charge: entry m is the number of admissible
// partitions of n with exactly m parts, for m = 0..n.
std::vector<std::uint64_t> gordon_counts_by_charge(const GordonCondition& cond, int n);

// Tables over n = 0..n_max. The parallel kernels distribute weights over
// OpenMP threads; the serial versions are the reference.
std::vector<std::vector<std::uint64_t>> gordon_count_table(const GordonCondition& cond, int n_max);
std::vector<std::vector<std::uint64_t>> gordon_count_table_serial(const GordonCondition& cond,
                                                                  int n_max);
std::vector<std::uint64_t> congruence_count_table(const GordonCondition& cond, int n_max);
std::vector<std::uint64_t> congruence_count_table_serial(const GordonCondition& cond, int n_max);

}  // namespace qseries
