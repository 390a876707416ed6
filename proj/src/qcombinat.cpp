#include "qseries/qcombinat.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qseries {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw UsageError("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw UsageError("Partition: parts must be weakly decreasing");
    }
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

GordonCondition::GordonCondition(int l, int t) : l_(l), t_(t) {
  if (l < 2) throw UsageError("GordonCondition: l must be >= 2, got " + std::to_string(l));
  if (t < 1 || t > l) {
    throw UsageError("GordonCondition: t must satisfy 1 <= t <= l, got " + std::to_string(t));
  }
}

bool GordonCondition::allows_part(int part) const {
  const int r = part % modulus();
  return r != 0 && r != t_ && r != modulus() - t_;
}

bool GordonCondition::admits(const Partition& p) const {
  const auto& b = p.parts();
  const auto ones = std::count(b.begin(), b.end(), 1);
  if (ones > t_ - 1) return false;
  const std::size_t span = static_cast<std::size_t>(l_ - 1);
  for (std::size_t j = 0; j + span < b.size(); ++j) {
    if (b[j] - b[j + span] < 2) return false;
  }
  return true;
}

BiSeries pochhammer(int n, int q_order) {
  if (n < 0) throw UsageError("pochhammer: n must be >= 0");
  BiSeries s = BiSeries::one(0, q_order);
  for (int j = 1; j <= std::min(n, q_order); ++j) s -= mul_monomial(s, 0, j);
  return s;
}

BiSeries inverse_pochhammer(int n, int q_order) {
  if (n < 0) throw UsageError("inverse_pochhammer: n must be >= 0");
  BiSeries s = BiSeries::one(0, q_order);
  for (int j = 1; j <= std::min(n, q_order); ++j) s = divide_one_minus_q_power(s, j);
  return s;
}

BiSeries gordon_product(const GordonCondition& cond, int q_order) {
  BiSeries s = BiSeries::one(0, q_order);
  for (int i = 1; i <= q_order; ++i) {
    if (cond.allows_part(i)) s = divide_one_minus_q_power(s, i);
  }
  return s;
}

namespace {

struct MultisumWalker {
  int k;
  int i;
  int R;
  int N;
  std::vector<BiSeries> inverse_poch;  // 1/(q)_d for d = 0..N
  std::vector<int> diffs;              // d_j = N_j - N_{j+1}, index j-1
  BiSeries result;

  MultisumWalker(int k_, int i_, int R_, int N_)
      : k(k_), i(i_), R(R_), N(N_), diffs(static_cast<std::size_t>(k_), 0), result(R_, N_) {
    inverse_poch.reserve(static_cast<std::size_t>(N + 1));
    inverse_poch.push_back(BiSeries::one(0, N));
    for (int d = 1; d <= N; ++d) {
      inverse_poch.push_back(divide_one_minus_q_power(inverse_poch.back(), d));
    }
  }

  // Chooses N_j given N_{j+1} = next, for j = k, k-1, ..., 1.
  void walk(int j, int next, long long exponent, long long charge) {
    if (j == 0) {
      emit(static_cast<int>(exponent), static_cast<int>(charge));
      return;
    }
    for (long long nj = next;; ++nj) {
      const long long e = exponent + nj * nj + (j >= i + 1 ? nj : 0);
      const long long c = charge + nj;
      // N_1..N_{j-1} are each at least nj.
      if (e + (j - 1) * nj * nj > N || c + (j - 1) * nj > R) break;
      diffs[static_cast<std::size_t>(j - 1)] = static_cast<int>(nj - next);
      walk(j - 1, static_cast<int>(nj), e, c);
    }
  }

  void emit(int exponent, int charge) {
    BiSeries row = BiSeries::one(0, N);
    for (int d : diffs) {
      if (d > 0) row = row * inverse_poch[static_cast<std::size_t>(d)];
    }
    row = mul_monomial(row, 0, exponent);
    BiSeries acc = result.x_coefficient(charge);
    acc += row;
    result.set_x_coefficient(charge, acc);
  }
};

}  // namespace

BiSeries andrews_gordon_multisum(int k, int i, int x_order, int q_order) {
  if (k < 1) throw UsageError("andrews_gordon_multisum: k must be >= 1");
  if (i < 0 || i > k) throw UsageError("andrews_gordon_multisum: i must satisfy 0 <= i <= k");
  MultisumWalker walker(k, i, x_order, q_order);
  walker.walk(k, 0, 0, 0);
  return walker.result;
}

std::int64_t min_quadratic_degree(int k, int m) {
  if (k < 1 || m < 0) throw UsageError("min_quadratic_degree: need k >= 1, m >= 0");
  const std::int64_t quot = m / k;
  const std::int64_t rem = m % k;
  return rem * (quot + 1) * (quot + 1) + (k - rem) * quot * quot;
}

int lossless_q_order(int k, int x_order, int q_order, XSpecialization mode) {
  const std::int64_t first_missing = min_quadratic_degree(k, x_order + 1);
  const std::int64_t bound = mode == XSpecialization::One ? first_missing - 1
                                                          : first_missing + x_order;
  return static_cast<int>(std::min<std::int64_t>(q_order, bound));
}

namespace {

class GordonEnumerator {
 public:
  GordonEnumerator(const GordonCondition& cond, int n)
      : span_(static_cast<std::size_t>(cond.l() - 1)),
        max_ones_(cond.t() - 1),
        counts_(static_cast<std::size_t>(n + 1), 0) {
    parts_.reserve(static_cast<std::size_t>(n));
    descend(n, n, 0);
  }

  std::vector<std::uint64_t> take() { return std::move(counts_); }

 private:
  void descend(int remaining, int max_part, int ones) {
    if (remaining == 0) {
      ++counts_[parts_.size()];
      return;
    }
    int bound = std::min(remaining, max_part);
    // The new part sits l-1 positions after parts_[size - (l-1)].
    if (parts_.size() >= span_) bound = std::min(bound, parts_[parts_.size() - span_] - 2);
    for (int p = bound; p >= 1; --p) {
      if (p == 1 && ones >= max_ones_) break;
      parts_.push_back(p);
      descend(remaining - p, p, ones + (p == 1 ? 1 : 0));
      parts_.pop_back();
    }
  }

  std::size_t span_;
  int max_ones_;
  std::vector<int> parts_;
  std::vector<std::uint64_t> counts_;
};

std::uint64_t count_with_parts(std::span<const int> allowed, std::size_t top, int remaining) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  // allowed is ascending; parts are chosen in decreasing order.
  for (std::size_t idx = top; idx-- > 0;) {
    const int p = allowed[idx];
    if (p > remaining) continue;
    total += count_with_parts(allowed, idx + 1, remaining - p);
  }
  return total;
}

std::uint64_t congruence_count(const GordonCondition& cond, int n) {
  std::vector<int> allowed;
  for (int p = 1; p <= n; ++p) {
    if (cond.allows_part(p)) allowed.push_back(p);
  }
  return count_with_parts(allowed, allowed.size(), n);
}

Coefficient to_coefficient(std::uint64_t v) { return Coefficient(static_cast<unsigned long>(v)); }

}  // namespace

std::vector<std::uint64_t> gordon_counts_by_charge(const GordonCondition& cond, int n) {
  if (n < 0) throw UsageError("gordon_counts_by_charge: n must be >= 0");
  return GordonEnumerator(cond, n).take();
}

Coefficient count_gordon_partitions(const GordonCondition& cond, int n) {
  const auto counts = gordon_counts_by_charge(cond, n);
  return to_coefficient(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
}

Coefficient count_gordon_partitions_refined(const GordonCondition& cond, int n, int m) {
  if (m < 0) throw UsageError("count_gordon_partitions_refined: m must be >= 0");
  if (m > n) return 0;
  return to_coefficient(gordon_counts_by_charge(cond, n)[static_cast<std::size_t>(m)]);
}

Coefficient count_congruence_partitions(const GordonCondition& cond, int n) {
  if (n < 0) throw UsageError("count_congruence_partitions: n must be >= 0");
  return to_coefficient(congruence_count(cond, n));
}

std::vector<std::vector<std::uint64_t>> gordon_count_table(const GordonCondition& cond,
                                                           int n_max) {
  std::vector<std::vector<std::uint64_t>> table(static_cast<std::size_t>(n_max + 1));
#pragma omp parallel for schedule(dynamic)
  for (int n = n_max; n >= 0; --n) {
    table[static_cast<std::size_t>(n)] = gordon_counts_by_charge(cond, n);
  }
  return table;
}

std::vector<std::vector<std::uint64_t>> gordon_count_table_serial(const GordonCondition& cond,
                                                                  int n_max) {
  std::vector<std::vector<std::uint64_t>> table;
  for (int n = 0; n <= n_max; ++n) table.push_back(gordon_counts_by_charge(cond, n));
  return table;
}

std::vector<std::uint64_t> congruence_count_table(const GordonCondition& cond, int n_max) {
  std::vector<std::uint64_t> table(static_cast<std::size_t>(n_max + 1));
#pragma omp parallel for schedule(dynamic)
  for (int n = n_max; n >= 0; --n) {
    table[static_cast<std::size_t>(n)] = congruence_count(cond, n);
  }
  return table;
}

std::vector<std::uint64_t> congruence_count_table_serial(const GordonCondition& cond,
                                                         int n_max) {
  std::vector<std::uint64_t> table;
  for (int n = 0; n <= n_max; ++n) table.push_back(congruence_count(cond, n));
  return table;
}

}  // namespace qseries
