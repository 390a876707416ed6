#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "qseries/exact_rank.hpp"
#include "qseries/series.hpp"

namespace qseries {

// y_{-j_1} ... y_{-j_m} in A = C[y_{-1}, y_{-2}, ...], stored as the
// weakly decreasing list of indices. Charge m, weight j_1 + ... + j_m.
class YMonomial {
 public:
  YMonomial() = default;
  // Sorts the indices; throws UsageError on an index < 1.
  explicit YMonomial(std::vector<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  int charge() const { return static_cast<int>(indices_.size()); }
  int weight() const { return weight_; }

  YMonomial operator*(const YMonomial& other) const;

  friend bool operator==(const YMonomial&, const YMonomial&) = default;
  friend auto operator<=>(const YMonomial&, const YMonomial&) = default;

 private:
  std::vector<int> indices_;  // weakly decreasing
  int weight_ = 0;
};

struct Term {
  YMonomial monomial;
  Coefficient multiplicity;
};

// Partitions of `weight` into exactly `parts` parts, lexicographically
// decreasing. This is also the monomial basis of bidegree (parts, weight).
std::vector<std::vector<int>> partitions_with_parts(int weight, int parts);

// Number of partitions of `weight` into exactly `parts` parts.
Coefficient partition_count(int weight, int parts);

// r^{(k)}_{-w}: the sum of y_{-i_1}...y_{-i_{k+1}} over ordered positive
// tuples with i_1 + ... + i_{k+1} = w. One term per partition of w into
// k+1 parts, with multiplicity (k+1)! / prod(mult_j!). Requires w >= k+1.
std::vector<Term> r_polynomial(int k, int w);

// Generators of the ideal A_Lambda for Lambda = (k+1-e) Lambda_0 + (e-1) Lambda_1:
// every r^{(k)}_{-w} with k+1 <= w <= max_weight, and y_{-1}^e.
struct GeneratorSet {
  int k = 0;
  int e = 0;
  int max_weight = 0;
  bool with_y_power = true;            // false drops y_{-1}^e from the set
  std::vector<std::vector<Term>> r_polys;  // r_polys[j] is r^{(k)}_{-(k+1+j)}
};

// Requires k >= 1 and 1 <= e <= k+1.
GeneratorSet make_generators(int k, int e, int max_weight, bool with_y_power = true);

// The spanning set {mu * g} of the bidegree-(charge, weight) piece of the
// ideal, as integer rows over the monomial basis.
IntMatrix ideal_spanning_matrix(const GeneratorSet& gens, int charge, int weight);

std::size_t ideal_span_dimension(const GeneratorSet& gens, int charge, int weight);

// p(weight, charge) - ideal_span_dimension(...).
Coefficient quotient_dimension(const GeneratorSet& gens, int charge, int weight);

class DimensionTable {
 public:
  DimensionTable(int k, int e, int max_charge, int max_weight);

  int k() const { return k_; }
  int e() const { return e_; }
  int max_charge() const { return max_charge_; }
  int max_weight() const { return max_weight_; }

  const Coefficient& at(int charge, int weight) const;
  Coefficient& at(int charge, int weight);

  // dim(m, w) placed at x^m q^w.
  BiSeries to_series() const;

  friend bool operator==(const DimensionTable&, const DimensionTable&) = default;

 private:
  int k_;
  int e_;
  int max_charge_;
  int max_weight_;
  std::vector<Coefficient> dims_;
};

// Fills every (m, w) cell with quotient_dimension. Cells are independent
// and are distributed over OpenMP threads.
DimensionTable hilbert_table(int k, int e, int max_charge, int max_weight,
                             bool with_y_power = true);
// Reference implementation, one cell at a time.
DimensionTable hilbert_table_serial(int k, int e, int max_charge, int max_weight,
                                    bool with_y_power = true);

}  // namespace qseries
