#include "qseries/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

namespace qseries {

YMonomial::YMonomial(std::vector<int> indices) : indices_(std::move(indices)) {
  for (int j : indices_) {
    if (j < 1) throw UsageError("YMonomial: variable index must be >= 1");
  }
  std::sort(indices_.begin(), indices_.end(), std::greater<>());
  weight_ = std::accumulate(indices_.begin(), indices_.end(), 0);
}

YMonomial YMonomial::operator*(const YMonomial& other) const {
  std::vector<int> merged;
  merged.reserve(indices_.size() + other.indices_.size());
  std::merge(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
             std::back_inserter(merged), std::greater<>());
  YMonomial out;
  out.indices_ = std::move(merged);
  out.weight_ = weight_ + other.weight_;
  return out;
}

namespace {

void fill_partitions(int weight, int parts, int max_part, std::vector<int>& prefix,
                     std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (weight == 0) out.push_back(prefix);
    return;
  }
  // The largest part is at least ceil(weight / parts); the rest need one each.
  const int hi = std::min(max_part, weight - (parts - 1));
  const int lo = std::max(1, (weight + parts - 1) / parts);
  for (int p = hi; p >= lo; --p) {
    prefix.push_back(p);
    fill_partitions(weight - p, parts - 1, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> partitions_with_parts(int weight, int parts) {
  std::vector<std::vector<int>> out;
  if (weight < 0 || parts < 0) return out;
  std::vector<int> prefix;
  fill_partitions(weight, parts, weight, prefix, out);
  return out;
}

Coefficient partition_count(int weight, int parts) {
  if (weight < 0 || parts < 0) return 0;
  // table[m][w]: partitions of w into exactly m parts.
  std::vector<std::vector<Coefficient>> table(
      static_cast<std::size_t>(parts + 1),
      std::vector<Coefficient>(static_cast<std::size_t>(weight + 1), 0));
  table[0][0] = 1;
  for (int m = 1; m <= parts; ++m) {
    for (int w = m; w <= weight; ++w) {
      auto& cell = table[static_cast<std::size_t>(m)][static_cast<std::size_t>(w)];
      cell = table[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(w - 1)] +
             table[static_cast<std::size_t>(m)][static_cast<std::size_t>(w - m)];
    }
  }
  return table[static_cast<std::size_t>(parts)][static_cast<std::size_t>(weight)];
}

std::vector<Term> r_polynomial(int k, int w) {
  if (k < 1) throw UsageError("r_polynomial: k must be >= 1");
  if (w < k + 1) {
    throw UsageError("r_polynomial: weight " + std::to_string(w) + " below k+1 = " +
                     std::to_string(k + 1));
  }
  Coefficient orderings;
  mpz_fac_ui(orderings.get_mpz_t(), static_cast<unsigned long>(k + 1));

  std::vector<Term> terms;
  for (auto& parts : partitions_with_parts(w, k + 1)) {
    Coefficient mult = orderings;
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      Coefficient fact;
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(j - i));
      mpz_divexact(mult.get_mpz_t(), mult.get_mpz_t(), fact.get_mpz_t());
      i = j;
    }
    terms.push_back(Term{YMonomial(std::move(parts)), std::move(mult)});
  }
  return terms;
}

GeneratorSet make_generators(int k, int e, int max_weight, bool with_y_power) {
  if (k < 1) throw UsageError("make_generators: k must be >= 1");
  if (e < 1 || e > k + 1) throw UsageError("make_generators: e must satisfy 1 <= e <= k+1");
  GeneratorSet gens{k, e, max_weight, with_y_power, {}};
  for (int w = k + 1; w <= max_weight; ++w) gens.r_polys.push_back(r_polynomial(k, w));
  return gens;
}

IntMatrix ideal_spanning_matrix(const GeneratorSet& gens, int charge, int weight) {
  if (weight > gens.max_weight && weight >= gens.k + 1) {
    throw UsageError("ideal_spanning_matrix: weight exceeds generator bound");
  }
  const auto basis = partitions_with_parts(weight, charge);
  std::map<std::vector<int>, std::size_t> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);

  std::vector<std::vector<Coefficient>> rows;
  auto new_row = [&]() -> std::vector<Coefficient>& {
    return rows.emplace_back(basis.size(), Coefficient(0));
  };

  const int r_charge = gens.k + 1;
  if (charge >= r_charge) {
    for (int w = r_charge; w <= weight; ++w) {
      const auto& r = gens.r_polys[static_cast<std::size_t>(w - r_charge)];
      for (auto& mu : partitions_with_parts(weight - w, charge - r_charge)) {
        const YMonomial cofactor(std::move(mu));
        auto& row = new_row();
        for (const Term& term : r) {
          row[column.at((cofactor * term.monomial).indices())] += term.multiplicity;
        }
      }
    }
  }
  if (gens.with_y_power && charge >= gens.e && weight >= gens.e) {
    const YMonomial y_power(std::vector<int>(static_cast<std::size_t>(gens.e), 1));
    for (auto& mu : partitions_with_parts(weight - gens.e, charge - gens.e)) {
      new_row()[column.at((YMonomial(std::move(mu)) * y_power).indices())] = 1;
    }
  }

  IntMatrix m(rows.size(), basis.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) m(r, c) = std::move(rows[r][c]);
  }
  return m;
}

std::size_t ideal_span_dimension(const GeneratorSet& gens, int charge, int weight) {
  if (charge < 0 || weight < 0) throw UsageError("ideal_span_dimension: negative degree");
  return exact_rank(ideal_spanning_matrix(gens, charge, weight));
}

Coefficient quotient_dimension(const GeneratorSet& gens, int charge, int weight) {
  return partition_count(weight, charge) -
         Coefficient(static_cast<unsigned long>(ideal_span_dimension(gens, charge, weight)));
}

DimensionTable::DimensionTable(int k, int e, int max_charge, int max_weight)
    : k_(k), e_(e), max_charge_(max_charge), max_weight_(max_weight) {
  if (max_charge < 0 || max_weight < 0) throw UsageError("DimensionTable: negative window");
  dims_.resize(static_cast<std::size_t>(max_charge + 1) * static_cast<std::size_t>(max_weight + 1));
}

const Coefficient& DimensionTable::at(int charge, int weight) const {
  if (charge < 0 || weight < 0 || charge > max_charge_ || weight > max_weight_) {
    throw UsageError("DimensionTable::at: cell outside window");
  }
  return dims_[static_cast<std::size_t>(charge) * static_cast<std::size_t>(max_weight_ + 1) +
               static_cast<std::size_t>(weight)];
}

Coefficient& DimensionTable::at(int charge, int weight) {
  return const_cast<Coefficient&>(static_cast<const DimensionTable&>(*this).at(charge, weight));
}

BiSeries DimensionTable::to_series() const {
  BiSeries s(max_charge_, max_weight_);
  for (int m = 0; m <= max_charge_; ++m) {
    for (int w = 0; w <= max_weight_; ++w) s.at(m, w) = at(m, w);
  }
  return s;
}

DimensionTable hilbert_table(int k, int e, int max_charge, int max_weight, bool with_y_power) {
  const GeneratorSet gens = make_generators(k, e, max_weight, with_y_power);
  DimensionTable table(k, e, max_charge, max_weight);
  const int cells = (max_charge + 1) * (max_weight + 1);
#pragma omp parallel for schedule(dynamic)
  for (int cell = cells - 1; cell >= 0; --cell) {
    const int m = cell / (max_weight + 1);
    const int w = cell % (max_weight + 1);
    table.at(m, w) = quotient_dimension(gens, m, w);
  }
  return table;
}

DimensionTable hilbert_table_serial(int k, int e, int max_charge, int max_weight,
                                    bool with_y_power) {
  const GeneratorSet gens = make_generators(k, e, max_weight, with_y_power);
  DimensionTable table(k, e, max_charge, max_weight);
  for (int m = 0; m <= max_charge; ++m) {
    for (int w = 0; w <= max_weight; ++w) table.at(m, w) = quotient_dimension(gens, m, w);
  }
  return table;
}

}  // namespace qseries
