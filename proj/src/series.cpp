#include "qseries/series.hpp"

#include <algorithm>
#include <string>

namespace qseries {

namespace {

void require_same_orders(const BiSeries& s, const BiSeries& t, const char* op) {
  if (!s.same_orders(t)) {
    throw UsageError(std::string(op) + ": order mismatch (" + std::to_string(s.x_order()) + "," +
                     std::to_string(s.q_order()) + ") vs (" + std::to_string(t.x_order()) + "," +
                     std::to_string(t.q_order()) + ")");
  }
}

}  // namespace

BiSeries::BiSeries(int x_order, int q_order) : x_order_(x_order), q_order_(q_order) {
  if (x_order < 0 || q_order < 0) {
    throw UsageError("BiSeries: orders must be nonnegative");
  }
  coeffs_.resize(static_cast<std::size_t>(x_order + 1) * static_cast<std::size_t>(q_order + 1));
}

BiSeries BiSeries::zero(int x_order, int q_order) { return BiSeries(x_order, q_order); }

BiSeries BiSeries::one(int x_order, int q_order) {
  BiSeries s(x_order, q_order);
  s.coeffs_[0] = 1;
  return s;
}

BiSeries BiSeries::monomial(int x_order, int q_order, int a, int b, const Coefficient& c) {
  BiSeries s(x_order, q_order);
  if (a >= 0 && b >= 0 && a <= x_order && b <= q_order) {
    s.coeffs_[s.index(a, b)] = c;
  }
  return s;
}

const Coefficient& BiSeries::at(int a, int b) const {
  if (a < 0 || b < 0 || a > x_order_ || b > q_order_) {
    throw UsageError("BiSeries::at: index (" + std::to_string(a) + "," + std::to_string(b) +
                     ") outside window");
  }
  return coeffs_[index(a, b)];
}

Coefficient& BiSeries::at(int a, int b) {
  return const_cast<Coefficient&>(static_cast<const BiSeries&>(*this).at(a, b));
}

BiSeries BiSeries::x_coefficient(int a) const {
  BiSeries row(0, q_order_);
  for (int b = 0; b <= q_order_; ++b) {
    row.coeffs_[static_cast<std::size_t>(b)] = at(a, b);
  }
  return row;
}

void BiSeries::set_x_coefficient(int a, const BiSeries& row) {
  if (row.x_order_ != 0 || row.q_order_ != q_order_) {
    throw UsageError("BiSeries::set_x_coefficient: row must have x_order 0 and matching q_order");
  }
  for (int b = 0; b <= q_order_; ++b) {
    at(a, b) = row.coeffs_[static_cast<std::size_t>(b)];
  }
}

bool BiSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coefficient& c) { return c == 0; });
}

std::size_t BiSeries::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Coefficient& c) { return c != 0; }));
}

BiSeries& BiSeries::operator+=(const BiSeries& rhs) {
  require_same_orders(*this, rhs, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& rhs) {
  require_same_orders(*this, rhs, "sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

bool operator==(const BiSeries& lhs, const BiSeries& rhs) {
  return lhs.same_orders(rhs) && lhs.coeffs_ == rhs.coeffs_;
}

BiSeries operator+(BiSeries lhs, const BiSeries& rhs) {
  lhs += rhs;
  return lhs;
}

BiSeries operator-(BiSeries lhs, const BiSeries& rhs) {
  lhs -= rhs;
  return lhs;
}

BiSeries operator-(const BiSeries& s) { return scale(s, -1); }

BiSeries operator*(const BiSeries& lhs, const BiSeries& rhs) {
  require_same_orders(lhs, rhs, "mul");
  const int R = lhs.x_order();
  const int N = lhs.q_order();
  BiSeries out(R, N);
  for (int a1 = 0; a1 <= R; ++a1) {
    for (int b1 = 0; b1 <= N; ++b1) {
      const Coefficient& c1 = lhs.at(a1, b1);
      if (c1 == 0) continue;
      for (int a2 = 0; a2 <= R - a1; ++a2) {
        for (int b2 = 0; b2 <= N - b1; ++b2) {
          const Coefficient& c2 = rhs.at(a2, b2);
          if (c2 != 0) out.at(a1 + a2, b1 + b2) += c1 * c2;
        }
      }
    }
  }
  return out;
}

BiSeries scale(const BiSeries& s, const Coefficient& c) {
  BiSeries out(s.x_order(), s.q_order());
  for (int a = 0; a <= s.x_order(); ++a) {
    for (int b = 0; b <= s.q_order(); ++b) out.at(a, b) = s.at(a, b) * c;
  }
  return out;
}

BiSeries qshift(const BiSeries& s, int m) {
  if (m < 0) throw UsageError("qshift: negative shift " + std::to_string(m));
  BiSeries out(s.x_order(), s.q_order());
  for (int a = 0; a <= s.x_order(); ++a) {
    const long long offset = static_cast<long long>(m) * a;
    for (int b = 0; b <= s.q_order(); ++b) {
      if (b + offset > s.q_order()) break;
      out.at(a, b + static_cast<int>(offset)) = s.at(a, b);
    }
  }
  return out;
}

BiSeries mul_monomial(const BiSeries& s, int a0, int b0) {
  if (a0 < 0 || b0 < 0) throw UsageError("mul_monomial: negative exponent");
  BiSeries out(s.x_order(), s.q_order());
  for (int a = 0; a + a0 <= s.x_order(); ++a) {
    for (int b = 0; b + b0 <= s.q_order(); ++b) out.at(a + a0, b + b0) = s.at(a, b);
  }
  return out;
}

BiSeries invert_one_minus_q_power(int m, int x_order, int q_order) {
  if (m < 1) throw UsageError("invert_one_minus_q_power: m must be >= 1");
  BiSeries out(x_order, q_order);
  for (int b = 0; b <= q_order; b += m) out.at(0, b) = 1;
  return out;
}

BiSeries divide_one_minus_q_power(const BiSeries& s, int m) {
  if (m < 1) throw UsageError("divide_one_minus_q_power: m must be >= 1");
  BiSeries out = s;
  for (int a = 0; a <= s.x_order(); ++a) {
    for (int b = m; b <= s.q_order(); ++b) out.at(a, b) += out.at(a, b - m);
  }
  return out;
}

BiSeries truncate(const BiSeries& s, int x_order, int q_order) {
  if (x_order > s.x_order() || q_order > s.q_order()) {
    throw UsageError("truncate: target window exceeds source window");
  }
  BiSeries out(x_order, q_order);
  for (int a = 0; a <= x_order; ++a) {
    for (int b = 0; b <= q_order; ++b) out.at(a, b) = s.at(a, b);
  }
  return out;
}

Specialized specialize_x(const BiSeries& s, XSpecialization mode) {
  const int N = s.q_order();
  Specialized result{BiSeries(0, N), 0};
  if (mode == XSpecialization::One) {
    for (int a = 0; a <= s.x_order(); ++a) {
      for (int b = 0; b <= N; ++b) result.series.at(0, b) += s.at(a, b);
    }
    return result;
  }
  if (s.x_order() > N) {
    throw UsageError("specialize_x(x=q): x_order must not exceed q_order");
  }
  for (int a = 0; a <= s.x_order(); ++a) {
    for (int b = 0; b <= N; ++b) {
      const Coefficient& c = s.at(a, b);
      if (c == 0) continue;
      if (a + b <= N) {
        result.series.at(0, a + b) += c;
      } else {
        ++result.dropped_terms;
      }
    }
  }
  return result;
}

}  // namespace qseries
