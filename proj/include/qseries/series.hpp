#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qseries {

// Exact coefficient of every series in the library. Never rounded.
using Coefficient = mpz_class;

// Thrown for calls that violate an operation's preconditions
// (mismatched orders, negative shifts, out-of-range parameters).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Truncated bivariate power series in x (charge) and q (weight).
//
// Entry (a, b) is the coefficient of x^a q^b for 0 <= a <= x_order and
// 0 <= b <= q_order. Storage is dense and row-major in a. Every
// operation discards terms that fall outside this rectangular window.
class BiSeries {
 public:
  BiSeries(int x_order, int q_order);

  static BiSeries zero(int x_order, int q_order);
  static BiSeries one(int x_order, int q_order);
  // c * x^a q^b, or zero when (a, b) lies outside the window.
  static BiSeries monomial(int x_order, int q_order, int a, int b,
                           const Coefficient& c = 1);

  int x_order() const { return x_order_; }
  int q_order() const { return q_order_; }

  // Checked access; throws UsageError outside the window.
  const Coefficient& at(int a, int b) const;
  Coefficient& at(int a, int b);
  void set(int a, int b, const Coefficient& c) { at(a, b) = c; }

  // The coefficient of x^a as a univariate series (x_order 0).
  BiSeries x_coefficient(int a) const;
  // Overwrites row a with the q-coefficients of `row` (x_order 0, same q_order).
  void set_x_coefficient(int a, const BiSeries& row);

  bool is_zero() const;
  std::size_t nonzero_count() const;
  bool same_orders(const BiSeries& other) const {
    return x_order_ == other.x_order_ && q_order_ == other.q_order_;
  }

  BiSeries& operator+=(const BiSeries& rhs);
  BiSeries& operator-=(const BiSeries& rhs);

  friend bool operator==(const BiSeries& lhs, const BiSeries& rhs);

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_order_ + 1) +
           static_cast<std::size_t>(b);
  }

  int x_order_;
  int q_order_;
  std::vector<Coefficient> coeffs_;
};

BiSeries operator+(BiSeries lhs, const BiSeries& rhs);
BiSeries operator-(BiSeries lhs, const BiSeries& rhs);
BiSeries operator-(const BiSeries& s);
// Truncated product; terms x^a q^b with a > R or b > N are discarded.
BiSeries operator*(const BiSeries& lhs, const BiSeries& rhs);

inline BiSeries add(const BiSeries& s, const BiSeries& t) { return s + t; }
inline BiSeries sub(const BiSeries& s, const BiSeries& t) { return s - t; }
inline BiSeries mul(const BiSeries& s, const BiSeries& t) { return s * t; }

BiSeries scale(const BiSeries& s, const Coefficient& c);

// Substitution x -> x q^m. Requires m >= 0.
BiSeries qshift(const BiSeries& s, int m);

// Multiplication by x^a0 q^b0. Requires a0, b0 >= 0.
BiSeries mul_monomial(const BiSeries& s, int a0, int b0);

// 1 + q^m + q^{2m} + ... truncated at q_order N. Requires m >= 1.
BiSeries invert_one_minus_q_power(int m, int x_order, int q_order);

// s / (1 - q^m), computed in place by the recurrence r_b = s_b + r_{b-m}.
// Equal to mul(s, invert_one_minus_q_power(m, ...)).
BiSeries divide_one_minus_q_power(const BiSeries& s, int m);

// Restriction to a smaller window. Requires x_order <= s.x_order() and
// q_order <= s.q_order().
BiSeries truncate(const BiSeries& s, int x_order, int q_order);

enum class XSpecialization { One, Q };

struct Specialized {
  BiSeries series;  // x_order 0
  // Nonzero terms that landed beyond q_order (only possible for x = q).
  std::size_t dropped_terms = 0;
};

// x = 1 sums each column over a; x = q sends (a, b) to (0, a + b).
// x = q requires x_order <= q_order.
Specialized specialize_x(const BiSeries& s, XSpecialization mode);

}  // namespace qseries
