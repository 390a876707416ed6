#pragma once

#include <initializer_list>
#include <vector>

#include "qseries/series.hpp"

// Univariate series (x_order 0) from q-coefficients; extra trailing
// entries beyond q_order are ignored.
inline qseries::BiSeries qpoly(int q_order, std::initializer_list<long> coeffs) {
  qseries::BiSeries s(0, q_order);
  int b = 0;
  for (long c : coeffs) {
    if (b > q_order) break;
    s.at(0, b++) = c;
  }
  return s;
}

// Series from (a, b, c) triples.
struct T {
  int a;
  int b;
  long c;
};

inline qseries::BiSeries from_terms(int x_order, int q_order, std::initializer_list<T> terms) {
  qseries::BiSeries s(x_order, q_order);
  for (const T& t : terms) s.at(t.a, t.b) = t.c;
  return s;
}
