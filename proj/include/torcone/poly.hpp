#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "torcone/rational.hpp"

namespace torcone {

struct GradedLex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
  }
};

// Polynomial with rational coefficients over a named coordinate list.
// Canonical at all times: no zero coefficients stored.
struct Poly {
  std::vector<std::string> vars;
  std::map<std::vector<int>, Rational, GradedLex> terms;

  static Poly zero(const std::vector<std::string>& vars) { return Poly{vars, {}}; }
  static Poly constant(const std::vector<std::string>& vars, const Rational& c);
  static Poly variable(const std::vector<std::string>& vars, int index);
  static Poly monomial(const std::vector<std::string>& vars, std::vector<int> exps,
                       const Rational& c);

  bool is_zero() const { return terms.empty(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars == b.vars && a.terms == b.terms;
  }

  Poly derivative(int var) const;
  Rational eval(const QVector& point) const;
  std::string str() const; // human-readable, deterministic
};

void require_same_vars(const Poly& a, const Poly& b);

} // namespace torcone
