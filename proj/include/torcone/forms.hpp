#pragma once

#include "torcone/poly.hpp"

namespace torcone {

// Differential form with Poly coefficients: degree-q component map keyed by
// strictly increasing coordinate index tuples. Zero components are omitted.
struct PolyForm {
  std::vector<std::string> vars;
  int degree = 0;
  std::map<std::vector<int>, Poly> comps;

  static PolyForm zero(const std::vector<std::string>& vars, int degree) {
    return PolyForm{vars, degree, {}};
  }
  // coeff * dx_{indices[0]} ^ ... ^ dx_{indices[q-1]}; indices need not be
  // sorted, the sign of the sorting permutation is absorbed.
  static PolyForm basis(const std::vector<std::string>& vars, std::vector<int> indices,
                        Poly coeff);
  static PolyForm from_function(Poly f) {
    PolyForm r{f.vars, 0, {}};
    if (!f.is_zero()) r.comps.emplace(std::vector<int>{}, std::move(f));
    return r;
  }

  bool is_zero() const { return comps.empty(); }

  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(const Rational& c, const PolyForm& a);
  friend PolyForm operator*(const Poly& f, const PolyForm& a);
  friend bool operator==(const PolyForm& a, const PolyForm& b) {
    return a.vars == b.vars && a.degree == b.degree && a.comps == b.comps;
  }
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);
PolyForm wedge_power(const PolyForm& a, int n);
PolyForm exterior_derivative(const PolyForm& a);

// Contraction with a polynomial vector field, one Poly component per
// coordinate.
PolyForm interior_product(const std::vector<Poly>& field, const PolyForm& a);

// Value of a degree-q form on an ordered q-frame at a point, exactly.
Rational evaluate_at_frame(const PolyForm& a, const QVector& point,
                           const std::vector<QVector>& frame);

// Same evaluation with the frame minors cached; worth it when several forms
// are evaluated against one frame.
struct FrameEvaluator {
  const QVector& point;
  const std::vector<QVector>& frame;
  std::map<std::vector<int>, Rational> minors;

  FrameEvaluator(const QVector& p, const std::vector<QVector>& f) : point(p), frame(f) {}
  Rational operator()(const PolyForm& a);
};

Rational qdet(std::vector<QVector> m);

} // namespace torcone
