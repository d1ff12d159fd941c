#include "torcone/forms.hpp"

#include <algorithm>

#include "torcone/error.hpp"

namespace torcone {

namespace {

void require_same_vars(const PolyForm& a, const PolyForm& b) {
  if (a.vars != b.vars) throw Error(Errc::VariableMismatch, "form variable lists differ");
}

void add_component(PolyForm& f, std::vector<int> idx, Poly coeff) {
  if (coeff.is_zero()) return;
  auto it = f.comps.find(idx);
  if (it == f.comps.end()) {
    f.comps.emplace(std::move(idx), std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second.is_zero()) f.comps.erase(it);
  }
}

// Sign of the permutation sorting idx; 0 when an index repeats.
int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i)
    for (size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

// Merge sign of two sorted disjoint tuples: parity of pairs (i, j) with
// i in a, j in b, j < i.
int merge_sign(const std::vector<int>& a, const std::vector<int>& b) {
  int inversions = 0;
  for (int i : a)
    for (int j : b)
      if (j < i) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (int i : a)
    for (int j : b)
      if (i == j) return false;
  return true;
}

std::vector<int> merge_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

} // namespace

PolyForm PolyForm::basis(const std::vector<std::string>& vars, std::vector<int> indices,
                         Poly coeff) {
  if (coeff.vars != vars) throw Error(Errc::VariableMismatch, "coefficient variable mismatch");
  for (int i : indices)
    if (i < 0 || i >= static_cast<int>(vars.size()))
      throw Error(Errc::InvalidInput, "basis index out of range");
  PolyForm f{vars, static_cast<int>(indices.size()), {}};
  int sign = sort_sign(indices);
  if (sign == 0 || coeff.is_zero()) return f;
  if (sign < 0) coeff = Rational(-1) * coeff;
  f.comps.emplace(std::move(indices), std::move(coeff));
  return f;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  require_same_vars(*this, o);
  if (degree != o.degree && !is_zero() && !o.is_zero())
    throw Error(Errc::DegreeMismatch, "adding forms of different degree");
  if (is_zero()) degree = o.degree;
  for (const auto& [idx, f] : o.comps) add_component(*this, idx, f);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  require_same_vars(*this, o);
  if (degree != o.degree && !is_zero() && !o.is_zero())
    throw Error(Errc::DegreeMismatch, "subtracting forms of different degree");
  if (is_zero()) degree = o.degree;
  for (const auto& [idx, f] : o.comps) add_component(*this, idx, -f);
  return *this;
}

PolyForm operator*(const Rational& c, const PolyForm& a) {
  PolyForm r{a.vars, a.degree, {}};
  if (c == 0) return r;
  for (const auto& [idx, f] : a.comps) r.comps.emplace(idx, c * f);
  return r;
}

PolyForm operator*(const Poly& f, const PolyForm& a) {
  if (f.vars != a.vars) throw Error(Errc::VariableMismatch, "scaling variable mismatch");
  PolyForm r{a.vars, a.degree, {}};
  for (const auto& [idx, g] : a.comps) add_component(r, idx, f * g);
  return r;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  require_same_vars(a, b);
  PolyForm r{a.vars, a.degree + b.degree, {}};
  for (const auto& [ia, fa] : a.comps)
    for (const auto& [ib, fb] : b.comps) {
      if (!disjoint(ia, ib)) continue;
      int sign = merge_sign(ia, ib);
      Poly coeff = fa * fb;
      if (sign < 0) coeff = Rational(-1) * coeff;
      add_component(r, merge_sorted(ia, ib), std::move(coeff));
    }
  return r;
}

PolyForm wedge_power(const PolyForm& a, int n) {
  if (n < 0) throw Error(Errc::InvalidInput, "negative wedge power");
  PolyForm r = PolyForm::from_function(Poly::constant(a.vars, 1));
  for (int i = 0; i < n; ++i) r = wedge(r, a);
  return r;
}

PolyForm exterior_derivative(const PolyForm& a) {
  PolyForm r{a.vars, a.degree + 1, {}};
  int nvars = static_cast<int>(a.vars.size());
  for (const auto& [idx, f] : a.comps)
    for (int v = 0; v < nvars; ++v) {
      Poly df = f.derivative(v);
      if (df.is_zero()) continue;
      if (std::binary_search(idx.begin(), idx.end(), v)) continue;
      // dx_v moves right past every smaller index in idx
      int below = static_cast<int>(std::lower_bound(idx.begin(), idx.end(), v) - idx.begin());
      if (below % 2 == 1) df = Rational(-1) * df;
      std::vector<int> nidx = idx;
      nidx.insert(nidx.begin() + below, v);
      add_component(r, std::move(nidx), std::move(df));
    }
  return r;
}

PolyForm interior_product(const std::vector<Poly>& field, const PolyForm& a) {
  if (field.size() != a.vars.size())
    throw Error(Errc::VariableMismatch, "vector field has wrong component count");
  for (const Poly& p : field)
    if (p.vars != a.vars) throw Error(Errc::VariableMismatch, "field component variable mismatch");
  if (a.degree == 0) return PolyForm::zero(a.vars, 0);
  PolyForm r{a.vars, a.degree - 1, {}};
  for (const auto& [idx, f] : a.comps)
    for (size_t p = 0; p < idx.size(); ++p) {
      const Poly& xv = field[static_cast<size_t>(idx[p])];
      if (xv.is_zero()) continue;
      Poly coeff = f * xv;
      if (p % 2 == 1) coeff = Rational(-1) * coeff;
      std::vector<int> nidx;
      nidx.reserve(idx.size() - 1);
      for (size_t q = 0; q < idx.size(); ++q)
        if (q != p) nidx.push_back(idx[q]);
      add_component(r, std::move(nidx), std::move(coeff));
    }
  return r;
}

Rational qdet(std::vector<QVector> m) {
  size_t n = m.size();
  Rational detv = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      detv = -detv;
    }
    detv *= m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return detv;
}

namespace {

Rational frame_minor(const std::vector<QVector>& frame, const std::vector<int>& idx) {
  std::vector<QVector> sub(frame.size(), QVector(idx.size()));
  for (size_t r = 0; r < frame.size(); ++r)
    for (size_t c = 0; c < idx.size(); ++c) sub[r][c] = frame[r][static_cast<size_t>(idx[c])];
  return qdet(std::move(sub));
}

} // namespace

Rational evaluate_at_frame(const PolyForm& a, const QVector& point,
                           const std::vector<QVector>& frame) {
  if (static_cast<int>(frame.size()) != a.degree)
    throw Error(Errc::DegreeMismatch, "frame size differs from form degree");
  if (point.size() != a.vars.size())
    throw Error(Errc::InvalidInput, "point dimension mismatch");
  for (const QVector& row : frame)
    if (row.size() != a.vars.size())
      throw Error(Errc::InvalidInput, "frame vector dimension mismatch");
  Rational total = 0;
  for (const auto& [idx, f] : a.comps) total += f.eval(point) * frame_minor(frame, idx);
  return total;
}

Rational FrameEvaluator::operator()(const PolyForm& a) {
  if (static_cast<int>(frame.size()) != a.degree)
    throw Error(Errc::DegreeMismatch, "frame size differs from form degree");
  Rational total = 0;
  for (const auto& [idx, f] : a.comps) {
    auto it = minors.find(idx);
    if (it == minors.end()) it = minors.emplace(idx, frame_minor(frame, idx)).first;
    total += f.eval(point) * it->second;
  }
  return total;
}

} // namespace torcone
