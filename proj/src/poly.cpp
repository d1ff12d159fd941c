#include "torcone/poly.hpp"

#include "torcone/error.hpp"

namespace torcone {

void require_same_vars(const Poly& a, const Poly& b) {
  if (a.vars != b.vars) throw Error(Errc::VariableMismatch, "polynomial variable lists differ");
}

Poly Poly::constant(const std::vector<std::string>& vars, const Rational& c) {
  Poly p{vars, {}};
  if (c != 0) p.terms.emplace(std::vector<int>(vars.size(), 0), c);
  return p;
}

Poly Poly::variable(const std::vector<std::string>& vars, int index) {
  if (index < 0 || index >= static_cast<int>(vars.size()))
    throw Error(Errc::InvalidInput, "variable index out of range");
  std::vector<int> e(vars.size(), 0);
  e[index] = 1;
  Poly p{vars, {}};
  p.terms.emplace(std::move(e), Rational(1));
  return p;
}

Poly Poly::monomial(const std::vector<std::string>& vars, std::vector<int> exps,
                    const Rational& c) {
  if (exps.size() != vars.size())
    throw Error(Errc::InvalidInput, "exponent vector length mismatch");
  Poly p{vars, {}};
  if (c != 0) p.terms.emplace(std::move(exps), c);
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_vars(*this, o);
  for (const auto& [e, c] : o.terms) {
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_vars(*this, o);
  for (const auto& [e, c] : o.terms) {
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, Rational(-c));
    } else {
      it->second -= c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return *this;
}

Poly operator-(const Poly& a) {
  Poly r{a.vars, {}};
  for (const auto& [e, c] : a.terms) r.terms.emplace(e, Rational(-c));
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_vars(a, b);
  Poly r{a.vars, {}};
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Rational c = ca * cb;
      auto it = r.terms.find(e);
      if (it == r.terms.end()) {
        r.terms.emplace(std::move(e), std::move(c));
      } else {
        it->second += c;
        if (it->second == 0) r.terms.erase(it);
      }
    }
  return r;
}

Poly operator*(const Rational& c, const Poly& a) {
  Poly r{a.vars, {}};
  if (c == 0) return r;
  for (const auto& [e, coeff] : a.terms) r.terms.emplace(e, Rational(c * coeff));
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r{vars, {}};
  for (const auto& [e, c] : terms) {
    if (e[var] == 0) continue;
    std::vector<int> d = e;
    --d[var];
    r.terms.emplace(std::move(d), Rational(Rational(e[var]) * c));
  }
  return r;
}

Rational Poly::eval(const QVector& point) const {
  if (point.size() != vars.size())
    throw Error(Errc::InvalidInput, "evaluation point dimension mismatch");
  Rational total = 0;
  for (const auto& [e, c] : terms) {
    Rational term = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

std::string Poly::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += "*" + vars[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

} // namespace torcone
