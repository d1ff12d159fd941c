#include "torcone/rational.hpp"

#include <cctype>

#include "torcone/error.hpp"

namespace torcone {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::DimensionCapExceeded: return "DimensionCapExceeded";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::NotStrictlyConvex: return "NotStrictlyConvex";
    case Errc::EmptyFacetSet: return "EmptyFacetSet";
    case Errc::ZeroReeb: return "ZeroReeb";
    case Errc::InvalidAnglePair: return "InvalidAnglePair";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::UnclassifiableCone: return "UnclassifiableCone";
    case Errc::WholeSpaceCone: return "WholeSpaceCone";
    case Errc::VariableMismatch: return "VariableMismatch";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::WeightMismatch: return "WeightMismatch";
    case Errc::NoPositiveT: return "NoPositiveT";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

namespace {

bool valid_int_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

} // namespace

Rational parse_rational(const std::string& s) {
  size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int_token(s)) throw Error(Errc::ParseError, "bad integer literal '" + s + "'");
    return Rational(Integer(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!valid_int_token(num) || !valid_int_token(den))
    throw Error(Errc::ParseError, "bad rational literal '" + s + "'");
  Integer d(den);
  if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
  return make_rational(Integer(num), d);
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace torcone
