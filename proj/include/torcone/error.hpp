#pragma once

#include <stdexcept>
#include <string>

namespace torcone {

enum class Errc {
  ZeroVector,
  NotPrimitive,
  DimensionCapExceeded,
  DegenerateInput,
  NotApplicable,
  NotUnimodular,
  NotStrictlyConvex,
  EmptyFacetSet,
  ZeroReeb,
  InvalidAnglePair,
  InvalidInput,
  UnclassifiableCone,
  WholeSpaceCone,
  VariableMismatch,
  DegreeMismatch,
  WeightMismatch,
  NoPositiveT,
  ParseError,
};

const char* errc_name(Errc c);

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

} // namespace torcone
