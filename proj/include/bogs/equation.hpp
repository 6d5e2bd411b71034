#pragma once

#include <string>

#include "bogs/errors.hpp"

namespace bogs {

/// u_t + H u_xx + s * u^2 u_x = 0        (mBO; s = nonlinearity_sign)
/// u_t + H u_xx + s * (u^2)_x = 0        (BO)
/// u_t -   i u_xx + s * |u|^2 u_x = 0    (DNLS)
enum class EquationKind { BO, mBO, DNLS };

struct EquationSpec {
  EquationKind kind = EquationKind::mBO;
  double nonlinearity_sign = 1.0;

  bool is_complex() const { return kind == EquationKind::DNLS; }
};

inline EquationSpec make_equation(EquationKind kind, double sign = 1.0) {
  if (sign != 1.0 && sign != -1.0)
    throw ConfigError("nonlinearity_sign must be +1 or -1");
  return {kind, sign};
}

inline std::string equation_name(EquationKind k) {
  switch (k) {
    case EquationKind::BO: return "BO";
    case EquationKind::mBO: return "mBO";
    case EquationKind::DNLS: return "DNLS";
  }
  return "?";
}

}  // namespace bogs
