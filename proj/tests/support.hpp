#ifndef QES_TESTS_SUPPORT_HPP
#define QES_TESTS_SUPPORT_HPP

#include <optional>
#include <vector>

#include "qes/types.hpp"

/// Kind of the qes::Error thrown by f, or nullopt if it returns normally.
template <class F>
std::optional<qes::ErrorKind> thrown_kind(F&& f) {
  try {
    f();
  } catch (const qes::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(a + (b - a) * i / (n - 1));
  return out;
}

#endif
