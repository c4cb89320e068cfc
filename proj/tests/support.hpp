#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hermitia/builders.hpp"
#include "hermitia/manifest.hpp"

namespace testing {

using namespace hermitia;

inline Model& builtin_model(const std::string& name) {
  static std::map<std::string, std::unique_ptr<Model>> cache;
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<Model>(builtin(name));
  return *slot;
}

inline Scalar num(long v) { return Scalar(v); }

inline ScalarMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Scalar>> s;
  for (const auto& r : rows) {
    s.emplace_back();
    for (long x : r) s.back().emplace_back(x);
  }
  return ScalarMatrix::from_rows(s);
}

inline RationalMatrix rat_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> s;
  for (const auto& r : rows) {
    s.emplace_back();
    for (long x : r) s.back().emplace_back(x);
  }
  return RationalMatrix::from_rows(s);
}

/// Sign of the permutation sorting `v` (0 when an index repeats); sorts v.
inline int sort_sign(std::vector<unsigned>& v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
      if (v[j] == v[j + 1]) return 0;
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
    }
  for (std::size_t j = 0; j + 1 < v.size(); ++j)
    if (v[j] == v[j + 1]) return 0;
  return sign;
}

}  // namespace testing
