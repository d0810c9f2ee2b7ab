#pragma once

#include "k3lat/arith.hpp"

#include <initializer_list>
#include <vector>

inline k3lat::IntVec iv(std::initializer_list<long long> xs) {
  k3lat::IntVec v;
  for (auto x : xs) v.push_back(x);
  return v;
}

inline k3lat::IntMat im(std::initializer_list<std::initializer_list<long long>> rows) {
  k3lat::IntMat m;
  for (auto r : rows) m.push_back(iv(r));
  return m;
}

inline std::vector<std::vector<long long>> to_ll(const k3lat::IntMat& m) {
  std::vector<std::vector<long long>> out;
  for (const auto& r : m) {
    out.emplace_back();
    for (const auto& x : r) out.back().push_back(x.convert_to<long long>());
  }
  return out;
}

inline k3lat::IntMat from_ll(const std::vector<std::vector<long long>>& m) {
  k3lat::IntMat out;
  for (const auto& r : m) {
    out.emplace_back();
    for (auto x : r) out.back().push_back(x);
  }
  return out;
}
