#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "isoclass/algebra.hpp"

namespace isoclass {

/// Record format: {"p": 2, "dim": 2, "products": [[i, j, k, c], ...]} with
/// 1-based indices meaning c_{ij}^k = c; omitted entries are zero.
inline Algebra algebra_from_json(const nlohmann::json& j) {
  if (!j.contains("p") || !j.contains("dim")) throw std::invalid_argument("algebra record needs 'p' and 'dim'");
  int p = j.at("p").get<int>();
  int n = j.at("dim").get<int>();
  if (n < 1) throw std::invalid_argument("algebra record: dim must be positive");
  Algebra A(p, n);
  PrimeField F(p);
  if (j.contains("products"))
    for (const auto& quad : j.at("products")) {
      if (!quad.is_array() || quad.size() != 4)
        throw std::invalid_argument("algebra record: products must be [i, j, k, c] quadruples");
      int i = quad[0].get<int>(), jj = quad[1].get<int>(), k = quad[2].get<int>(), c = quad[3].get<int>();
      if (i < 1 || i > n || jj < 1 || jj > n || k < 1 || k > n)
        throw std::invalid_argument("algebra record: product index out of range");
      A.at(i - 1, jj - 1, k - 1) = F.reduce(c);
    }
  return A;
}

inline nlohmann::json algebra_to_json(const Algebra& A) {
  nlohmann::json j;
  j["p"] = A.p;
  j["dim"] = A.n;
  j["products"] = nlohmann::json::array();
  for (int i = 0; i < A.n; ++i)
    for (int jj = 0; jj < A.n; ++jj)
      for (int k = 0; k < A.n; ++k)
        if (A.at(i, jj, k)) j["products"].push_back({i + 1, jj + 1, k + 1, A.at(i, jj, k)});
  return j;
}

inline Algebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open algebra file: " + path);
  nlohmann::json j;
  in >> j;
  return algebra_from_json(j);
}

}  // namespace isoclass
