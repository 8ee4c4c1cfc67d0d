#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace lgm {

// A Fano complete intersection: l hypersurfaces of the given degrees inside
// G(2,k+2) or P^N.
struct ModelSpec {
  enum class Ambient { Grassmannian, Projective };

  Ambient ambient = Ambient::Grassmannian;
  int size = 2;  // k for G(2,k+2), N for P^N
  std::vector<int> degrees;

  static ModelSpec grassmannian(int k, std::vector<int> degrees);
  static ModelSpec projective(int n, std::vector<int> degrees);

  int degree_sum() const;
  // The Fano index d0 = k+2 - sum(d) resp. N+1 - sum(d).
  int index() const;
  void validate() const;  // throws input_error unless Fano
  std::string describe() const;
};

nlohmann::json spec_to_json(const ModelSpec& s);

}  // namespace lgm
