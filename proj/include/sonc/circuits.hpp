#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sonc/geometry.hpp"

namespace sonc {

// Minimally supported kernel vector of the lifted matrix. The kernel vector
// is stored over the support, barycentric-normalized for simplicial circuits
// (-1 at the interior point, positive convex weights elsewhere); otherwise
// scaled so the first nonzero entry is +1. `integer_vec` is the primitive
// integer rescaling.
struct Circuit {
  std::vector<std::size_t> support;  // ascending indices into A
  RatVec kernel_vec;                 // over support, normalized
  RatVec integer_vec;                // primitive integer form of kernel_vec
  std::pair<int, int> signature;     // (num_negative, num_positive)
  bool simplicial = false;
  std::optional<std::size_t> interior_index;  // index into A when simplicial
  int dim = 0;                                // affine dimension of the support points

  // Kernel vector embedded into length d+1.
  RatVec full_vector(std::size_t d_plus_1) const;
};

std::vector<Circuit> enumerate_circuits(const SupportSet& A);

RatVec barycentric_vector(const Circuit& c);

bool is_edge_generator(const SupportSet& A, const Circuit& c);

struct ReznickCone {
  std::vector<Circuit> circuits;         // all simplicial circuits
  std::vector<Circuit> edge_generators;  // subset of circuits
  int dim = 0;
};

ReznickCone reznick_cone(const SupportSet& A);

// Lemma-style construction: a simplicial circuit with the given relative
// interior point that contains the given vertex.
Circuit simplicial_circuit_through(const SupportSet& A, std::size_t interior, std::size_t vertex);

}  // namespace sonc
