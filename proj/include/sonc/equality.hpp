#pragma once

#include <vector>

#include "sonc/circuits.hpp"
#include "sonc/subdivision.hpp"

namespace sonc {

enum class Verdict { Equal, NotEqual, PreconditionViolated };

struct CensusEntry {
  SoncComplex complex;
  std::vector<std::vector<std::size_t>> witness_cells;  // a subdivision inducing it
  WeightVector witness;
};

struct EqualityReport {
  bool generic = false;                 // all simplicial circuits full-dimensional
  std::vector<Circuit> non_fulldim;     // witnesses when not generic
  Verdict verdict = Verdict::NotEqual;
  std::vector<CensusEntry> census;      // distinct sonc-complexes
  std::vector<std::size_t> multi_maximal;  // census entries with several maximal cells
  long census_raw = 0;
  long census_up_to_symmetry = 0;
  long symmetry_order = 1;
};

// Decides S+_A = P+_A for generic supports: equal iff every nonempty
// sonc-complex over the regular-subdivision census has a unique
// inclusion-maximal cell.
EqualityReport check_equality(const SupportSet& A);

// Point permutations induced by exact affine self-maps of the configuration.
std::vector<std::vector<std::size_t>> affine_symmetries(const SupportSet& A);

}  // namespace sonc
