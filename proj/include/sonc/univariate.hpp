#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sonc/rational.hpp"

namespace sonc {

// Boundary stratum label for a univariate support with minimal circuits
// indexed 1..m: an ordered index set grouped into blocks of equal singular
// loci, blocks separated by bars. Adjacent integers must share a block.
struct StratumLabel {
  std::vector<std::vector<int>> groups;

  std::vector<int> indices() const;
  int ambient_dim() const;  // |I| + #groups, the dimension inside R^A
  bool valid(int m) const;
  std::string str() const;  // "{1,2|4}", "{}" for the empty label

  friend bool operator==(const StratumLabel& a, const StratumLabel& b) { return a.groups == b.groups; }
  friend bool operator<(const StratumLabel& a, const StratumLabel& b) { return a.groups < b.groups; }
};

// All valid labels for d+1 points (m = d-1). With `slice` set, only labels
// with 1 and m in the index set (the a_0 = a_d = 1 slice); their reported
// dimension drops by 2.
std::vector<StratumLabel> enumerate_labels(int d, bool slice);

int label_dimension(const StratumLabel& label, bool slice);

struct StrataPoset {
  std::vector<StratumLabel> labels;
  std::vector<int> dims;                                 // ambient dims
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (smaller, larger)
  std::vector<std::vector<bool>> leq;                    // closure order

  std::optional<std::size_t> find(const StratumLabel& l) const;
  bool below(const StratumLabel& a, const StratumLabel& b) const;  // a in closure of b
};

StrataPoset build_poset(const std::vector<StratumLabel>& labels);

struct Codim1Count {
  long labels;
  long total_with_coordinate_hyperplanes;  // labels + 2
};

Codim1Count codim1_count(int d);

enum class QuarticRegion { Boundary, Interior };

// Example-criterion test for the support {0,...,4} with circuits {0,1,2}
// and {2,3,4}: boundary iff w1 * w3 >= 1.
QuarticRegion quartic_boundary_test(const Rat& w1, const Rat& w3);

struct UnivariateTerm {
  int circuit_index;  // 1..m, the minimal circuit {i-1, i, i+1}
  Rat locus;          // log coordinate of the singular locus
  Rat scale;          // > 0
};

// Prop-6.2-style classification: a label when overlapping circuits share
// loci and loci are weakly increasing, otherwise nullopt (interior-candidate).
std::optional<StratumLabel> classify_decomposition(std::vector<UnivariateTerm> terms);

// Exact univariate polynomials, coefficients ascending by degree.
using Poly = RatVec;

Poly poly_trim(Poly p);
Poly poly_derivative(const Poly& p);
Rat poly_eval(const Poly& p, const Rat& x);
Poly poly_mul(const Poly& a, const Poly& b);

// True iff p(z) >= 0 for every z > 0, decided exactly by square-free
// reduction and Sturm root counting. The zero polynomial counts as
// nonnegative.
bool sturm_nonneg_halfline(const Poly& p);

}  // namespace sonc
