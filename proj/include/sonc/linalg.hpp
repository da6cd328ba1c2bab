#pragma once

#include <optional>
#include <vector>

#include "sonc/rational.hpp"

namespace sonc {

// Dense exact matrices, row major. Sizes here are tiny (tens of entries),
// so plain fraction-pivot Gaussian elimination is all we need.
using Mat = std::vector<RatVec>;

inline std::size_t rows(const Mat& m) { return m.size(); }
inline std::size_t cols(const Mat& m) { return m.empty() ? 0 : m[0].size(); }

Mat transpose(const Mat& m);

std::size_t rank(Mat m);

// Basis of the right kernel {x : m x = 0}.
std::vector<RatVec> kernel_basis(const Mat& m);

// One solution of m x = b, or nullopt if inconsistent.
std::optional<RatVec> solve(Mat m, RatVec b);

Rat dot(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rat& s);

}  // namespace sonc
