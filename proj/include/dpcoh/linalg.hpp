#pragma once
#include <map>
#include <utility>
#include <vector>

#include "dpcoh/rat.hpp"

namespace dpcoh {

// Sparse exact-rational matrix; zero entries are never stored.
struct RatMatrix {
  int rows = 0, cols = 0;
  std::map<std::pair<int, int>, Rat> entries;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c) {}
  void set(int r, int c, const Rat& v);
  void add(int r, int c, const Rat& v);
  Rat get(int r, int c) const;
};

// Exact rank via fraction-free elimination on integer-scaled rows, picking the
// smallest-magnitude pivot in each column.
int rank(const RatMatrix& m);

// Basis of the right kernel, one vector per free column in column order, with
// denominators cleared and content divided out.
std::vector<std::vector<Rat>> nullspace_basis(const RatMatrix& m);

// true iff v (length = rows) lies in the column span of m.
bool in_span(const std::vector<Rat>& v, const RatMatrix& m);

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);
RatMatrix transpose(const RatMatrix& m);
bool is_zero(const RatMatrix& m);
std::vector<Rat> mat_apply(const RatMatrix& m, const std::vector<Rat>& v);
RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix from_columns(int rows, const std::vector<std::vector<Rat>>& cols);

// Scale to coprime integers; leading nonzero entry becomes positive.
void clear_denominators(std::vector<Rat>& v);

}  // namespace dpcoh
