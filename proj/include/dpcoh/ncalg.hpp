#pragma once
#include <string>
#include <utility>
#include <vector>

#include "dpcoh/lincomb.hpp"
#include "dpcoh/quiver.hpp"

namespace dpcoh {

using Word = std::vector<int>;  // bead ids, pairwise composable

int word_degree(const Quiver& q, const Word& w);  // number of star beads
int word_weight(const Quiver& q, const Word& w);  // number of plain beads

// Path in the double quiver. The empty word is the length-0 path e_v at
// `vertex`; otherwise `vertex` is the tail of the first bead.
struct Path {
  int vertex = 0;
  Word beads;
  bool operator==(const Path&) const = default;
};

// Paths compare by length first, then lexicographically in the bead order.
bool operator<(const Path& a, const Path& b);

Path path_e(int v);
Path path_of(const Quiver& q, const Word& w);  // throws on broken composability
Path path_of_names(const Quiver& q, const std::vector<std::string>& bead_names);
int path_tail(const Quiver& q, const Path& p);
int path_head(const Quiver& q, const Path& p);
bool path_closed(const Quiver& q, const Path& p);
bool path_is_plain(const Quiver& q, const Path& p);  // no star beads

using NCPoly = Lin<Path>;
using PathPair = std::pair<Path, Path>;
using TensorElem = Lin<PathPair>;

NCPoly nc_unit(int vertex);
NCPoly nc_word(const Quiver& q, const Word& w, const Rat& c = 1);

// Bilinear extension of path concatenation; non-composable products are 0.
NCPoly mul(const Quiver& q, const NCPoly& a, const NCPoly& b);

// The derivation dual to a plain arrow, valued in the tensor square for the
// outer bimodule structure: on a path it splits at every occurrence of the
// arrow. Throws if `arrow` is out of range (star beads are not arrows here).
TensorElem double_deriv(const Quiver& q, int arrow, const NCPoly& f);

NCPoly tensor_mu(const Quiver& q, const TensorElem& t);  // multiply the two legs
TensorElem tensor_flip(const TensorElem& t);             // swap legs, coefficients kept

// mu((arrow) acting inner-left on double_deriv(arrow, f)); multiplies each
// monomial by its degree in the arrow.
NCPoly euler_apply(const Quiver& q, int arrow, const NCPoly& f);

// sum_i ((df/dx_i)' x_i (x) (df/dx_i)'' - (df/dx_i)' (x) x_i (df/dx_i)'').
// Defined on one-vertex quivers; equals f(x)1 - 1(x)f.
TensorElem gauge_apply(const Quiver& q, const NCPoly& f);

std::string path_str(const Quiver& q, const Path& p);
std::string ncpoly_str(const Quiver& q, const NCPoly& f);

// One-vertex monomial syntax: words over arrow names with ^k powers, e.g.
// "x^2*y" for xxy. "1" is the empty path.
Path mono_parse(const Quiver& q, const std::string& text);

}  // namespace dpcoh
