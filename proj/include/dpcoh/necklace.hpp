#pragma once
#include <vector>

#include "dpcoh/ncalg.hpp"

namespace dpcoh {

// A closed cyclic word stored by its canonical representative: the
// lexicographically least rotation in the bead order. Rotation classes whose
// minimal word is reached with both Koszul signs are the zero class and are
// never stored as necklaces.
struct Necklace {
  Word word;      // canonical; empty = length-0 necklace at `vertex`
  int vertex = 0; // tail of word[0] for nonempty words
  int stars = 0;
  int weight = 0;
  bool operator==(const Necklace&) const = default;
};

bool operator<(const Necklace& a, const Necklace& b);

struct Canon {
  bool zero = false;
  int sign = 1;  // class(input word) == sign * class(neck)
  Necklace neck;
};

// `w` must be closed and pairwise composable (throws otherwise). Rotating a
// bead of degree d past the remaining word of degree T-d costs (-1)^(d(T-d)).
Canon canonicalize(const Quiver& q, const Word& w, int vertex_if_empty = 0);
Canon necklace_from_path(const Quiver& q, const Path& p);  // throws on open paths

using PolyField = Lin<Necklace>;

// Canonicalized single-term field; the zero class yields the empty sum.
PolyField pf_word(const Quiver& q, const Word& w, const Rat& c = 1, int vertex_if_empty = 0);
PolyField pf_of(const Quiver& q, const NCPoly& f);  // every path must be closed

// All nonzero canonical necklaces with exactly `stars` star beads and `weight`
// plain beads, in lexicographic word order. stars = weight = 0 yields one
// length-0 necklace per vertex. The parallel kernel splits the search on the
// first two beads and returns the same sequence as the serial reference.
std::vector<Necklace> enumerate_basis(const Quiver& q, int stars, int weight,
                                      int max_len = 24, bool parallel = false);

// -1 when the field is empty or mixes degrees.
int pf_stars(const Quiver& q, const PolyField& f);
int pf_weight(const Quiver& q, const PolyField& f);

std::string necklace_str(const Quiver& q, const Necklace& n);
std::string pf_str(const Quiver& q, const PolyField& f);

}  // namespace dpcoh
