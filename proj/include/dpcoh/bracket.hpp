#pragma once
#include "dpcoh/necklace.hpp"

namespace dpcoh {

// Graded necklace bracket: pairs every star bead d/da in one argument against
// every plain bead a in the other, deletes both, splices the opened words and
// canonicalizes, with Koszul signs fixed by the segment degrees (see the sign
// rule in bracket.cpp). Bilinear; every output term has
// stars = s1 + s2 - 1 and weight = w1 + w2 - 1.
PolyField kontsevich_bracket(const Quiver& q, const PolyField& a, const PolyField& b);

// A star-degree-2, weight-homogeneous field. Candidate double Poisson tensor.
struct TensorP {
  PolyField field;
  int weight = 1;  // common weight of all terms; declared value for the zero field
};

// Validates homogeneity; throws ValidationError otherwise.
TensorP make_tensor(const Quiver& q, const PolyField& f, int weight_if_zero = 1);

PolyField differential_dP(const Quiver& q, const TensorP& P, const PolyField& v);
PolyField poisson_obstruction(const Quiver& q, const TensorP& P);  // {P,P}
bool is_poisson_tensor(const Quiver& q, const TensorP& P, PolyField* obstruction = nullptr);

// The double bracket of two base-algebra elements induced by P, evaluated by
// splitting each two-star necklace delta.Delta at its first star bead:
//   <<a,b>>_P = delta(a)' Delta delta(a)''(b) - Delta(a)' delta Delta(a)''(b)
// where decorated derivations act by (u.D.v)(c) = D(c)'v (x) u D(c)''.
TensorElem double_bracket_of_pair(const Quiver& q, const TensorP& P, const NCPoly& a,
                                  const NCPoly& b);

// Star-degree-1 fields act on the base algebra as derivations composed with
// multiplication: f d/da applied to b gives sum (da(b))' f (da(b))''.
NCPoly apply_vector_field(const Quiver& q, const PolyField& v, const NCPoly& b);

}  // namespace dpcoh
