#include "dpcoh/bracket.hpp"

namespace dpcoh {

// Splice of two closed words X, Y for one matched pair: the star bead d/da at
// position i of one word against the plain bead a at position j of the other.
// Both beads are deleted and the remainders recombine as
//
//     R = Y[<j] . X[>i] . X[<i] . Y[>j]
//
// which is composable and closed because d/da reverses a. The Koszul sign is
// determined by the star counts of the four segments: with
//     A = stars(X[<i]),  B = stars(X[>i]),  C = stars(Y[<j]),
// the pair contributes
//     (-1)^(AC + AB + BC + B) * [R]   when the star bead lies in the first
//                                     argument (X = w1, Y = w2), and
//    -(-1)^(AC + AB + BC + C) * [R]   when it lies in the second
//                                     (X = w1 holds the plain bead, Y = w2 the star).
// The exponents are pinned by the oracle corpus in the tests: the four-term
// expansion of brackets of two-star necklaces, the displayed coboundary
// operators of the catalogued tensors, graded antisymmetry, the graded Jacobi
// identity and the vanishing of d_P composed with itself.
static void splice_into(const Quiver& q, PolyField& out, const Word& X, const Word& Y,
                        const Rat& coef) {
  const int nx = static_cast<int>(X.size()), ny = static_cast<int>(Y.size());
  if (nx == 0 || ny == 0) return;
  std::vector<int> px(nx + 1, 0), py(ny + 1, 0);
  for (int i = 0; i < nx; ++i) px[i + 1] = px[i] + bead_degree(q, X[i]);
  for (int j = 0; j < ny; ++j) py[j + 1] = py[j] + bead_degree(q, Y[j]);
  const int sx = px[nx];

  Word r;
  r.reserve(nx + ny - 2);
  auto emit = [&](int i, int j, int sign) {
    r.clear();
    r.insert(r.end(), Y.begin(), Y.begin() + j);
    r.insert(r.end(), X.begin() + i + 1, X.end());
    r.insert(r.end(), X.begin(), X.begin() + i);
    r.insert(r.end(), Y.begin() + j + 1, Y.end());
    int v = r.empty() ? bead_tail(q, Y[j]) : bead_tail(q, r[0]);
    Canon cn = canonicalize(q, r, v);
    if (!cn.zero) out.add(cn.neck, coef * (sign * cn.sign));
  };

  for (int i = 0; i < nx; ++i) {
    const bool xi_star = bead_is_star(q, X[i]);
    const int ax = bead_arrow(q, X[i]);
    for (int j = 0; j < ny; ++j) {
      if (bead_is_star(q, Y[j]) == xi_star) continue;
      if (bead_arrow(q, Y[j]) != ax) continue;
      const int A = px[i];
      const int B = sx - px[i + 1];
      const int C = py[j];
      const int e = A * C + A * B + B * C + (xi_star ? B : C);
      const int overall = xi_star ? 1 : -1;
      emit(i, j, (e % 2 == 0 ? 1 : -1) * overall);
    }
  }
}

PolyField kontsevich_bracket(const Quiver& q, const PolyField& a, const PolyField& b) {
  require_base(q);
  PolyField out;
  for (const auto& [na, ca] : a.terms)
    for (const auto& [nb, cb] : b.terms) splice_into(q, out, na.word, nb.word, ca * cb);
  return out;
}

TensorP make_tensor(const Quiver& q, const PolyField& f, int weight_if_zero) {
  require_base(q);
  if (f.is_zero()) return TensorP{f, weight_if_zero};
  int w = -1;
  for (const auto& [n, c] : f.terms) {
    (void)c;
    if (n.stars != 2)
      throw ValidationError("tensor must be homogeneous of star-degree 2");
    if (w == -1)
      w = n.weight;
    else if (w != n.weight)
      throw ValidationError("tensor must be weight-homogeneous");
  }
  return TensorP{f, w};
}

PolyField differential_dP(const Quiver& q, const TensorP& P, const PolyField& v) {
  return kontsevich_bracket(q, P.field, v);
}

PolyField poisson_obstruction(const Quiver& q, const TensorP& P) {
  return kontsevich_bracket(q, P.field, P.field);
}

bool is_poisson_tensor(const Quiver& q, const TensorP& P, PolyField* obstruction) {
  PolyField o = poisson_obstruction(q, P);
  if (obstruction) *obstruction = o;
  return o.is_zero();
}

// Decorated derivation u . d/da . v applied to c: split c at every plain
// occurrence of the arrow and decorate with v on the left leg, u on the right.
static TensorElem apply_decorated(const Quiver& q, const Path& u, int arrow, const Path& v,
                                  const NCPoly& c) {
  TensorElem d = double_deriv(q, arrow, c);
  TensorElem out;
  for (const auto& [st, k] : d.terms) {
    NCPoly s(st.first, 1), t(st.second, 1);
    NCPoly sv = mul(q, s, NCPoly(v, 1));
    NCPoly ut = mul(q, NCPoly(u, 1), t);
    for (const auto& [p1, c1] : sv.terms)
      for (const auto& [p2, c2] : ut.terms) out.add({p1, p2}, k * c1 * c2);
  }
  return out;
}

TensorElem double_bracket_of_pair(const Quiver& q, const TensorP& P, const NCPoly& a,
                                  const NCPoly& b) {
  require_base(q);
  TensorElem out;
  for (const auto& [n, coef] : P.field.terms) {
    if (n.stars != 2) throw ValidationError("double bracket needs a star-degree-2 tensor");
    // rotate the canonical word to start at its first star bead; the skipped
    // prefix is plain, so the rotation is sign-free
    const Word& w = n.word;
    int n1 = static_cast<int>(w.size());
    int s1 = 0;
    while (s1 < n1 && !bead_is_star(q, w[s1])) ++s1;
    Word rot(w.begin() + s1, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + s1);
    // rot = d/dp . w1 . d/dq . w2
    int p_arrow = bead_arrow(q, rot[0]);
    int s2 = 1;
    while (s2 < n1 && !bead_is_star(q, rot[s2])) ++s2;
    int q_arrow = bead_arrow(q, rot[s2]);
    Path w1{q.tail(p_arrow), Word(rot.begin() + 1, rot.begin() + s2)};
    Path w2{q.tail(q_arrow), Word(rot.begin() + s2 + 1, rot.end())};

    // delta(a)' Delta delta(a)''(b) with delta = d/dp, Delta = w1 . d/dq . w2
    TensorElem da = double_deriv(q, p_arrow, a);
    for (const auto& [uv, c1] : da.terms) {
      Path alpha = uv.first, beta = uv.second;
      NCPoly au = mul(q, NCPoly(alpha, 1), NCPoly(w1, 1));
      NCPoly bv = mul(q, NCPoly(w2, 1), NCPoly(beta, 1));
      for (const auto& [pa, ca] : au.terms)
        for (const auto& [pb, cb] : bv.terms) {
          TensorElem t = apply_decorated(q, pa, q_arrow, pb, b);
          for (const auto& [uv2, c2] : t.terms) out.add(uv2, coef * c1 * ca * cb * c2);
        }
    }
    // - Delta(a)' delta Delta(a)''(b)
    TensorElem Da = apply_decorated(q, w1, q_arrow, w2, a);
    for (const auto& [uv, c1] : Da.terms) {
      TensorElem t = apply_decorated(q, uv.first, p_arrow, uv.second, b);
      for (const auto& [uv2, c2] : t.terms) out.add(uv2, -coef * c1 * c2);
    }
  }
  return out;
}

NCPoly apply_vector_field(const Quiver& q, const PolyField& v, const NCPoly& b) {
  require_base(q);
  NCPoly out;
  for (const auto& [n, coef] : v.terms) {
    if (n.stars != 1)
      throw ValidationError("apply_vector_field needs a star-degree-1 field");
    const Word& w = n.word;
    int len = static_cast<int>(w.size());
    int s = 0;
    while (s < len && !bead_is_star(q, w[s])) ++s;
    int arrow = bead_arrow(q, w[s]);
    Word rest(w.begin() + s + 1, w.end());
    rest.insert(rest.end(), w.begin(), w.begin() + s);
    Path f = rest.empty() ? path_e(q.tail(arrow)) : path_of(q, rest);
    TensorElem t = apply_decorated(q, path_e(q.head(arrow)), arrow, f, b);
    NCPoly m = tensor_mu(q, t);
    for (const auto& [p, c] : m.terms) out.add(p, coef * c);
  }
  return out;
}

}  // namespace dpcoh
