#pragma once
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dpcoh/bracket.hpp"

namespace dpcoh::testing {

inline Quiver two_loops() { return Quiver::loops({"x", "y"}); }

inline Word wd(const Quiver& q, const std::string& names) {
  Word w;
  std::istringstream is(names);
  std::string tok;
  while (is >> tok) w.push_back(bead_from_name(q, tok));
  return w;
}

inline PolyField neck(const Quiver& q, const std::string& names, const Rat& c = 1) {
  return pf_word(q, wd(q, names), c);
}

inline NCPoly poly(const Quiver& q, const std::string& mono, const Rat& c = 1) {
  return NCPoly(mono_parse(q, mono), c);
}

// f d/da as a field: append the star bead to every monomial word of f.
inline PolyField vf(const Quiver& q, const NCPoly& f, int arrow) {
  PolyField out;
  for (const auto& [p, c] : f.terms) {
    Word w = p.beads;
    w.push_back(bead_star(q, arrow));
    out += pf_word(q, w, c);
  }
  return out;
}

// Necklace w1 . d/da . w2 . d/db extended bilinearly over the two coefficients.
inline PolyField neck2(const Quiver& q, const NCPoly& w1, int a, const NCPoly& w2, int b) {
  PolyField out;
  for (const auto& [p1, c1] : w1.terms)
    for (const auto& [p2, c2] : w2.terms) {
      Word w = p1.beads;
      w.push_back(bead_star(q, a));
      w.insert(w.end(), p2.beads.begin(), p2.beads.end());
      w.push_back(bead_star(q, b));
      out += pf_word(q, w, c1 * c2);
    }
  return out;
}

inline NCPoly left(const Quiver& q, const TensorElem& t) {
  NCPoly out;
  for (const auto& [uv, c] : t.terms) out.add(uv.first, c);
  return out;
}

// random plain word on a one-vertex quiver
inline Word random_plain_word(std::mt19937_64& rng, const Quiver& q, int len) {
  std::uniform_int_distribution<int> pick(0, q.n_arrows() - 1);
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(bead_plain(q, pick(rng)));
  return w;
}

inline NCPoly random_plain_poly(std::mt19937_64& rng, const Quiver& q, int max_deg,
                                int n_terms) {
  std::uniform_int_distribution<int> len(0, max_deg);
  std::uniform_int_distribution<int> coef(-3, 3);
  NCPoly f;
  for (int t = 0; t < n_terms; ++t) {
    int c = coef(rng);
    if (c == 0) continue;
    int l = len(rng);
    if (l == 0)
      f.add(path_e(0), c);
    else
      f.add(path_of(q, random_plain_word(rng, q, l)), c);
  }
  return f;
}

// random closed word with the given bead counts on a one-vertex quiver
inline Word random_word(std::mt19937_64& rng, const Quiver& q, int stars, int weight) {
  std::uniform_int_distribution<int> pick(0, q.n_arrows() - 1);
  std::vector<int> beads;
  for (int i = 0; i < stars; ++i) beads.push_back(bead_star(q, pick(rng)));
  for (int i = 0; i < weight; ++i) beads.push_back(bead_plain(q, pick(rng)));
  std::shuffle(beads.begin(), beads.end(), rng);
  return beads;
}

}  // namespace dpcoh::testing
