#include "dpcoh/finalg.hpp"

#include <random>

namespace dpcoh {

StructureConstants StructureConstants::make(int n, std::vector<std::string> names) {
  StructureConstants sc;
  sc.n = n;
  sc.c.assign(static_cast<std::size_t>(n) * n * n, Rat(0));
  if (names.empty()) {
    static const char* abc[] = {"x", "y", "z"};
    if (n <= 3)
      for (int i = 0; i < n; ++i) names.push_back(abc[i]);
    else
      for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  if (static_cast<int>(names.size()) != n)
    throw ValidationError("structure constants: name count differs from dimension");
  sc.names = std::move(names);
  return sc;
}

bool is_associative(const StructureConstants& sc, std::array<int, 4>* witness) {
  const int n = sc.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p) {
          Rat lhs = 0, rhs = 0;
          for (int m = 0; m < n; ++m) {
            lhs += sc.at(i, j, m) * sc.at(m, k, p);
            rhs += sc.at(j, k, m) * sc.at(i, m, p);
          }
          if (lhs != rhs) {
            if (witness) *witness = {i, j, k, p};
            return false;
          }
        }
  return true;
}

Quiver loop_quiver(const StructureConstants& c) { return Quiver::loops(c.names); }

TensorP tensor_from_constants(const Quiver& q, const StructureConstants& sc) {
  require_base(q);
  if (!q.one_vertex() || q.n_arrows() != sc.n)
    throw ValidationError("tensor_from_constants: quiver must have one vertex and n loops");
  PolyField f;
  for (int i = 0; i < sc.n; ++i)
    for (int j = 0; j < sc.n; ++j)
      for (int k = 0; k < sc.n; ++k) {
        const Rat& v = sc.at(i, j, k);
        if (v == 0) continue;
        Word w = {bead_plain(q, k), bead_star(q, i), bead_star(q, j)};
        f += pf_word(q, w, v);
      }
  return make_tensor(q, f, 1);
}

StructureConstants constants_from_tensor(const Quiver& q, const TensorP& P) {
  require_base(q);
  if (!q.one_vertex())
    throw ValidationError("constants_from_tensor: one-vertex quiver required");
  std::vector<std::string> names;
  for (int a = 0; a < q.n_arrows(); ++a) names.push_back(q.arrow_name(a));
  StructureConstants sc = StructureConstants::make(q.n_arrows(), names);
  for (const auto& [n, v] : P.field.terms) {
    if (n.stars != 2 || n.weight != 1)
      throw ValidationError("constants_from_tensor: tensor is not linear");
    // canonical word of a linear necklace is [x_k, *x_i, *x_j]
    int k = bead_arrow(q, n.word[0]);
    int i = bead_arrow(q, n.word[1]);
    int j = bead_arrow(q, n.word[2]);
    sc.at(i, j, k) = v;
  }
  return sc;
}

std::vector<CatalogueEntry> catalogue_2dim() {
  std::vector<CatalogueEntry> out;
  auto put = [&](const std::string& name, auto fill) {
    StructureConstants sc = StructureConstants::make(2);
    fill(sc);
    out.push_back({name, std::move(sc)});
  };
  const int X = 0, Y = 1;
  put("CxC", [&](StructureConstants& s) {
    s.at(X, X, X) = 1;  // x^2 = x
    s.at(Y, Y, Y) = 1;  // y^2 = y
  });
  put("CxCeps2", [&](StructureConstants& s) {
    s.at(X, X, X) = 1;  // x^2 = x
  });
  put("CplusCeps2", [&](StructureConstants& s) {
    s.at(X, X, X) = 1;  // x unital on both generators
    s.at(X, Y, Y) = 1;
    s.at(Y, X, Y) = 1;
  });
  put("CepsPlusCeps2", [&](StructureConstants& s) {
    s.at(X, X, Y) = 1;  // x^2 = y, all higher products vanish
  });
  put("B2_1", [&](StructureConstants& s) {
    s.at(X, X, X) = 1;  // x^2 = x
    s.at(X, Y, Y) = 1;  // xy = y
  });
  put("B2_2", [&](StructureConstants& s) {
    s.at(X, Y, X) = 1;  // xy = x
    s.at(Y, Y, Y) = 1;  // y^2 = y
  });
  put("Ceps2PlusCeps2", [&](StructureConstants&) {});
  return out;
}

std::vector<std::vector<int>> hochschild_basis(int n, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(degree + 1, 0);
  while (true) {
    out.push_back(t);
    int pos = degree;
    while (pos >= 0 && t[pos] == n - 1) t[pos--] = 0;
    if (pos < 0) break;
    ++t[pos];
  }
  return out;
}

HTensor hochschild_d(const StructureConstants& sc, const HTensor& x, int degree) {
  const int n = sc.n;
  HTensor out;
  for (const auto& [t, coef] : x.terms) {
    if (static_cast<int>(t.size()) != degree + 1)
      throw ValidationError("hochschild_d: tuple length does not match degree");
    const int ell = t.back();
    // first-slot insertion
    for (int s = 0; s < n; ++s)
      for (int u = 0; u < n; ++u) {
        const Rat& v = sc.at(s, ell, u);
        if (v == 0) continue;
        std::vector<int> nt;
        nt.push_back(s);
        nt.insert(nt.end(), t.begin(), t.end() - 1);
        nt.push_back(u);
        out.add(nt, coef * v);
      }
    // interior contractions, slot r = 1..degree, sign (-1)^r
    for (int r = 1; r <= degree; ++r) {
      int kr = t[r - 1];
      for (int s = 0; s < n; ++s)
        for (int u = 0; u < n; ++u) {
          const Rat& v = sc.at(s, u, kr);
          if (v == 0) continue;
          std::vector<int> nt(t.begin(), t.begin() + (r - 1));
          nt.push_back(s);
          nt.push_back(u);
          nt.insert(nt.end(), t.begin() + r, t.end());
          out.add(nt, coef * v * (r % 2 == 0 ? 1 : -1));
        }
    }
    // last-slot insertion, sign (-1)^(degree+1)
    for (int s = 0; s < n; ++s)
      for (int u = 0; u < n; ++u) {
        const Rat& v = sc.at(ell, s, u);
        if (v == 0) continue;
        std::vector<int> nt(t.begin(), t.end() - 1);
        nt.push_back(s);
        nt.push_back(u);
        out.add(nt, coef * v * ((degree + 1) % 2 == 0 ? 1 : -1));
      }
  }
  return out;
}

RatMatrix hochschild_matrix(const StructureConstants& sc, int degree) {
  auto src = hochschild_basis(sc.n, degree);
  auto tgt = hochschild_basis(sc.n, degree + 1);
  std::map<std::vector<int>, int> idx;
  for (int i = 0; i < static_cast<int>(tgt.size()); ++i) idx[tgt[i]] = i;
  RatMatrix m(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
  for (int col = 0; col < static_cast<int>(src.size()); ++col) {
    HTensor image = hochschild_d(sc, HTensor(src[col], 1), degree);
    for (const auto& [t, v] : image.terms) m.add(idx.at(t), col, v);
  }
  return m;
}

HochschildReport hochschild_dims(const StructureConstants& sc, int max_degree,
                                 const Caps& caps) {
  HochschildReport rep;
  rep.max_degree = max_degree;
  double chain_top = 1;
  for (int i = 0; i <= max_degree + 1; ++i) chain_top *= sc.n;
  if (chain_top > static_cast<double>(caps.max_chain))
    throw CapExceeded("hochschild chain dimension exceeds cap");
  std::vector<long> rk(max_degree + 1, 0);
  for (int i = 0; i <= max_degree; ++i) {
    long dim = 1;
    for (int t = 0; t <= i; ++t) dim *= sc.n;
    rep.dim_chain.push_back(dim);
    rk[i] = rank(hochschild_matrix(sc, i));
    rep.rank_d.push_back(rk[i]);
    long prev = i == 0 ? 0 : rk[i - 1];
    rep.dim_HH.push_back(dim - rk[i] - prev);
  }
  return rep;
}

PolyField phi_map(const Quiver& q, const std::vector<int>& tuple) {
  Word w;
  for (std::size_t i = 0; i + 1 < tuple.size(); ++i) w.push_back(bead_star(q, tuple[i]));
  w.push_back(bead_plain(q, tuple.back()));
  return pf_word(q, w);
}

HTensor phi_field(const Quiver& q, const PolyField& f) {
  HTensor out;
  for (const auto& [n, c] : f.terms) {
    if (n.weight != 1) throw ValidationError("phi_field: field is not of weight 1");
    // rotate the canonical word so the unique plain bead comes last; the
    // rotation moves only the (all-star) prefix past one plain bead, sign 1
    const Word& w = n.word;
    int pos = 0;
    while (bead_is_star(q, w[pos])) ++pos;
    std::vector<int> t;
    for (int i = pos + 1; i < static_cast<int>(w.size()); ++i)
      t.push_back(bead_arrow(q, w[i]));
    for (int i = 0; i < pos; ++i) t.push_back(bead_arrow(q, w[i]));
    t.push_back(bead_arrow(q, w[pos]));
    out.add(t, c);
  }
  return out;
}

std::vector<Weight1Row> compare_weight1(const StructureConstants& sc, int max_degree,
                                        const Caps& caps) {
  Quiver q = loop_quiver(sc);
  TensorP P = tensor_from_constants(q, sc);
  Caps local = caps;
  local.max_stars = std::max(local.max_stars, max_degree + 1);
  ComplexDriver driver(q, P, local);
  HochschildReport hh = hochschild_dims(sc, max_degree, caps);

  std::vector<Weight1Row> rows;
  for (int i = 0; i <= max_degree; ++i) {
    Weight1Row row;
    row.degree = i;
    row.dim_HH = hh.dim_HH[i];
    row.dim_HP = driver.bidegree(i, 1, false).dim_H;
    row.dims_match = row.dim_HH == row.dim_HP;
    row.intertwines = true;
    for (const auto& t : hochschild_basis(sc.n, i)) {
      PolyField lhs = kontsevich_bracket(q, P.field, phi_map(q, t));
      HTensor dt = hochschild_d(sc, HTensor(t, 1), i);
      PolyField rhs;
      for (const auto& [nt, v] : dt.terms) rhs += v * phi_map(q, nt);
      if (!(lhs == rhs)) {
        row.intertwines = false;
        break;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

// left inner action multiplies the last tensor factor, right inner action the first
static HTensor module_d0(const StructureConstants& sc, const HTensor& m) {
  const int n = sc.n;
  HTensor out;
  for (const auto& [t, coef] : m.terms) {
    for (int p = 0; p < n; ++p) {
      for (int u = 0; u < n; ++u) {
        const Rat& lv = sc.at(p, t.back(), u);
        if (lv != 0) {
          std::vector<int> nt;
          nt.push_back(p);
          nt.insert(nt.end(), t.begin(), t.end() - 1);
          nt.push_back(u);
          out.add(nt, coef * lv);
        }
        const Rat& rv = sc.at(t.front(), p, u);
        if (rv != 0) {
          std::vector<int> nt;
          nt.push_back(p);
          nt.push_back(u);
          nt.insert(nt.end(), t.begin() + 1, t.end());
          out.add(nt, -coef * rv);
        }
      }
    }
  }
  return out;
}

bool casimir_embedding_check(const StructureConstants& sc, int weight_k, int samples,
                             unsigned long seed) {
  if (weight_k < 1) throw ValidationError("casimir_embedding_check: weight must be >= 1");
  Quiver q = loop_quiver(sc);
  TensorP P = tensor_from_constants(q, sc);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, sc.n - 1);

  for (int trial = 0; trial < samples; ++trial) {
    std::vector<int> mono(weight_k);
    for (auto& m : mono) m = pick(rng);

    // phi0: cyclic symmetrization of the monomial into A^(x k)
    HTensor phi0;
    for (int s = 0; s < weight_k; ++s) {
      std::vector<int> shifted;
      for (int t = 0; t < weight_k; ++t) shifted.push_back(mono[(s + t) % weight_k]);
      phi0.add(shifted, 1);
    }
    HTensor lhs = module_d0(sc, phi0);

    Word w;
    for (int m : mono) w.push_back(bead_plain(q, m));
    PolyField dP = kontsevich_bracket(q, P.field, pf_word(q, w));
    // phi1 on star-1 weight-k fields: rotate the star bead to the front
    HTensor rhs;
    for (const auto& [n, c] : dP.terms) {
      const Word& nw = n.word;
      int pos = 0;
      while (!bead_is_star(q, nw[pos])) ++pos;
      std::vector<int> t;
      t.push_back(bead_arrow(q, nw[pos]));
      for (int i = pos + 1; i < static_cast<int>(nw.size()); ++i)
        t.push_back(bead_arrow(q, nw[i]));
      for (int i = 0; i < pos; ++i) t.push_back(bead_arrow(q, nw[i]));
      rhs.add(t, c);
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

StructureConstants random_constants(int n, std::mt19937_64& rng) {
  StructureConstants sc = StructureConstants::make(n);
  std::uniform_int_distribution<int> num(-2, 2);
  std::uniform_int_distribution<int> den(1, 2);
  std::uniform_int_distribution<int> sparse(0, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (sparse(rng)) continue;
        // draws sequenced; two calls in one expression would leave the
        // evaluation order to the compiler
        int p = num(rng);
        int d = den(rng);
        Rat r(p, d);
        r.canonicalize();
        sc.at(i, j, k) = r;
      }
  return sc;
}

}  // namespace dpcoh
