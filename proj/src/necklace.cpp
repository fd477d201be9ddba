#include "dpcoh/necklace.hpp"

#include <sstream>

namespace dpcoh {

bool operator<(const Necklace& a, const Necklace& b) {
  if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
  if (a.word != b.word) return a.word < b.word;
  return a.vertex < b.vertex;
}

// lexicographic comparison of rotations r1 and r2 of w
static int cmp_rotations(const Word& w, int r1, int r2) {
  int n = static_cast<int>(w.size());
  for (int t = 0; t < n; ++t) {
    int a = w[(r1 + t) % n], b = w[(r2 + t) % n];
    if (a != b) return a < b ? -1 : 1;
  }
  return 0;
}

Canon canonicalize(const Quiver& q, const Word& w, int vertex_if_empty) {
  require_base(q);
  Canon out;
  if (w.empty()) {
    out.neck = Necklace{{}, vertex_if_empty, 0, 0};
    return out;
  }
  Path p = path_of(q, w);  // validates composability
  if (!path_closed(q, p)) throw ValidationError("canonicalize: word is not closed");

  int n = static_cast<int>(w.size());
  int total = word_degree(q, w);
  // prefix[r] = degree of the first r beads; rotation by r carries the Koszul
  // sign (-1)^(prefix[r] * (total - prefix[r])).
  std::vector<int> prefix(n + 1, 0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + bead_degree(q, w[i]);
  auto rot_sign = [&](int r) {
    return (prefix[r] * (total - prefix[r])) % 2 == 0 ? 1 : -1;
  };

  int best = 0;
  for (int r = 1; r < n; ++r)
    if (cmp_rotations(w, r, best) < 0) best = r;

  int sign_best = rot_sign(best);
  for (int r = 0; r < n; ++r) {
    if (r != best && cmp_rotations(w, r, best) == 0 && rot_sign(r) != sign_best) {
      out.zero = true;
      return out;
    }
  }

  Word cw(n);
  for (int t = 0; t < n; ++t) cw[t] = w[(best + t) % n];
  out.sign = sign_best;
  out.neck = Necklace{cw, bead_tail(q, cw[0]), total, n - total};
  return out;
}

Canon necklace_from_path(const Quiver& q, const Path& p) {
  if (!path_closed(q, p)) throw ValidationError("necklace_from_path: open path");
  return canonicalize(q, p.beads, p.vertex);
}

PolyField pf_word(const Quiver& q, const Word& w, const Rat& c, int vertex_if_empty) {
  PolyField f;
  Canon cn = canonicalize(q, w, vertex_if_empty);
  if (!cn.zero) f.add(cn.neck, cn.sign * c);
  return f;
}

PolyField pf_of(const Quiver& q, const NCPoly& f) {
  PolyField out;
  for (const auto& [p, c] : f.terms) {
    Canon cn = necklace_from_path(q, p);
    if (!cn.zero) out.add(cn.neck, cn.sign * c);
  }
  return out;
}

// w is canonical iff no rotation is lexicographically smaller; the class is
// zero iff some rotation reproduces w with sign -1.
static bool canonical_nonzero(const Word& w, const std::vector<int>& prefix, int total) {
  int n = static_cast<int>(w.size());
  for (int r = 1; r < n; ++r) {
    int c = cmp_rotations(w, r, 0);
    if (c < 0) return false;
    if (c == 0 && (prefix[r] * (total - prefix[r])) % 2 != 0) return false;
  }
  return true;
}

namespace {

// DFS in bead order from position `pos`; beads smaller than w[0] cannot
// appear in a canonical word.
void extend(const Quiver& q, int stars, int weight, Word& w, std::vector<int>& prefix,
            int pos, int used_stars, int head, std::vector<Necklace>& out) {
  const int len = stars + weight;
  if (pos == len) {
    if (head != bead_tail(q, w[0])) return;
    if (canonical_nonzero(w, prefix, stars))
      out.push_back(Necklace{w, bead_tail(q, w[0]), stars, weight});
    return;
  }
  const int nb = n_beads(q);
  int lo = pos == 0 ? 0 : w[0];
  for (int b = lo; b < nb; ++b) {
    int d = bead_degree(q, b);
    int remaining = len - pos - 1;
    int s = used_stars + d;
    if (s > stars || s + remaining < stars) continue;
    if (pos > 0 && bead_tail(q, b) != head) continue;
    w[pos] = b;
    prefix[pos + 1] = prefix[pos] + d;
    extend(q, stars, weight, w, prefix, pos + 1, s, bead_head(q, b), out);
  }
}

}  // namespace

std::vector<Necklace> enumerate_basis(const Quiver& q, int stars, int weight, int max_len,
                                      bool parallel) {
  require_base(q);
  if (stars < 0 || weight < 0) throw ValidationError("enumerate_basis: negative bidegree");
  int len = stars + weight;
  if (len > max_len)
    throw CapExceeded("enumerate_basis: necklace length " + std::to_string(len) +
                      " exceeds cap " + std::to_string(max_len));
  std::vector<Necklace> out;
  if (len == 0) {
    for (int v = 0; v < q.n_vertices(); ++v) out.push_back(Necklace{{}, v, 0, 0});
    return out;
  }
  const int nb = n_beads(q);

  if (!parallel || len < 3) {
    Word w(len);
    std::vector<int> prefix(len + 1, 0);
    extend(q, stars, weight, w, prefix, 0, 0, -1, out);
    return out;
  }

  // split the search tree on the first two beads; the subtree roots are
  // visited in lexicographic order, so concatenation reproduces the serial
  // sequence exactly
  std::vector<std::pair<int, int>> roots;
  for (int b0 = 0; b0 < nb; ++b0)
    for (int b1 = b0; b1 < nb; ++b1) {
      int s = bead_degree(q, b0) + bead_degree(q, b1);
      if (s > stars || s + len - 2 < stars) continue;
      if (!composable(q, b0, b1)) continue;
      roots.emplace_back(b0, b1);
    }
  std::vector<std::vector<Necklace>> parts(roots.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < static_cast<int>(roots.size()); ++i) {
    auto [b0, b1] = roots[i];
    Word w(len);
    std::vector<int> prefix(len + 1, 0);
    w[0] = b0;
    prefix[1] = bead_degree(q, b0);
    w[1] = b1;
    prefix[2] = prefix[1] + bead_degree(q, b1);
    extend(q, stars, weight, w, prefix, 2, prefix[2], bead_head(q, b1), parts[i]);
  }
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

int pf_stars(const Quiver&, const PolyField& f) {
  int s = -1;
  for (const auto& [n, c] : f.terms) {
    (void)c;
    if (s == -1)
      s = n.stars;
    else if (s != n.stars)
      return -1;
  }
  return s;
}

int pf_weight(const Quiver&, const PolyField& f) {
  int w = -1;
  for (const auto& [n, c] : f.terms) {
    (void)c;
    if (w == -1)
      w = n.weight;
    else if (w != n.weight)
      return -1;
  }
  return w;
}

std::string necklace_str(const Quiver& q, const Necklace& n) {
  return "[" + path_str(q, Path{n.vertex, n.word}) + "]";
}

std::string pf_str(const Quiver& q, const PolyField& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : f.terms) {
    Rat a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1)
      os << rat_str(a) << "*" << necklace_str(q, n);
    else
      os << necklace_str(q, n);
  }
  return os.str();
}

}  // namespace dpcoh
