#include "dpcoh/ncalg.hpp"

#include <sstream>

namespace dpcoh {

int word_degree(const Quiver& q, const Word& w) {
  int d = 0;
  for (int b : w) d += bead_degree(q, b);
  return d;
}

int word_weight(const Quiver& q, const Word& w) {
  return static_cast<int>(w.size()) - word_degree(q, w);
}

bool operator<(const Path& a, const Path& b) {
  if (a.beads.size() != b.beads.size()) return a.beads.size() < b.beads.size();
  if (a.beads != b.beads) return a.beads < b.beads;
  return a.vertex < b.vertex;
}

Path path_e(int v) { return Path{v, {}}; }

Path path_of(const Quiver& q, const Word& w) {
  if (w.empty()) throw ValidationError("path_of needs a nonempty word; use path_e");
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!composable(q, w[i], w[i + 1]))
      throw ValidationError("non-composable beads '" + bead_name(q, w[i]) + "' and '" +
                            bead_name(q, w[i + 1]) + "'");
  return Path{bead_tail(q, w[0]), w};
}

Path path_of_names(const Quiver& q, const std::vector<std::string>& bead_names) {
  Word w;
  for (const auto& n : bead_names) w.push_back(bead_from_name(q, n));
  return path_of(q, w);
}

int path_tail(const Quiver&, const Path& p) { return p.vertex; }

int path_head(const Quiver& q, const Path& p) {
  return p.beads.empty() ? p.vertex : bead_head(q, p.beads.back());
}

bool path_closed(const Quiver& q, const Path& p) {
  return path_head(q, p) == p.vertex;
}

bool path_is_plain(const Quiver& q, const Path& p) {
  for (int b : p.beads)
    if (bead_is_star(q, b)) return false;
  return true;
}

NCPoly nc_unit(int vertex) { return NCPoly(path_e(vertex), 1); }

NCPoly nc_word(const Quiver& q, const Word& w, const Rat& c) {
  if (w.empty()) throw ValidationError("nc_word needs a nonempty word; use nc_unit");
  return NCPoly(path_of(q, w), c);
}

static bool concat_ok(const Quiver& q, const Path& a, const Path& b) {
  return path_head(q, a) == b.vertex;
}

static Path concat(const Quiver&, const Path& a, const Path& b) {
  Path r = a;
  r.beads.insert(r.beads.end(), b.beads.begin(), b.beads.end());
  if (r.beads.empty()) r.vertex = a.vertex;
  return r;
}

NCPoly mul(const Quiver& q, const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [pa, ca] : a.terms)
    for (const auto& [pb, cb] : b.terms)
      if (concat_ok(q, pa, pb)) out.add(concat(q, pa, pb), ca * cb);
  return out;
}

TensorElem double_deriv(const Quiver& q, int arrow, const NCPoly& f) {
  if (arrow < 0 || arrow >= q.n_arrows())
    throw ValidationError("double_deriv: not a plain arrow of the base quiver");
  int target = bead_plain(q, arrow);
  TensorElem out;
  for (const auto& [p, c] : f.terms) {
    for (std::size_t i = 0; i < p.beads.size(); ++i) {
      if (p.beads[i] != target) continue;
      Path pre{p.vertex, Word(p.beads.begin(), p.beads.begin() + i)};
      Path suf{bead_head(q, target), Word(p.beads.begin() + i + 1, p.beads.end())};
      out.add({pre, suf}, c);
    }
  }
  return out;
}

NCPoly tensor_mu(const Quiver& q, const TensorElem& t) {
  NCPoly out;
  for (const auto& [uv, c] : t.terms)
    if (concat_ok(q, uv.first, uv.second)) out.add(concat(q, uv.first, uv.second), c);
  return out;
}

TensorElem tensor_flip(const TensorElem& t) {
  TensorElem out;
  for (const auto& [uv, c] : t.terms) out.add({uv.second, uv.first}, c);
  return out;
}

NCPoly euler_apply(const Quiver& q, int arrow, const NCPoly& f) {
  TensorElem d = double_deriv(q, arrow, f);
  Path pa{q.tail(arrow), {bead_plain(q, arrow)}};
  TensorElem inner;
  for (const auto& [uv, c] : d.terms) {
    // inner-left action of the arrow: u (x) v -> u (x) a.v
    if (concat_ok(q, pa, uv.second)) inner.add({uv.first, concat(q, pa, uv.second)}, c);
  }
  return tensor_mu(q, inner);
}

TensorElem gauge_apply(const Quiver& q, const NCPoly& f) {
  require_base(q);
  if (!q.one_vertex())
    throw ValidationError("gauge_apply is defined for one-vertex quivers only");
  TensorElem out;
  for (int a = 0; a < q.n_arrows(); ++a) {
    Path pa{q.tail(a), {bead_plain(q, a)}};
    TensorElem d = double_deriv(q, a, f);
    for (const auto& [uv, c] : d.terms) {
      out.add({concat(q, uv.first, pa), uv.second}, c);
      out.add({uv.first, concat(q, pa, uv.second)}, -c);
    }
  }
  return out;
}

std::string path_str(const Quiver& q, const Path& p) {
  if (p.beads.empty())
    return q.one_vertex() ? "1" : "e_" + q.vertex_name(p.vertex);
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < p.beads.size()) {
    std::size_t j = i;
    while (j < p.beads.size() && p.beads[j] == p.beads[i]) ++j;
    if (!first) os << '*';
    first = false;
    std::string nm = bead_name(q, p.beads[i]);
    if (!nm.empty() && nm[0] == kStarPrefix) nm = "(" + nm + ")";
    os << nm;
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::string ncpoly_str(const Quiver& q, const NCPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : f.terms) {
    Rat a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string body = path_str(q, p);
    if (a != 1 || body == "1")
      os << rat_str(a) << (body == "1" ? "" : "*" + body);
    else
      os << body;
  }
  return os.str();
}

Path mono_parse(const Quiver& q, const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty() || t == "1") {
    if (!q.one_vertex())
      throw ValidationError("monomial syntax needs a one-vertex quiver");
    return path_e(0);
  }
  Word w;
  std::size_t i = 0;
  while (i < t.size()) {
    std::size_t j = i;
    while (j < t.size() && t[j] != '*' && t[j] != '^') ++j;
    std::string name = t.substr(i, j - i);
    int a = q.arrow_index(name);
    if (a < 0) throw ValidationError("unknown arrow name '" + name + "'");
    long k = 1;
    if (j < t.size() && t[j] == '^') {
      std::size_t e = j + 1, s = e;
      while (e < t.size() && std::isdigit(static_cast<unsigned char>(t[e]))) ++e;
      if (e == s) throw ValidationError("bad exponent in '" + text + "'");
      k = std::stol(t.substr(s, e - s));
      j = e;
    }
    if (k < 0) throw ValidationError("negative exponent in '" + text + "'");
    for (long r = 0; r < k; ++r) w.push_back(bead_plain(q, a));
    if (j < t.size()) {
      if (t[j] != '*') throw ValidationError("expected '*' in '" + text + "'");
      ++j;
    }
    i = j;
  }
  if (w.empty()) {
    if (!q.one_vertex())
      throw ValidationError("monomial syntax needs a one-vertex quiver");
    return path_e(0);
  }
  return path_of(q, w);
}

}  // namespace dpcoh
