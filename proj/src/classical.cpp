#include "dpcoh/classical.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dpcoh {

CommPoly cp_mono(int i, int j, const Rat& c) {
  CommPoly p;
  p.add({i, j}, c);
  return p;
}

CommPoly cp_mul(const CommPoly& a, const CommPoly& b) {
  CommPoly out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms)
      out.add({ma.first + mb.first, ma.second + mb.second}, ca * cb);
  return out;
}

CommPoly cp_dx(const CommPoly& p) {
  CommPoly out;
  for (const auto& [m, c] : p.terms)
    if (m.first > 0) out.add({m.first - 1, m.second}, c * m.first);
  return out;
}

CommPoly cp_dy(const CommPoly& p) {
  CommPoly out;
  for (const auto& [m, c] : p.terms)
    if (m.second > 0) out.add({m.first, m.second - 1}, c * m.second);
  return out;
}

int cp_homogeneous_degree(const CommPoly& p) {
  int d = -1;
  for (const auto& [m, c] : p.terms) {
    (void)c;
    int t = m.first + m.second;
    if (d == -1)
      d = t;
    else if (d != t)
      return -2;
  }
  return d;
}

VField d0_pi(const CommPoly& psi, const CommPoly& h) {
  return VField{cp_mul(psi, cp_dy(h)), Rat(-1) * cp_mul(psi, cp_dx(h))};
}

CommPoly d1_pi(const CommPoly& psi, const VField& v) {
  CommPoly div = cp_dx(v.f) + cp_dy(v.g);
  return cp_mul(psi, div) - cp_mul(v.f, cp_dx(psi)) - cp_mul(v.g, cp_dy(psi));
}

std::vector<Rat> cp_coords(const CommPoly& p, int degree) {
  std::vector<Rat> out(degree + 1, Rat(0));
  for (const auto& [m, c] : p.terms) {
    if (m.first + m.second != degree)
      throw ValidationError("cp_coords: polynomial is not homogeneous of the degree");
    out[m.first] = c;
  }
  return out;
}

std::vector<Rat> vf_coords(const VField& v, int degree) {
  auto a = cp_coords(v.f, degree), b = cp_coords(v.g, degree);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

RatMatrix d0_matrix(const CommPoly& psi, int h_degree) {
  int m = cp_homogeneous_degree(psi);
  if (m < 0) m = 1;
  int out_deg = h_degree + m - 1;
  RatMatrix mat(2 * (out_deg + 1), h_degree + 1);
  for (int i = 0; i <= h_degree; ++i) {
    VField im = d0_pi(psi, cp_mono(i, h_degree - i));
    auto col = vf_coords(im, out_deg);
    for (int r = 0; r < mat.rows; ++r)
      if (col[r] != 0) mat.entries[{r, i}] = col[r];
  }
  return mat;
}

RatMatrix d1_matrix(const CommPoly& psi, int v_degree) {
  int m = cp_homogeneous_degree(psi);
  if (m < 0) m = 1;
  int out_deg = v_degree + m - 1;
  RatMatrix mat(out_deg + 1, 2 * (v_degree + 1));
  for (int i = 0; i <= v_degree; ++i) {
    CommPoly imf = d1_pi(psi, VField{cp_mono(i, v_degree - i), CommPoly{}});
    CommPoly img = d1_pi(psi, VField{CommPoly{}, cp_mono(i, v_degree - i)});
    auto cf = cp_coords(imf, out_deg), cg = cp_coords(img, out_deg);
    for (int r = 0; r <= out_deg; ++r) {
      if (cf[r] != 0) mat.entries[{r, i}] = cf[r];
      if (cg[r] != 0) mat.entries[{r, v_degree + 1 + i}] = cg[r];
    }
  }
  return mat;
}

ClassicalReport classical_cohomology(const CommPoly& psi, int max_degree) {
  int m = cp_homogeneous_degree(psi);
  if (m == -2) throw ValidationError("classical_cohomology: psi must be homogeneous");
  if (m == -1) m = 1;
  ClassicalReport rep;
  rep.psi_degree = m;
  for (int d = 0; d <= max_degree; ++d) {
    ClassicalRow row;
    row.degree = d;
    long rank_d0_out = rank(d0_matrix(psi, d));
    row.dim_H0 = (d + 1) - rank_d0_out;
    long ker_d1 = 2L * (d + 1) - rank(d1_matrix(psi, d));
    int din = d - m + 1;
    long im_d0_in = din >= 0 ? rank(d0_matrix(psi, din)) : 0;
    row.dim_H1 = ker_d1 - im_d0_in;
    long im_d1_in = din >= 0 ? rank(d1_matrix(psi, din)) : 0;
    row.dim_H2 = (d + 1) - im_d1_in;
    rep.rows.push_back(row);
    rep.total_H0 += row.dim_H0;
    rep.total_H1 += row.dim_H1;
    rep.total_H2 += row.dim_H2;
  }
  return rep;
}

TracedField trace_map(const Quiver& q, const PolyField& v) {
  require_base(q);
  if (!q.one_vertex() || q.n_arrows() != 2 || q.arrow_index("x") != 0 ||
      q.arrow_index("y") != 1)
    throw ValidationError("trace_map: expected the one-vertex quiver with loops x, y");
  TracedField out;
  for (const auto& [n, c] : v.terms) {
    CommPoly coeff = cp_mono(0, 0, c);
    std::vector<int> star_arrows;
    int nx = 0, ny = 0;
    for (int b : n.word) {
      if (bead_is_star(q, b))
        star_arrows.push_back(bead_arrow(q, b));
      else
        bead_arrow(q, b) == 0 ? ++nx : ++ny;
    }
    CommPoly mono = cp_mul(coeff, cp_mono(nx, ny));
    if (star_arrows.empty()) {
      out.grade0 += mono;
    } else if (star_arrows.size() == 1) {
      if (star_arrows[0] == 0)
        out.grade1.f += mono;
      else
        out.grade1.g += mono;
    } else if (star_arrows.size() == 2) {
      if (star_arrows[0] == star_arrows[1]) continue;
      // wedge in canonical-word order: (dx, dy) is +, (dy, dx) is -
      out.grade2 += star_arrows[0] == 0 ? mono : Rat(-1) * mono;
    }
    // grades above two vanish on the plane
  }
  return out;
}

// --- parsing and printing -------------------------------------------------

namespace {

struct Lexer {
  std::string s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return s[i];
  }
};

CommPoly parse_factor(Lexer& lx) {
  lx.skip();
  if (lx.eof()) throw ValidationError("polynomial syntax: unexpected end");
  char c = lx.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::size_t j = lx.i;
    while (j < lx.s.size() &&
           (std::isdigit(static_cast<unsigned char>(lx.s[j])) || lx.s[j] == '/'))
      ++j;
    Rat r = rat_parse(lx.s.substr(lx.i, j - lx.i));
    lx.i = j;
    return cp_mono(0, 0, r);
  }
  if (c == 'x' || c == 'y') {
    ++lx.i;
    long e = 1;
    lx.skip();
    if (lx.i < lx.s.size() && lx.s[lx.i] == '^') {
      ++lx.i;
      lx.skip();
      std::size_t j = lx.i;
      while (j < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[j]))) ++j;
      if (j == lx.i) throw ValidationError("polynomial syntax: bad exponent");
      e = std::stol(lx.s.substr(lx.i, j - lx.i));
      lx.i = j;
    }
    return c == 'x' ? cp_mono(static_cast<int>(e), 0) : cp_mono(0, static_cast<int>(e));
  }
  throw ValidationError(std::string("polynomial syntax: unexpected character '") + c + "'");
}

CommPoly parse_term(Lexer& lx) {
  CommPoly p = parse_factor(lx);
  while (!lx.eof() && lx.peek() == '*') {
    ++lx.i;
    p = cp_mul(p, parse_factor(lx));
  }
  return p;
}

}  // namespace

CommPoly cp_parse(const std::string& text) {
  Lexer lx{text};
  CommPoly out;
  if (lx.eof()) throw ValidationError("empty polynomial");
  bool neg = false;
  if (lx.peek() == '+' || lx.peek() == '-') {
    neg = lx.peek() == '-';
    ++lx.i;
  }
  if (lx.eof()) throw ValidationError("empty polynomial");
  out = parse_term(lx);
  if (neg) out *= Rat(-1);
  while (!lx.eof()) {
    char op = lx.peek();
    if (op != '+' && op != '-')
      throw ValidationError(std::string("polynomial syntax: expected + or -, got '") + op +
                            "'");
    ++lx.i;
    CommPoly t = parse_term(lx);
    if (op == '-') t *= Rat(-1);
    out += t;
  }
  return out;
}

std::string cp_str(const CommPoly& p) {
  if (p.is_zero()) return "0";
  // descending total degree, then descending x-degree
  std::vector<std::pair<std::pair<int, int>, Rat>> items(p.terms.begin(), p.terms.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
    if (ta != tb) return ta > tb;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : items) {
    Rat a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string body;
    if (m.first > 0) body += m.first == 1 ? "x" : "x^" + std::to_string(m.first);
    if (m.second > 0) {
      if (!body.empty()) body += "*";
      body += m.second == 1 ? "y" : "y^" + std::to_string(m.second);
    }
    if (body.empty())
      os << rat_str(a);
    else if (a == 1)
      os << body;
    else
      os << rat_str(a) << "*" << body;
  }
  return os.str();
}

}  // namespace dpcoh
