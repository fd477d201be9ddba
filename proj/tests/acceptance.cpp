// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <cstdio>
#include <sstream>
#include <random>
#include <string>
#include <vector>

#include "dpcoh/classical.hpp"
#include "dpcoh/finalg.hpp"

using namespace dpcoh;

static int failures = 0;

static void report(int num, const std::string& name, bool ok, const std::string& detail) {
  std::printf("criterion %2d [%-26s] %s%s%s\n", num, name.c_str(), ok ? "PASS" : "FAIL",
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

namespace {

Quiver q2 = Quiver::loops({"x", "y"});

PolyField neck(const std::string& names, const Rat& c = 1) {
  Word w;
  std::string tok;
  std::istringstream is(names);
  while (is >> tok) w.push_back(bead_from_name(q2, tok));
  return pf_word(q2, w, c);
}

PolyField vfield(const NCPoly& f, int arrow) {
  PolyField out;
  for (const auto& [p, c] : f.terms) {
    Word w = p.beads;
    w.push_back(bead_star(q2, arrow));
    out += pf_word(q2, w, c);
  }
  return out;
}

NCPoly mono(const std::string& text, const Rat& c = 1) {
  return NCPoly(mono_parse(q2, text), c);
}

std::vector<TensorP> accepted_tensors() {
  std::vector<TensorP> out;
  for (auto& e : catalogue_2dim()) out.push_back(tensor_from_constants(q2, e.sc));
  out.push_back(make_tensor(q2, neck("x *x x *y")));
  out.push_back(make_tensor(q2, neck("y *x y *y")));
  return out;
}

bool dims_are(ComplexDriver& d, int k, const std::vector<long>& want, std::string& msg) {
  for (int w = 0; w < static_cast<int>(want.size()); ++w) {
    long got = d.bidegree(k, w, false).dim_H;
    if (got != want[w]) {
      msg += " H^" + std::to_string(k) + " w=" + std::to_string(w) + " got " +
             std::to_string(got) + " want " + std::to_string(want[w]) + ";";
      return false;
    }
  }
  return true;
}

// span(reps) + span(coboundaries) == span(expected) + span(coboundaries), with
// both sides of the stated dimension
bool reps_match(ComplexDriver& d, int k, int w, const std::vector<PolyField>& reps,
                const std::vector<PolyField>& expected) {
  long rows = d.chain_dim(k, w);
  RatMatrix cob(static_cast<int>(rows), 0);
  if (k >= 1 && w - d.tensor().weight + 1 >= 0)
    cob = d.boundary_matrix(k - 1, w - d.tensor().weight + 1);
  auto cols_with = [&](const std::vector<PolyField>& fs) {
    RatMatrix m = cob;
    for (const auto& f : fs) m = hstack(m, from_columns(m.rows, {d.coords(k, w, f)}));
    return m;
  };
  RatMatrix span_reps = cols_with(reps), span_expected = cols_with(expected);
  for (const auto& f : reps)
    if (!in_span(d.coords(k, w, f), span_expected)) return false;
  for (const auto& f : expected)
    if (!in_span(d.coords(k, w, f), span_reps)) return false;
  return true;
}

void criterion1() {
  std::string msg;
  bool ok = true;
  for (auto& e : catalogue_2dim()) {
    TensorP P = tensor_from_constants(q2, e.sc);
    if (!is_poisson_tensor(q2, P)) {
      ok = false;
      msg += e.name + " failed;";
    }
  }
  PolyField obstruction;
  if (is_poisson_tensor(q2, make_tensor(q2, neck("x *x *y")), &obstruction) ||
      obstruction.is_zero()) {
    ok = false;
    msg += " broken tensor not rejected;";
  }
  report(1, "catalogue-validity", ok, msg.empty() ? "7 tensors + 1 rejection" : msg);
}

void criterion2() {
  std::mt19937_64 rng(0);
  bool ok = true;
  int assoc = 0;
  for (int n : {2, 3}) {
    int trials = n == 2 ? 50 : 20;
    for (int t = 0; t < trials; ++t) {
      StructureConstants sc = random_constants(n, rng);
      Quiver q = loop_quiver(sc);
      bool a = is_associative(sc);
      bool p = is_poisson_tensor(q, tensor_from_constants(q, sc));
      if (a) ++assoc;
      if (a != p) ok = false;
    }
  }
  report(2, "associativity-equivalence", ok,
         "70 trials, " + std::to_string(assoc) + " associative");
}

void criterion3() {
  ComplexDriver d(q2, make_tensor(q2, neck("x *x *x")));
  std::string msg;
  bool ok = dims_are(d, 0, {1, 2, 2, 2, 2, 2, 2}, msg);
  for (int w = 0; w <= 6 && ok; ++w) {
    auto r = d.bidegree(0, w, true);
    std::vector<PolyField> expected;
    if (w == 0) {
      expected.push_back(PolyField(Necklace{{}, 0, 0, 0}, 1));
    } else {
      Word wx(w, bead_plain(q2, 0)), wy(w, bead_plain(q2, 1));
      expected.push_back(pf_word(q2, wx));
      expected.push_back(pf_word(q2, wy));
    }
    if (!reps_match(d, 0, w, r.representatives, expected)) {
      ok = false;
      msg += " reps differ at w=" + std::to_string(w);
    }
  }
  report(3, "H0-of-xdxdx", ok, msg.empty() ? "dims 1,2,2,2,2,2,2 + power classes" : msg);
}

void criterion4() {
  ComplexDriver d(q2, make_tensor(q2, neck("x *x *x")));
  std::string msg;
  bool ok = dims_are(d, 1, {2, 1, 1, 1, 1, 1}, msg);
  report(4, "H1-of-xdxdx", ok, msg.empty() ? "dims 2,1,1,1,1,1" : msg);
}

void criterion5() {
  ComplexDriver d(q2, make_tensor(q2, neck("x *x *x") + neck("y *y *y")));
  std::string msg;
  bool ok = dims_are(d, 0, {1, 2, 2, 2, 2, 2, 2}, msg) &&
            dims_are(d, 1, {2, 0, 0, 0, 0, 0}, msg);
  report(5, "semisimple-linear-tensor", ok, msg.empty() ? "H0 as #3, H1 = 2,0,..." : msg);
}

void criterion6() {
  std::string msg;
  ComplexDriver d1(q2, make_tensor(q2, neck("x *x *x") + neck("y *x *y")));
  bool ok = dims_are(d1, 0, {1, 0, 0, 0, 0, 0, 0}, msg) &&
            dims_are(d1, 1, {1, 0, 0, 0, 0, 0}, msg);
  if (ok) {
    auto r = d1.bidegree(1, 0, true);
    ok = reps_match(d1, 1, 0, r.representatives, {neck("*x")});
    if (!ok) msg += " B2_1 class is not d/dx;";
  }
  ComplexDriver d2(q2, make_tensor(q2, neck("x *x *y") + neck("y *y *y")));
  ok = ok && dims_are(d2, 0, {1, 0, 0, 0, 0, 0, 0}, msg) &&
       dims_are(d2, 1, {1, 0, 0, 0, 0, 0}, msg);
  if (ok) {
    auto r = d2.bidegree(1, 0, true);
    ok = reps_match(d2, 1, 0, r.representatives, {neck("*y")});
    if (!ok) msg += " B2_2 class is not d/dy;";
  }
  report(6, "B2-tensors", ok, msg.empty() ? "H0 = C, H1 = C d/dx resp. C d/dy" : msg);
}

void criterion7() {
  ComplexDriver d(q2, make_tensor(q2, neck("x *x x *y")));
  std::string msg;
  bool ok = dims_are(d, 0, {1, 0, 0, 0, 0, 0, 0}, msg) &&
            dims_are(d, 1, {1, 2, 1, 0, 0, 0}, msg);
  if (ok) {
    std::vector<std::vector<PolyField>> expected = {
        {neck("*y")},
        {vfield(mono("x"), 0) + vfield(mono("y"), 1), vfield(mono("x"), 1)},
        {vfield(mono("x*y") + mono("y*x"), 0) + vfield(mono("y^2"), 1)}};
    for (int w = 0; w <= 2; ++w) {
      auto r = d.bidegree(1, w, true);
      if (!reps_match(d, 1, w, r.representatives, expected[w])) {
        ok = false;
        msg += " reps differ at w=" + std::to_string(w) + ";";
      }
    }
  }
  report(7, "quadratic-tensor", ok,
         msg.empty() ? "H1 dims 1,2,1,0,0,0 (total 4) + displayed basis" : msg);
}

void criterion8() {
  bool ok = true;
  std::string msg;
  for (auto& e : catalogue_2dim()) {
    for (const auto& row : compare_weight1(e.sc, 3)) {
      if (!row.dims_match || !row.intertwines) {
        ok = false;
        msg += e.name + " i=" + std::to_string(row.degree) + ";";
      }
    }
  }
  report(8, "hochschild-comparison", ok,
         msg.empty() ? "7 algebras, i = 0..3, dims + intertwining" : msg);
}

void criterion9() {
  std::string msg;
  ClassicalReport rx = classical_cohomology(cp_parse("x^2"), 6);
  bool ok = rx.total_H0 == 1;
  const long want[7] = {1, 2, 1, 1, 1, 1, 1};
  for (int dg = 0; dg <= 6; ++dg)
    if (rx.rows[dg].dim_H1 != want[dg]) {
      ok = false;
      msg += " x^2 H1 deg " + std::to_string(dg);
    }
  ClassicalReport ry = classical_cohomology(cp_parse("y"), 6);
  if (ry.total_H0 != 1 || ry.total_H1 != 1 || ry.total_H2 != 0) {
    ok = false;
    msg += " y totals";
  }
  report(9, "classical-plane", ok, msg.empty() ? "psi = x^2 and psi = y tables" : msg);
}

void criterion10() {
  ComplexDriver d(q2, make_tensor(q2, neck("x *x x *y")));
  CommPoly psi = cp_parse("x^2");
  bool ok = true;
  std::string msg;
  std::vector<std::vector<VField>> stated = {
      {{cp_parse("0"), cp_parse("1")}},
      {{cp_parse("x"), cp_parse("y")}, {cp_parse("0"), cp_parse("x")}},
      {{cp_parse("2*x*y"), cp_parse("y^2")}}};
  for (int w = 0; w <= 2; ++w) {
    auto r = d.bidegree(1, w, true);
    RatMatrix cob(2 * (w + 1), 0);
    if (w >= 1) cob = d0_matrix(psi, w - 1);
    auto with = [&](const std::vector<std::vector<Rat>>& extra) {
      RatMatrix m = cob;
      for (const auto& v : extra) m = hstack(m, from_columns(m.rows, {v}));
      return m;
    };
    std::vector<std::vector<Rat>> traced, want;
    for (const auto& rep : r.representatives)
      traced.push_back(vf_coords(trace_map(q2, rep).grade1, w));
    for (const auto& v : stated[w]) want.push_back(vf_coords(v, w));
    RatMatrix span_t = with(traced), span_w = with(want);
    for (const auto& v : traced)
      if (!in_span(v, span_w)) ok = false;
    for (const auto& v : want)
      if (!in_span(v, span_t)) ok = false;
    if (!ok) {
      msg += " degree " + std::to_string(w) + ";";
      break;
    }
  }
  // non-surjectivity: (3y^2 x, y^3) escapes the traced image in degree 3
  VField probe{cp_parse("3*x*y^2"), cp_parse("y^3")};
  if (in_span(vf_coords(probe, 3), d0_matrix(psi, 2))) {
    ok = false;
    msg += " probe class unexpectedly hit;";
  }
  report(10, "trace-corollary", ok,
         msg.empty() ? "4 classes matched, probe class certified outside" : msg);
}

void criterion11() {
  std::mt19937_64 rng(0);
  bool ok = true;
  std::string msg;
  std::uniform_int_distribution<int> arrow(0, 1);

  auto random_word = [&](int stars, int weight) {
    std::vector<int> beads;
    for (int i = 0; i < stars; ++i) beads.push_back(bead_star(q2, arrow(rng)));
    for (int i = 0; i < weight; ++i) beads.push_back(bead_plain(q2, arrow(rng)));
    std::shuffle(beads.begin(), beads.end(), rng);
    return beads;
  };

  // graded antisymmetry and Jacobi
  int done = 0;
  while (done < 60 && ok) {
    int s1 = static_cast<int>(rng() % 3), s2 = static_cast<int>(rng() % 3),
        s3 = static_cast<int>(rng() % 3);
    int w1 = static_cast<int>(rng() % 3), w2 = static_cast<int>(rng() % 3),
        w3 = static_cast<int>(rng() % 3);
    if (w1 + w2 + w3 > 4) continue;
    if (s1 + w1 == 0 || s2 + w2 == 0 || s3 + w3 == 0) continue;
    PolyField a = pf_word(q2, random_word(s1, w1));
    PolyField b = pf_word(q2, random_word(s2, w2));
    PolyField c = pf_word(q2, random_word(s3, w3));
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    int sign = ((s1 - 1) * (s2 - 1)) % 2 == 0 ? 1 : -1;
    if (!(kontsevich_bracket(q2, a, b) ==
          Rat(-sign) * kontsevich_bracket(q2, b, a))) {
      ok = false;
      msg += " antisymmetry;";
    }
    auto sg = [](int e) { return e % 2 == 0 ? Rat(1) : Rat(-1); };
    int t1 = s1 - 1, t2 = s2 - 1, t3 = s3 - 1;
    PolyField jac =
        sg(t1 * t3) * kontsevich_bracket(q2, a, kontsevich_bracket(q2, b, c)) +
        sg(t2 * t1) * kontsevich_bracket(q2, b, kontsevich_bracket(q2, c, a)) +
        sg(t3 * t2) * kontsevich_bracket(q2, c, kontsevich_bracket(q2, a, b));
    if (!jac.is_zero()) {
      ok = false;
      msg += " jacobi;";
    }
    ++done;
  }

  // d_P squared vanishes for every accepted tensor, k <= 2, w <= 6
  Caps big;
  big.max_chain = 600000;
  for (const auto& P : accepted_tensors()) {
    if (!ok) break;
    ComplexDriver d(q2, P, big);
    for (int k = 0; k <= 2 && ok; ++k)
      for (int w = 0; w <= 6 && ok; ++w) {
        const RatMatrix& first = d.boundary_matrix(k, w);
        const RatMatrix& second = d.boundary_matrix(k + 1, w + P.weight - 1);
        if (!is_zero(matmul(second, first))) {
          ok = false;
          msg += " d^2 at (" + std::to_string(k) + "," + std::to_string(w) + ");";
        }
      }
  }

  // noncommutative Euler formula on paths of length <= 8
  for (int t = 0; t < 30 && ok; ++t) {
    int len = 1 + static_cast<int>(rng() % 8);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(bead_plain(q2, arrow(rng)));
    NCPoly p = nc_word(q2, w);
    NCPoly total;
    for (int a = 0; a < 2; ++a) {
      int deg = 0;
      for (int b : w)
        if (b == bead_plain(q2, a)) ++deg;
      if (!(euler_apply(q2, a, p) == Rat(deg) * p)) ok = false;
      total += euler_apply(q2, a, p);
    }
    if (!(total == Rat(len) * p)) ok = false;
    if (!ok) msg += " euler;";
  }

  // gauge identity for degree <= 6
  for (int t = 0; t < 30 && ok; ++t) {
    NCPoly f;
    for (int terms = 0; terms < 4; ++terms) {
      int len = static_cast<int>(rng() % 7);
      if (len == 0) {
        f.add(path_e(0), Rat(static_cast<long>(rng() % 5) - 2));
        continue;
      }
      Word w;
      for (int i = 0; i < len; ++i) w.push_back(bead_plain(q2, arrow(rng)));
      f.add(path_of(q2, w), Rat(static_cast<long>(rng() % 5) - 2));
    }
    TensorElem want;
    for (const auto& [p, c] : f.terms) {
      want.add({p, path_e(0)}, c);
      want.add({path_e(0), p}, -c);
    }
    if (!(gauge_apply(q2, f) == want)) {
      ok = false;
      msg += " gauge;";
    }
  }

  // block-cyclic coboundary of x dx dx on block monomials
  PolyField P0 = neck("x *x *x");
  for (int t = 0; t < 30 && ok; ++t) {
    int s = 1 + static_cast<int>(rng() % 3);
    std::vector<int> ks(2 * s);
    int total_len = 0;
    for (auto& k : ks) {
      k = 1 + static_cast<int>(rng() % 3);
      total_len += k;
    }
    if (total_len > 8) continue;
    auto block_word = [&](int start_block) {
      Word w;
      for (int b = 0; b < 2 * s; ++b) {
        int blk = (start_block + b) % (2 * s);
        int bead = bead_plain(q2, blk % 2 == 0 ? 0 : 1);  // even blocks are x-blocks
        for (int r = 0; r < ks[blk]; ++r) w.push_back(bead);
      }
      return w;
    };
    NCPoly expect_poly;
    for (int j = 0; j < 2 * s; ++j)
      expect_poly.add(path_of(q2, block_word(j)), j % 2 == 0 ? -1 : 1);
    PolyField lhs = kontsevich_bracket(q2, P0, pf_word(q2, block_word(0)));
    if (!(lhs == vfield(expect_poly, 0))) {
      ok = false;
      msg += " block-cyclic;";
    }
  }

  // trace squares for the catalogue tensors and the quadratic tensor
  for (const auto& P : accepted_tensors()) {
    if (!ok) break;
    CommPoly psi = trace_map(q2, P.field).grade2;
    for (int w = 0; w <= 5 && ok; ++w) {
      for (const auto& n : enumerate_basis(q2, 0, w)) {
        PolyField v(n, 1);
        if (!(trace_map(q2, kontsevich_bracket(q2, P.field, v)).grade1 ==
              d0_pi(psi, trace_map(q2, v).grade0))) {
          ok = false;
          msg += " trace square star-0;";
          break;
        }
      }
      for (const auto& n : enumerate_basis(q2, 1, w)) {
        PolyField v(n, 1);
        if (!(trace_map(q2, kontsevich_bracket(q2, P.field, v)).grade2 ==
              d1_pi(psi, trace_map(q2, v).grade1))) {
          ok = false;
          msg += " trace square star-1;";
          break;
        }
      }
    }
  }

  report(11, "property-suites", ok,
         msg.empty() ? "bracket laws, d^2, euler, gauge, blocks, trace squares" : msg);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  if (failures == 0)
    std::printf("acceptance: all 11 criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
