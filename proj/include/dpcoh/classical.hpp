#pragma once
#include <string>
#include <utility>
#include <vector>

#include "dpcoh/linalg.hpp"
#include "dpcoh/necklace.hpp"

namespace dpcoh {

// Polynomials in commuting x, y keyed by (deg_x, deg_y).
using CommPoly = Lin<std::pair<int, int>>;

CommPoly cp_parse(const std::string& text);  // "x^2*y + 2*y^3 - 1/2"
std::string cp_str(const CommPoly& p);
CommPoly cp_mono(int i, int j, const Rat& c = 1);
CommPoly cp_mul(const CommPoly& a, const CommPoly& b);
CommPoly cp_dx(const CommPoly& p);
CommPoly cp_dy(const CommPoly& p);
// -1 for the zero polynomial; -2 if inhomogeneous.
int cp_homogeneous_degree(const CommPoly& p);

struct VField {
  CommPoly f, g;  // f d/dx + g d/dy
  bool operator==(const VField&) const = default;
};

// Coboundaries of the bivector psi dx^dy. The grade-0 sign is fixed so that
// the necklace trace intertwines these operators with the necklace
// differential (see the trace morphism tests).
VField d0_pi(const CommPoly& psi, const CommPoly& h);          // (psi h_y, -psi h_x)
CommPoly d1_pi(const CommPoly& psi, const VField& v);          // psi(f_x+g_y) - f psi_x - g psi_y

// Matrices of the graded pieces: d0 on degree-d polynomials, d1 on vector
// fields with degree-d coefficients. Bases: monomials x^i y^(d-i), i = 0..d;
// vector fields list the f-part basis then the g-part basis.
RatMatrix d0_matrix(const CommPoly& psi, int h_degree);
RatMatrix d1_matrix(const CommPoly& psi, int v_degree);
std::vector<Rat> cp_coords(const CommPoly& p, int degree);
std::vector<Rat> vf_coords(const VField& v, int degree);

struct ClassicalRow {
  int degree = 0;
  long dim_H0 = 0, dim_H1 = 0, dim_H2 = 0;
};
struct ClassicalReport {
  int psi_degree = 0;
  std::vector<ClassicalRow> rows;
  long total_H0 = 0, total_H1 = 0, total_H2 = 0;
};

// Exact dimensions degree by degree; psi must be homogeneous (the zero
// bivector is treated as homogeneous of degree 1).
ClassicalReport classical_cohomology(const CommPoly& psi, int max_degree);

// Trace at representation dimension one: plain beads abelianize, star beads
// wedge in canonical-word order. Grades above two vanish on the plane.
struct TracedField {
  CommPoly grade0;
  VField grade1;
  CommPoly grade2;  // coefficient of d/dx ^ d/dy
  bool operator==(const TracedField&) const = default;
};
TracedField trace_map(const Quiver& q, const PolyField& v);

}  // namespace dpcoh
