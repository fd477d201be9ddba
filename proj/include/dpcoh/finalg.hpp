#pragma once
#include <array>
#include <random>
#include <string>
#include <vector>

#include "dpcoh/cohomology.hpp"

namespace dpcoh {

// Structure constants of a (not necessarily unital or associative) product on
// an n-dimensional space: x_i x_j = sum_k c[i][j][k] x_k.
struct StructureConstants {
  int n = 0;
  std::vector<std::string> names;  // generator names; defaults filled by make()
  std::vector<Rat> c;              // (i*n + j)*n + k

  static StructureConstants make(int n, std::vector<std::string> names = {});
  Rat& at(int i, int j, int k) { return c[(i * n + j) * n + k]; }
  const Rat& at(int i, int j, int k) const { return c[(i * n + j) * n + k]; }
};

// Witness on failure: indices (i, j, k, p) with the x_p-coefficient of
// (x_i x_j) x_k - x_i (x_j x_k) nonzero.
bool is_associative(const StructureConstants& c, std::array<int, 4>* witness = nullptr);

Quiver loop_quiver(const StructureConstants& c);  // one vertex, loops named as c.names

// P = sum c[i][j][k] x_k d/dx_i d/dx_j over the loop quiver.
TensorP tensor_from_constants(const Quiver& q, const StructureConstants& c);

// Inverse of tensor_from_constants; throws unless every necklace of P has one
// plain and two star beads.
StructureConstants constants_from_tensor(const Quiver& q, const TensorP& P);

struct CatalogueEntry {
  std::string name;
  StructureConstants sc;
};

// The seven 2-dimensional products whose linear tensors exhaust the linear
// double Poisson brackets on two loops, including the zero product.
std::vector<CatalogueEntry> catalogue_2dim();

// Elements of (A*)^(x i) (x) A indexed by tuples (k_1..k_i, l).
using HTensor = Lin<std::vector<int>>;

// Bar-type differential: insert at the first slot with c[s][l][t], contract
// interior slot r with c[s][t][k_r] and sign (-1)^r, insert at the last slot
// with c[l][s][t] and sign (-1)^(i+1).
HTensor hochschild_d(const StructureConstants& c, const HTensor& x, int degree);
RatMatrix hochschild_matrix(const StructureConstants& c, int degree);

struct HochschildReport {
  int max_degree = 0;
  std::vector<long> dim_chain, rank_d, dim_HH;  // indexed by degree 0..max
};
HochschildReport hochschild_dims(const StructureConstants& c, int max_degree,
                                 const Caps& caps = Caps{});

// Basis tuples of (A*)^(x i) (x) A in lexicographic order.
std::vector<std::vector<int>> hochschild_basis(int n, int degree);

// The comparison maps between tuple bases and weight-1 necklaces.
PolyField phi_map(const Quiver& q, const std::vector<int>& tuple);
HTensor phi_field(const Quiver& q, const PolyField& f);  // inverse on weight-1 fields

struct Weight1Row {
  int degree = 0;
  long dim_HH = 0, dim_HP = 0;
  bool dims_match = false, intertwines = false;
};
std::vector<Weight1Row> compare_weight1(const StructureConstants& c, int max_degree,
                                        const Caps& caps = Caps{});

// Checks d(phi0(f)) == phi1(d_P(f)) on `samples` random weight-k monomials,
// where phi0 is cyclic symmetrization into A^(x k) and the coefficients act by
// the inner action on the two outmost tensor factors.
bool casimir_embedding_check(const StructureConstants& c, int weight_k, int samples,
                             unsigned long seed = 0);

// Sparse random constants with small rational entries, for equivalence trials.
StructureConstants random_constants(int n, std::mt19937_64& rng);

}  // namespace dpcoh
