#pragma once
#include <map>
#include <vector>

#include "dpcoh/bracket.hpp"
#include "dpcoh/linalg.hpp"

namespace dpcoh {

struct Caps {
  int max_stars = 3;
  int max_weight = 8;
  long max_chain = 20000;
  int max_len = 24;
};

// DPCOH_MAX_STARS, DPCOH_MAX_WEIGHT, DPCOH_MAX_CHAIN override the defaults.
Caps caps_from_env(Caps base = Caps{});

enum class Exec { Serial, Parallel };

struct BidegreeReport {
  int k = 0, w = 0;
  long dim_chain = 0, dim_kernel = 0, dim_image_in = 0, dim_H = 0;
  std::vector<PolyField> representatives;
};

// Chain complex of a weight-homogeneous tensor P on the graded necklace space,
// split by bidegree (stars k, weight w); d maps (k, w) to (k+1, w+m-1) where m
// is the weight of P. Bases, boundary matrices and ranks are cached. Caps
// bound the requested bidegrees; every constructed basis obeys the chain cap.
// Holds a reference to the quiver, which must outlive the driver.
class ComplexDriver {
 public:
  ComplexDriver(const Quiver& q, TensorP P, Caps caps = Caps{}, Exec exec = Exec::Parallel);

  const Quiver& quiver() const { return q_; }
  const TensorP& tensor() const { return P_; }
  const Caps& caps() const { return caps_; }

  const std::vector<Necklace>& basis(int k, int w);
  long chain_dim(int k, int w);
  int basis_index(int k, int w, const Necklace& n);  // -1 if absent

  // Matrix of d from (k, w) in the enumerated bases.
  const RatMatrix& boundary_matrix(int k, int w);

  std::vector<Rat> coords(int k, int w, const PolyField& f);  // throws if outside basis
  PolyField field_of(int k, int w, const std::vector<Rat>& v);

  BidegreeReport bidegree(int k, int w, bool want_representatives);
  std::vector<BidegreeReport> summary(int k_lo, int k_hi, int w_lo, int w_hi,
                                      bool want_representatives);

 private:
  void check_caps(int k, int w) const;
  const RatMatrix& matrix_unchecked(int k, int w);
  int matrix_rank(int k, int w);
  const Quiver& q_;
  TensorP P_;
  Caps caps_;
  Exec exec_;
  std::map<std::pair<int, int>, std::vector<Necklace>> bases_;
  std::map<std::pair<int, int>, std::map<Necklace, int>> index_;
  std::map<std::pair<int, int>, RatMatrix> matrices_;
  std::map<std::pair<int, int>, int> ranks_;
};

}  // namespace dpcoh
