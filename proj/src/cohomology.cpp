#include "dpcoh/cohomology.hpp"

#include <cstdlib>
#include <string>

namespace dpcoh {

static long env_long(const char* name, long fallback) {
  const char* s = std::getenv(name);
  if (!s || !*s) return fallback;
  try {
    return std::stol(s);
  } catch (...) {
    return fallback;
  }
}

Caps caps_from_env(Caps base) {
  base.max_stars = static_cast<int>(env_long("DPCOH_MAX_STARS", base.max_stars));
  base.max_weight = static_cast<int>(env_long("DPCOH_MAX_WEIGHT", base.max_weight));
  base.max_chain = env_long("DPCOH_MAX_CHAIN", base.max_chain);
  return base;
}

ComplexDriver::ComplexDriver(const Quiver& q, TensorP P, Caps caps, Exec exec)
    : q_(q), P_(std::move(P)), caps_(caps), exec_(exec) {
  require_base(q_);
}

void ComplexDriver::check_caps(int k, int w) const {
  if (k < 0 || w < 0) throw ValidationError("negative bidegree");
  if (k > caps_.max_stars)
    throw CapExceeded("star degree " + std::to_string(k) + " exceeds cap " +
                      std::to_string(caps_.max_stars));
  if (w > caps_.max_weight)
    throw CapExceeded("weight " + std::to_string(w) + " exceeds cap " +
                      std::to_string(caps_.max_weight));
}

const std::vector<Necklace>& ComplexDriver::basis(int k, int w) {
  auto key = std::make_pair(k, w);
  auto it = bases_.find(key);
  if (it != bases_.end()) return it->second;
  auto b = enumerate_basis(q_, k, w, caps_.max_len, exec_ == Exec::Parallel);
  if (static_cast<long>(b.size()) > caps_.max_chain)
    throw CapExceeded("chain dimension " + std::to_string(b.size()) + " at (" +
                      std::to_string(k) + "," + std::to_string(w) + ") exceeds cap " +
                      std::to_string(caps_.max_chain));
  auto& slot = bases_[key];
  slot = std::move(b);
  auto& idx = index_[key];
  for (int i = 0; i < static_cast<int>(slot.size()); ++i) idx[slot[i]] = i;
  return slot;
}

long ComplexDriver::chain_dim(int k, int w) {
  check_caps(k, w);
  return static_cast<long>(basis(k, w).size());
}

int ComplexDriver::basis_index(int k, int w, const Necklace& n) {
  basis(k, w);
  const auto& idx = index_[{k, w}];
  auto it = idx.find(n);
  return it == idx.end() ? -1 : it->second;
}

const RatMatrix& ComplexDriver::boundary_matrix(int k, int w) {
  check_caps(k, w);
  return matrix_unchecked(k, w);
}

// Maps adjacent to a requested bidegree may step past the star/weight caps;
// only the chain cap binds here (enforced by basis()).
const RatMatrix& ComplexDriver::matrix_unchecked(int k, int w) {
  auto key = std::make_pair(k, w);
  auto it = matrices_.find(key);
  if (it != matrices_.end()) return it->second;

  const auto& src = basis(k, w);
  const int kt = k + 1, wt = w + P_.weight - 1;
  int rows = wt >= 0 ? static_cast<int>(basis(kt, wt).size()) : 0;
  RatMatrix m(rows, static_cast<int>(src.size()));
  if (m.rows == 0 || m.cols == 0 || P_.field.is_zero()) {
    auto& slot = matrices_[key];
    slot = std::move(m);
    return slot;
  }

  std::vector<PolyField> images(src.size());
  if (exec_ == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int col = 0; col < static_cast<int>(src.size()); ++col)
      images[col] = kontsevich_bracket(q_, P_.field, PolyField(src[col], 1));
  } else {
    for (int col = 0; col < static_cast<int>(src.size()); ++col)
      images[col] = kontsevich_bracket(q_, P_.field, PolyField(src[col], 1));
  }

  const auto& idx = index_[{kt, wt}];
  for (int col = 0; col < static_cast<int>(src.size()); ++col) {
    for (const auto& [n, c] : images[col].terms) {
      auto jt = idx.find(n);
      if (jt == idx.end())
        throw std::logic_error("boundary image leaves the target basis");
      m.add(jt->second, col, c);
    }
  }
  auto& slot = matrices_[key];
  slot = std::move(m);
  return slot;
}

int ComplexDriver::matrix_rank(int k, int w) {
  auto key = std::make_pair(k, w);
  auto it = ranks_.find(key);
  if (it != ranks_.end()) return it->second;
  int r = rank(matrix_unchecked(k, w));
  ranks_[key] = r;
  return r;
}

std::vector<Rat> ComplexDriver::coords(int k, int w, const PolyField& f) {
  const auto& b = basis(k, w);
  std::vector<Rat> v(b.size(), Rat(0));
  const auto& idx = index_[{k, w}];
  for (const auto& [n, c] : f.terms) {
    auto it = idx.find(n);
    if (it == idx.end()) throw ValidationError("field term outside bidegree basis");
    v[it->second] = c;
  }
  return v;
}

PolyField ComplexDriver::field_of(int k, int w, const std::vector<Rat>& v) {
  const auto& b = basis(k, w);
  PolyField f;
  for (std::size_t i = 0; i < b.size() && i < v.size(); ++i) f.add(b[i], v[i]);
  return f;
}

BidegreeReport ComplexDriver::bidegree(int k, int w, bool want_representatives) {
  check_caps(k, w);
  BidegreeReport rep;
  rep.k = k;
  rep.w = w;
  rep.dim_chain = chain_dim(k, w);

  const RatMatrix& out = boundary_matrix(k, w);
  rep.dim_kernel = rep.dim_chain - matrix_rank(k, w);

  const int ki = k - 1, wi = w - P_.weight + 1;
  const RatMatrix* in = nullptr;
  if (ki >= 0 && wi >= 0) {
    in = &matrix_unchecked(ki, wi);
    rep.dim_image_in = matrix_rank(ki, wi);
  }
  rep.dim_H = rep.dim_kernel - rep.dim_image_in;

  if (want_representatives && rep.dim_H > 0) {
    auto null_vecs = nullspace_basis(out);
    RatMatrix span = in ? *in : RatMatrix(static_cast<int>(rep.dim_chain), 0);
    std::vector<std::vector<Rat>> chosen;
    for (auto& v : null_vecs) {
      if (static_cast<long>(chosen.size()) == rep.dim_H) break;
      RatMatrix cur = span;
      for (const auto& c : chosen) {
        RatMatrix one = from_columns(cur.rows, {c});
        cur = hstack(cur, one);
      }
      if (!in_span(v, cur)) {
        clear_denominators(v);
        chosen.push_back(v);
      }
    }
    for (const auto& v : chosen) rep.representatives.push_back(field_of(k, w, v));
  }
  return rep;
}

std::vector<BidegreeReport> ComplexDriver::summary(int k_lo, int k_hi, int w_lo, int w_hi,
                                                   bool want_representatives) {
  if (k_lo > k_hi || w_lo > w_hi) throw ValidationError("empty bidegree range");
  std::vector<BidegreeReport> out;
  for (int k = k_lo; k <= k_hi; ++k)
    for (int w = w_lo; w <= w_hi; ++w) out.push_back(bidegree(k, w, want_representatives));
  return out;
}

}  // namespace dpcoh
