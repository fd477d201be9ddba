#pragma once
#include <stdexcept>
#include <string>
#include <vector>

namespace dpcoh {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Star arrows are named by this reserved prefix; user arrows may not start with it.
constexpr char kStarPrefix = '*';

struct ArrowDesc {
  std::string name, tail, head;
};

struct QuiverDesc {
  std::vector<std::string> vertices;
  std::vector<ArrowDesc> arrows;
};

// Empty iff the description satisfies all quiver invariants.
std::vector<std::string> validate(const QuiverDesc& d);

// Validated quiver, immutable after construction. Arrow declaration order is
// the total order used for every canonical form in the library: plain arrows
// first in declaration order, then their starred duals in the same order.
class Quiver {
 public:
  Quiver() = default;
  static Quiver from_desc(const QuiverDesc& d);  // throws ValidationError
  static Quiver loops(const std::vector<std::string>& arrow_names,
                      const std::string& vertex = "v");

  int n_vertices() const { return static_cast<int>(vertex_names_.size()); }
  int n_arrows() const { return static_cast<int>(arrow_names_.size()); }
  bool one_vertex() const { return vertex_names_.size() == 1; }
  bool has_star_arrows() const { return has_star_; }

  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  const std::string& arrow_name(int a) const { return arrow_names_[a]; }
  int tail(int a) const { return tails_[a]; }
  int head(int a) const { return heads_[a]; }
  int vertex_index(const std::string& name) const;  // -1 if absent
  int arrow_index(const std::string& name) const;   // -1 if absent

  QuiverDesc desc() const;

  friend Quiver double_quiver(const Quiver& q);

 private:
  std::vector<std::string> vertex_names_, arrow_names_;
  std::vector<int> tails_, heads_;
  bool has_star_ = false;
};

// Adds one reversed star arrow per arrow. Rejects quivers that already carry
// star arrows: star-of-star names are reserved.
Quiver double_quiver(const Quiver& q);

// Beads are the arrows of the double quiver, indexed 0..n-1 for the plain
// arrows and n..2n-1 for the starred duals (degree 1, reversed endpoints).
inline int n_beads(const Quiver& q) { return 2 * q.n_arrows(); }
inline int bead_plain(const Quiver&, int arrow) { return arrow; }
inline int bead_star(const Quiver& q, int arrow) { return q.n_arrows() + arrow; }
inline bool bead_is_star(const Quiver& q, int b) { return b >= q.n_arrows(); }
inline int bead_arrow(const Quiver& q, int b) {
  return bead_is_star(q, b) ? b - q.n_arrows() : b;
}
inline int bead_degree(const Quiver& q, int b) { return bead_is_star(q, b) ? 1 : 0; }
inline int bead_tail(const Quiver& q, int b) {
  int a = bead_arrow(q, b);
  return bead_is_star(q, b) ? q.head(a) : q.tail(a);
}
inline int bead_head(const Quiver& q, int b) {
  int a = bead_arrow(q, b);
  return bead_is_star(q, b) ? q.tail(a) : q.head(a);
}

std::string bead_name(const Quiver& q, int b);                 // "x" or "*x"
int bead_from_name(const Quiver& q, const std::string& name);  // throws on unknown arrow

bool composable(const Quiver& q, int b1, int b2);
bool composable(const Quiver& q, const std::string& b1, const std::string& b2);

// Engine entry points only accept base quivers; the bead layer supplies the double.
void require_base(const Quiver& q);

}  // namespace dpcoh
