#include "dpcoh/quiver.hpp"

#include <algorithm>
#include <set>

namespace dpcoh {

std::vector<std::string> validate(const QuiverDesc& d) {
  std::vector<std::string> out;
  std::set<std::string> vnames;
  for (const auto& v : d.vertices) {
    if (!vnames.insert(v).second) out.push_back("duplicate vertex id '" + v + "'");
  }
  std::set<std::string> anames;
  for (const auto& a : d.arrows) {
    if (!anames.insert(a.name).second)
      out.push_back("duplicate arrow name '" + a.name + "'");
    if (!a.name.empty() && a.name[0] == kStarPrefix)
      out.push_back("arrow name '" + a.name + "' uses the reserved star prefix");
    if (a.name.empty()) out.push_back("empty arrow name");
    if (!vnames.count(a.tail))
      out.push_back("arrow '" + a.name + "' has undeclared tail vertex '" + a.tail + "'");
    if (!vnames.count(a.head))
      out.push_back("arrow '" + a.name + "' has undeclared head vertex '" + a.head + "'");
  }
  return out;
}

Quiver Quiver::from_desc(const QuiverDesc& d) {
  auto violations = validate(d);
  if (!violations.empty()) {
    std::string msg = "invalid quiver:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw ValidationError(msg);
  }
  Quiver q;
  q.vertex_names_ = d.vertices;
  for (const auto& a : d.arrows) {
    q.arrow_names_.push_back(a.name);
    q.tails_.push_back(q.vertex_index(a.tail));
    q.heads_.push_back(q.vertex_index(a.head));
  }
  return q;
}

Quiver Quiver::loops(const std::vector<std::string>& arrow_names, const std::string& vertex) {
  QuiverDesc d;
  d.vertices = {vertex};
  for (const auto& n : arrow_names) d.arrows.push_back({n, vertex, vertex});
  return from_desc(d);
}

int Quiver::vertex_index(const std::string& name) const {
  for (int i = 0; i < n_vertices(); ++i)
    if (vertex_names_[i] == name) return i;
  return -1;
}

int Quiver::arrow_index(const std::string& name) const {
  for (int i = 0; i < n_arrows(); ++i)
    if (arrow_names_[i] == name) return i;
  return -1;
}

QuiverDesc Quiver::desc() const {
  QuiverDesc d;
  d.vertices = vertex_names_;
  for (int a = 0; a < n_arrows(); ++a)
    d.arrows.push_back({arrow_names_[a], vertex_names_[tails_[a]], vertex_names_[heads_[a]]});
  return d;
}

Quiver double_quiver(const Quiver& q) {
  if (q.has_star_arrows())
    throw ValidationError("quiver already doubled: star-of-star names are reserved");
  Quiver d = q;
  int n = q.n_arrows();
  for (int a = 0; a < n; ++a) {
    d.arrow_names_.push_back(std::string(1, kStarPrefix) + q.arrow_name(a));
    d.tails_.push_back(q.head(a));
    d.heads_.push_back(q.tail(a));
  }
  d.has_star_ = n > 0;
  return d;
}

std::string bead_name(const Quiver& q, int b) {
  std::string base = q.arrow_name(bead_arrow(q, b));
  return bead_is_star(q, b) ? std::string(1, kStarPrefix) + base : base;
}

int bead_from_name(const Quiver& q, const std::string& name) {
  bool star = !name.empty() && name[0] == kStarPrefix;
  std::string base = star ? name.substr(1) : name;
  int a = q.arrow_index(base);
  if (a < 0) throw ValidationError("unknown arrow name '" + name + "'");
  return star ? bead_star(q, a) : bead_plain(q, a);
}

bool composable(const Quiver& q, int b1, int b2) {
  return bead_head(q, b1) == bead_tail(q, b2);
}

bool composable(const Quiver& q, const std::string& b1, const std::string& b2) {
  return composable(q, bead_from_name(q, b1), bead_from_name(q, b2));
}

void require_base(const Quiver& q) {
  if (q.has_star_arrows())
    throw ValidationError("expected a base quiver; star arrows are implicit here");
}

}  // namespace dpcoh
