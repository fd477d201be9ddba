#include "dpcoh/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpcoh {

void RatMatrix::set(int r, int c, const Rat& v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols)
    throw std::out_of_range("RatMatrix::set index out of bounds");
  if (v == 0)
    entries.erase({r, c});
  else
    entries[{r, c}] = v;
}

void RatMatrix::add(int r, int c, const Rat& v) {
  if (v == 0) return;
  auto key = std::make_pair(r, c);
  auto [it, fresh] = entries.emplace(key, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) entries.erase(it);
  }
}

Rat RatMatrix::get(int r, int c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? Rat(0) : it->second;
}

using IRow = std::map<int, Int>;

// Integer rows with denominators cleared; rank is unchanged by row scaling.
static std::vector<IRow> integer_rows(const RatMatrix& m) {
  std::vector<IRow> rows(m.rows);
  std::vector<Int> lcm(m.rows, 1);
  for (const auto& [rc, v] : m.entries) {
    Int d = v.get_den();
    Int g = gcd(lcm[rc.first], d);
    lcm[rc.first] = lcm[rc.first] / g * d;
  }
  for (const auto& [rc, v] : m.entries) {
    Int num = v.get_num() * (lcm[rc.first] / v.get_den());
    rows[rc.first][rc.second] = num;
  }
  return rows;
}

static void reduce_content(IRow& row) {
  Int g = 0;
  for (const auto& [c, v] : row) g = gcd(g, v);
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
}

int rank(const RatMatrix& m) {
  std::vector<IRow> rows = integer_rows(m);
  std::vector<bool> used(rows.size(), false);
  int rk = 0;
  for (int col = 0; col < m.cols; ++col) {
    int pivot = -1;
    Int pv;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (used[r]) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end() || it->second == 0) continue;
      if (pivot < 0 || cmp(abs(it->second), abs(pv)) < 0) {
        pivot = r;
        pv = it->second;
      }
    }
    if (pivot < 0) continue;
    used[pivot] = true;
    ++rk;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (used[r]) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      Int a = it->second;
      // fraction-free combination, then divide out the content
      IRow next;
      for (const auto& [c, v] : rows[r])
        if (c > col) next[c] = pv * v;
      for (const auto& [c, v] : rows[pivot]) {
        if (c <= col) continue;
        Int& slot = next[c];
        slot -= a * v;
        if (slot == 0) next.erase(c);
      }
      reduce_content(next);
      rows[r] = std::move(next);
    }
  }
  return rk;
}

using QRow = std::map<int, Rat>;

// Reduced row echelon form; returns pivot column -> reduced row.
static std::vector<std::pair<int, QRow>> rref(const RatMatrix& m) {
  std::vector<QRow> rows(m.rows);
  for (const auto& [rc, v] : m.entries) rows[rc.first][rc.second] = v;
  std::vector<std::pair<int, QRow>> done;
  std::vector<bool> used(rows.size(), false);
  for (int col = 0; col < m.cols; ++col) {
    int pivot = -1;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (used[r] || !rows[r].count(col)) continue;
      if (pivot < 0 || cmp(abs(rows[r][col]), abs(rows[pivot][col])) < 0) pivot = r;
    }
    if (pivot < 0) continue;
    used[pivot] = true;
    QRow prow = rows[pivot];
    Rat pv = prow[col];
    for (auto& [c, v] : prow) v /= pv;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (used[r] || !rows[r].count(col)) continue;
      Rat a = rows[r][col];
      for (const auto& [c, v] : prow) {
        auto it = rows[r].find(c);
        Rat nv = (it == rows[r].end() ? Rat(0) : it->second) - a * v;
        if (nv == 0)
          rows[r].erase(c);
        else
          rows[r][c] = nv;
      }
    }
    for (auto& [pc, prev] : done) {
      auto it = prev.find(col);
      if (it == prev.end()) continue;
      Rat a = it->second;
      for (const auto& [c, v] : prow) {
        auto jt = prev.find(c);
        Rat nv = (jt == prev.end() ? Rat(0) : jt->second) - a * v;
        if (nv == 0)
          prev.erase(c);
        else
          prev[c] = nv;
      }
    }
    done.emplace_back(col, std::move(prow));
  }
  return done;
}

void clear_denominators(std::vector<Rat>& v) {
  Int l = 1, g = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    Int d = x.get_den();
    l = l / gcd(l, d) * d;
  }
  for (auto& x : v) x *= Rat(l);
  for (const auto& x : v) g = gcd(g, x.get_num());
  if (g > 1)
    for (auto& x : v) x /= Rat(g);
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
}

std::vector<std::vector<Rat>> nullspace_basis(const RatMatrix& m) {
  auto pivots = rref(m);
  std::vector<int> pivot_of_col(m.cols, -1);
  for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
    pivot_of_col[pivots[i].first] = i;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<Rat> x(m.cols, Rat(0));
    x[free] = 1;
    for (const auto& [pc, row] : pivots) {
      auto it = row.find(free);
      if (it != row.end()) x[pc] = -it->second;
    }
    clear_denominators(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

RatMatrix transpose(const RatMatrix& m) {
  RatMatrix t(m.cols, m.rows);
  for (const auto& [rc, v] : m.entries) t.entries[{rc.second, rc.first}] = v;
  return t;
}

bool in_span(const std::vector<Rat>& v, const RatMatrix& m) {
  if (static_cast<int>(v.size()) != m.rows)
    throw std::invalid_argument("in_span: dimension mismatch");
  bool all_zero = true;
  for (const auto& x : v)
    if (x != 0) {
      all_zero = false;
      break;
    }
  if (all_zero) return true;
  RatMatrix t = transpose(m);
  int base = rank(t);
  RatMatrix aug(t.rows + 1, t.cols);
  aug.entries = t.entries;
  for (int c = 0; c < t.cols; ++c)
    if (v[c] != 0) aug.entries[{t.rows, c}] = v[c];
  return rank(aug) == base;
}

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matmul: shape mismatch");
  RatMatrix out(a.rows, b.cols);
  std::vector<std::map<int, Rat>> brows(b.rows);
  for (const auto& [rc, v] : b.entries) brows[rc.first][rc.second] = v;
  for (const auto& [rc, va] : a.entries) {
    for (const auto& [c2, vb] : brows[rc.second]) out.add(rc.first, c2, va * vb);
  }
  return out;
}

bool is_zero(const RatMatrix& m) { return m.entries.empty(); }

std::vector<Rat> mat_apply(const RatMatrix& m, const std::vector<Rat>& v) {
  if (static_cast<int>(v.size()) != m.cols)
    throw std::invalid_argument("mat_apply: dimension mismatch");
  std::vector<Rat> out(m.rows, Rat(0));
  for (const auto& [rc, a] : m.entries) out[rc.first] += a * v[rc.second];
  return out;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows != b.rows) throw std::invalid_argument("hstack: row mismatch");
  RatMatrix out(a.rows, a.cols + b.cols);
  out.entries = a.entries;
  for (const auto& [rc, v] : b.entries) out.entries[{rc.first, a.cols + rc.second}] = v;
  return out;
}

RatMatrix from_columns(int rows, const std::vector<std::vector<Rat>>& cols) {
  RatMatrix out(rows, static_cast<int>(cols.size()));
  for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
    if (static_cast<int>(cols[c].size()) != rows)
      throw std::invalid_argument("from_columns: column length mismatch");
    for (int r = 0; r < rows; ++r)
      if (cols[c][r] != 0) out.entries[{r, c}] = cols[c][r];
  }
  return out;
}

}  // namespace dpcoh
