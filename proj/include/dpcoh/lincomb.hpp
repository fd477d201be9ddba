#pragma once
#include <map>

#include "dpcoh/rat.hpp"

namespace dpcoh {

// Formal linear combination over the rationals; zero coefficients are never stored.
template <class K>
struct Lin {
  std::map<K, Rat> terms;

  Lin() = default;
  Lin(const K& k, const Rat& c) { add(k, c); }

  void add(const K& k, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  bool operator==(const Lin&) const = default;

  Lin& operator+=(const Lin& o) {
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
  }
  Lin& operator-=(const Lin& o) {
    for (const auto& [k, c] : o.terms) add(k, -c);
    return *this;
  }
  Lin& operator*=(const Rat& c) {
    if (c == 0) {
      terms.clear();
      return *this;
    }
    for (auto& [k, v] : terms) v *= c;
    return *this;
  }
  friend Lin operator+(Lin a, const Lin& b) {
    a += b;
    return a;
  }
  friend Lin operator-(Lin a, const Lin& b) {
    a -= b;
    return a;
  }
  friend Lin operator*(const Rat& c, Lin a) {
    a *= c;
    return a;
  }
};

}  // namespace dpcoh
