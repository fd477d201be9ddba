#include "dpcoh/rat.hpp"

#include <cctype>

namespace dpcoh {

Rat rat_parse(const std::string& s) {
  std::string t;
  t.reserve(s.size());
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (!t.empty() && t[0] == '+') t.erase(t.begin());
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  try {
    r = Rat(t, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace dpcoh
