#include "dpcoh/io.hpp"

#include <fstream>
#include <sstream>

namespace dpcoh {

njson quiver_to_json(const Quiver& q) {
  njson j;
  j["vertices"] = njson::array();
  for (int v = 0; v < q.n_vertices(); ++v) j["vertices"].push_back(q.vertex_name(v));
  j["arrows"] = njson::array();
  for (int a = 0; a < q.n_arrows(); ++a)
    j["arrows"].push_back({{"name", q.arrow_name(a)},
                           {"tail", q.vertex_name(q.tail(a))},
                           {"head", q.vertex_name(q.head(a))}});
  return j;
}

Quiver quiver_from_json(const njson& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
    throw ValidationError("quiver document needs 'vertices' and 'arrows'");
  QuiverDesc d;
  for (const auto& v : j.at("vertices")) d.vertices.push_back(v.get<std::string>());
  for (const auto& a : j.at("arrows"))
    d.arrows.push_back({a.at("name").get<std::string>(), a.at("tail").get<std::string>(),
                        a.at("head").get<std::string>()});
  return Quiver::from_desc(d);
}

njson polyfield_to_json(const Quiver& q, const PolyField& f) {
  njson terms = njson::array();
  for (const auto& [n, c] : f.terms) {
    njson t;
    t["coeff"] = rat_str(c);
    t["word"] = njson::array();
    for (int b : n.word) t["word"].push_back(bead_name(q, b));
    if (n.word.empty() && !q.one_vertex()) t["vertex"] = q.vertex_name(n.vertex);
    t["pretty"] = necklace_str(q, n);
    terms.push_back(t);
  }
  return terms;
}

PolyField polyfield_from_json(const Quiver& q, const njson& terms) {
  if (!terms.is_array()) throw ValidationError("field terms must be an array");
  PolyField out;
  for (const auto& t : terms) {
    Rat c = rat_parse(t.at("coeff").get<std::string>());
    Word w;
    if (t.contains("mono")) {
      // one-vertex plain-word shorthand, e.g. "x^2*y"
      w = mono_parse(q, t.at("mono").get<std::string>()).beads;
    } else
      for (const auto& s : t.at("word")) w.push_back(bead_from_name(q, s.get<std::string>()));
    int v = 0;
    if (w.empty()) {
      if (t.contains("vertex")) {
        v = q.vertex_index(t.at("vertex").get<std::string>());
        if (v < 0) throw ValidationError("unknown vertex in field term");
      } else if (!q.one_vertex()) {
        throw ValidationError("empty word needs 'vertex' on a multi-vertex quiver");
      }
    }
    out += pf_word(q, w, c, v);
  }
  return out;
}

njson fielddoc_to_json(const Quiver& q, const PolyField& f) {
  njson j;
  j["quiver"] = quiver_to_json(q);
  j["terms"] = polyfield_to_json(q, f);
  return j;
}

FieldDoc fielddoc_from_json(const njson& j) {
  if (!j.is_object() || !j.contains("quiver") || !j.contains("terms"))
    throw ValidationError("field document needs 'quiver' and 'terms'");
  FieldDoc doc;
  doc.quiver = quiver_from_json(j.at("quiver"));
  doc.field = polyfield_from_json(doc.quiver, j.at("terms"));
  return doc;
}

njson algebra_to_json(const StructureConstants& c) {
  njson j;
  j["n"] = c.n;
  j["names"] = c.names;
  njson prods = njson::array();
  for (int i = 0; i < c.n; ++i)
    for (int k = 0; k < c.n; ++k) {
      njson out = njson::object();
      for (int m = 0; m < c.n; ++m)
        if (c.at(i, k, m) != 0) out[c.names[m]] = rat_str(c.at(i, k, m));
      if (!out.empty())
        prods.push_back({{"i", c.names[i]}, {"j", c.names[k]}, {"out", out}});
    }
  j["products"] = prods;
  return j;
}

StructureConstants algebra_from_json(const njson& j) {
  if (!j.is_object() || !j.contains("n"))
    throw ValidationError("algebra document needs 'n'");
  int n = j.at("n").get<int>();
  if (n <= 0) throw ValidationError("algebra dimension must be positive");
  std::vector<std::string> names;
  if (j.contains("names"))
    for (const auto& s : j.at("names")) names.push_back(s.get<std::string>());
  StructureConstants sc = StructureConstants::make(n, names);
  auto index_of = [&](const std::string& nm) {
    for (int i = 0; i < n; ++i)
      if (sc.names[i] == nm) return i;
    throw ValidationError("unknown generator '" + nm + "' in algebra document");
  };
  if (j.contains("products")) {
    for (const auto& p : j.at("products")) {
      int i = index_of(p.at("i").get<std::string>());
      int k = index_of(p.at("j").get<std::string>());
      for (const auto& [nm, val] : p.at("out").items())
        sc.at(i, k, index_of(nm)) = rat_parse(val.get<std::string>());
    }
  }
  return sc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[h & 0xf];
    h >>= 4;
  }
  return "fnv1a:" + s;
}

}  // namespace dpcoh
