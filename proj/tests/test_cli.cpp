#include <cstdio>
#include <fstream>
#include <sstream>
#include <random>

#include "doctest.h"
#include "dpcoh/cli.hpp"
#include "dpcoh/io.hpp"

using namespace dpcoh;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"dpcoh"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DPCOH_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("check-tensor") {
  Result r = run({"check-tensor", data("tensor_b2_1.json")});
  REQUIRE(r.code == 0);
  njson j = njson::parse(r.out);
  CHECK(j["is_poisson"] == true);
  CHECK(j["obstruction"].empty());
  CHECK(j.contains("input_hash"));
  CHECK(j.contains("caps"));
  CHECK(j["seed"] == 0);

  Result bad = run({"check-tensor", data("tensor_broken.json")});
  REQUIRE(bad.code == 0);
  njson jb = njson::parse(bad.out);
  CHECK(jb["is_poisson"] == false);
  CHECK(!jb["obstruction"].empty());
}

TEST_CASE("cohomology table and csv") {
  Result r = run({"cohomology", data("tensor_p0.json"), "--stars", "0..1", "--weights",
                  "0..3"});
  REQUIRE(r.code == 0);
  njson j = njson::parse(r.out);
  REQUIRE(j["reports"].size() == 8);
  CHECK(j["reports"][0]["dim_H"] == 1);

  Result csv = run({"cohomology", data("tensor_p0.json"), "--stars", "0", "--weights",
                    "0..2", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.substr(0, 43) == "k,w,dim_chain,dim_kernel,dim_image_in,dim_H");
}

TEST_CASE("cohomology rejects a non-Poisson tensor") {
  Result r = run({"cohomology", data("tensor_broken.json"), "--stars", "0", "--weights",
                  "0..1"});
  CHECK(r.code == 2);
}

TEST_CASE("cap violations exit with 3") {
  Result r = run({"cohomology", data("tensor_p0.json"), "--stars", "0", "--weights",
                  "0..5", "--max-weight", "3"});
  CHECK(r.code == 3);
}

TEST_CASE("malformed input exits with 2") {
  std::string path = std::string(DPCOH_DATA_DIR) + "/../build/bad_input_tmp.json";
  {
    std::ofstream f(path);
    f << "{ not json";
  }
  Result r = run({"check-tensor", path});
  CHECK(r.code == 2);
  std::remove(path.c_str());

  Result missing = run({"check-tensor", "/nonexistent/file.json"});
  CHECK(missing.code == 2);

  Result unknown = run({"no-such-subcommand"});
  CHECK(unknown.code == 2);
}

TEST_CASE("classify-linear is deterministic for a fixed seed") {
  Result a = run({"classify-linear", "--random", "12", "--seed", "5"});
  Result b = run({"classify-linear", "--random", "12", "--seed", "5"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  njson j = njson::parse(a.out);
  CHECK(j["trials"] == 12);
  CHECK(j["seed"] == 5);
  CHECK(j["equivalence_holds"] == true);

  Result cat = run({"classify-linear", "--catalogue"});
  njson jc = njson::parse(cat.out);
  REQUIRE(jc["catalogue"].size() == 7);
  for (const auto& e : jc["catalogue"]) CHECK(e["is_poisson"] == true);
}

TEST_CASE("hochschild with comparison") {
  Result r = run({"hochschild", data("algebra_b2_1.json"), "--max", "2", "--compare"});
  REQUIRE(r.code == 0);
  njson j = njson::parse(r.out);
  REQUIRE(j["dims"].size() == 3);
  for (const auto& row : j["compare_weight1"]) {
    CHECK(row["dims_match"] == true);
    CHECK(row["intertwines"] == true);
  }
}

TEST_CASE("classical subcommand") {
  Result r = run({"classical", "--psi", "x^2", "--max-degree", "4"});
  REQUIRE(r.code == 0);
  njson j = njson::parse(r.out);
  CHECK(j["totals"]["H0"] == 1);
  CHECK(j["degrees"][1]["dim_H1"] == 2);

  Result bad = run({"classical", "--psi", "x + y^2"});
  CHECK(bad.code == 2);

  Result csv = run({"classical", "--psi", "y", "--max-degree", "2", "--format", "csv"});
  CHECK(csv.out.substr(0, 27) == "degree,dim_H0,dim_H1,dim_H2");
}

TEST_CASE("trace subcommand") {
  Result r = run({"trace", data("tensor_quadratic.json")});
  REQUIRE(r.code == 0);
  njson j = njson::parse(r.out);
  CHECK(j["grade2"] == "x^2");
}

TEST_CASE("field serialization round trips") {
  Quiver q = quiver_from_json(njson::parse(read_file(data("quiver_xy.json"))));
  std::mt19937_64 rng(91);
  for (int t = 0; t < 30; ++t) {
    PolyField f;
    for (int term = 0; term < 4; ++term) {
      Word w;
      int stars = static_cast<int>(rng() % 3), weight = static_cast<int>(rng() % 4);
      for (int i = 0; i < stars; ++i) w.push_back(bead_star(q, rng() % 2));
      for (int i = 0; i < weight; ++i) w.push_back(bead_plain(q, rng() % 2));
      std::shuffle(w.begin(), w.end(), rng);
      long num = static_cast<long>(rng() % 9) - 4;
      long den = 1 + static_cast<long>(rng() % 3);
      Rat c(num, den);
      c.canonicalize();
      f += pf_word(q, w, c);
    }
    CHECK(polyfield_from_json(q, polyfield_to_json(q, f)) == f);
  }
}

TEST_CASE("field terms accept the one-vertex monomial shorthand") {
  std::string path = std::string(DPCOH_DATA_DIR) + "/../build/mono_tmp.json";
  {
    std::ofstream f(path);
    f << R"({"quiver":{"vertices":["v"],"arrows":[
            {"name":"x","tail":"v","head":"v"},
            {"name":"y","tail":"v","head":"v"}]},
          "terms":[{"coeff":"1","mono":"x^2*y"},
                   {"coeff":"-1","word":["x","x","y"]}]})";
  }
  Result r = run({"trace", path});
  REQUIRE(r.code == 0);
  njson j = njson::parse(r.out);
  CHECK(j["grade0"] == "0");  // the two terms name the same necklace and cancel
  std::remove(path.c_str());
}

TEST_CASE("bracket subcommand") {
  Result r = run({"bracket", data("tensor_quadratic.json"), data("tensor_quadratic.json")});
  REQUIRE(r.code == 0);
  njson j = njson::parse(r.out);
  CHECK(j["result"].empty());  // {P,P} = 0
}
