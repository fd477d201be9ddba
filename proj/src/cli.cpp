#include "dpcoh/cli.hpp"

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dpcoh/classical.hpp"
#include "dpcoh/io.hpp"

namespace dpcoh {

namespace {

struct Range {
  int lo = 0, hi = 0;
};

// "0..5" or "3"
Range parse_range(const std::string& s) {
  auto pos = s.find("..");
  try {
    if (pos == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    Range r{std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
    if (r.lo > r.hi) throw ValidationError("empty range '" + s + "'");
    return r;
  } catch (const ValidationError&) {
    throw;
  } catch (...) {
    throw ValidationError("bad range '" + s + "'");
  }
}

njson caps_json(const Caps& c) {
  return njson{{"max_stars", c.max_stars},
               {"max_weight", c.max_weight},
               {"max_chain", c.max_chain}};
}

njson header(const std::string& command, const std::string& input_bytes, const Caps& caps,
             unsigned long seed) {
  njson j;
  j["command"] = command;
  j["input_hash"] = hash_hex(fnv1a64(input_bytes));
  j["caps"] = caps_json(caps);
  j["seed"] = seed;
  return j;
}

njson constants_json(const StructureConstants& sc) { return algebra_to_json(sc); }

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact double Poisson cohomology of quiver path algebras"};
  app.require_subcommand(1);

  Caps caps = caps_from_env();
  bool serial = false;
  unsigned long seed = 0;
  app.add_option("--max-stars", caps.max_stars, "star-degree cap");
  app.add_option("--max-weight", caps.max_weight, "weight cap");
  app.add_option("--max-chain", caps.max_chain, "chain dimension cap");
  app.add_flag("--serial", serial, "use the serial reference kernels");
  app.add_option("--seed", seed, "seed for randomized subcommands");

  std::string file1, file2, stars_range = "0..2", weights_range = "0..4";
  std::string psi_text = "x^2", format = "json";
  bool want_reps = false, want_catalogue = false, want_compare = false;
  int random_trials = 0, dim = 2, max_degree = 3, tensor_weight = 1;

  auto* c_check = app.add_subcommand("check-tensor", "test {P,P} = 0 with obstruction");
  c_check->add_option("file", file1, "tensor document")->required();
  c_check->add_option("--weight", tensor_weight, "declared weight of the zero tensor");

  auto* c_bracket = app.add_subcommand("bracket", "bracket of two field documents");
  c_bracket->add_option("file1", file1)->required();
  c_bracket->add_option("file2", file2)->required();

  auto* c_coh = app.add_subcommand("cohomology", "bidegree cohomology table");
  c_coh->add_option("file", file1, "tensor document")->required();
  c_coh->add_option("--stars", stars_range, "star range, e.g. 0..2");
  c_coh->add_option("--weights", weights_range, "weight range, e.g. 0..5");
  c_coh->add_flag("--representatives", want_reps, "include representative cocycles");
  c_coh->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* c_lin = app.add_subcommand("classify-linear", "linear tensors vs products");
  c_lin->add_flag("--catalogue", want_catalogue, "print the seven 2-dim tensors");
  c_lin->add_option("--random", random_trials, "run N random equivalence trials");
  c_lin->add_option("--dim", dim, "dimension for random trials (default 2)");

  auto* c_hoch = app.add_subcommand("hochschild", "Hochschild dimensions of an algebra");
  c_hoch->add_option("file", file1, "algebra document")->required();
  c_hoch->add_option("--max", max_degree, "top degree (default 3)");
  c_hoch->add_flag("--compare", want_compare, "compare with weight-1 tensor cohomology");
  c_hoch->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* c_cls = app.add_subcommand("classical", "plane Poisson cohomology of psi dx^dy");
  c_cls->add_option("--psi", psi_text, "bivector coefficient, e.g. x^2")->required();
  c_cls->add_option("--max-degree", max_degree, "top coefficient degree");
  c_cls->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* c_tr = app.add_subcommand("trace", "trace a field document to the plane");
  c_tr->add_option("file", file1, "field document")->required();

  for (auto* sub : {c_check, c_bracket, c_coh, c_lin, c_hoch, c_cls, c_tr})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Exec exec = serial ? Exec::Serial : Exec::Parallel;

  try {
    if (*c_check) {
      std::string bytes = read_file(file1);
      FieldDoc doc = fielddoc_from_json(njson::parse(bytes));
      TensorP P = make_tensor(doc.quiver, doc.field, tensor_weight);
      PolyField obstruction;
      bool ok = is_poisson_tensor(doc.quiver, P, &obstruction);
      njson j = header("check-tensor", bytes, caps, seed);
      j["is_poisson"] = ok;
      j["obstruction"] = polyfield_to_json(doc.quiver, obstruction);
      out << j.dump(2) << "\n";
      return 0;
    }

    if (*c_bracket) {
      std::string b1 = read_file(file1), b2 = read_file(file2);
      FieldDoc d1 = fielddoc_from_json(njson::parse(b1));
      FieldDoc d2 = fielddoc_from_json(njson::parse(b2));
      if (quiver_to_json(d1.quiver) != quiver_to_json(d2.quiver))
        throw ValidationError("bracket: the two documents use different quivers");
      PolyField r = kontsevich_bracket(d1.quiver, d1.field, d2.field);
      njson j = header("bracket", b1 + b2, caps, seed);
      j["result"] = polyfield_to_json(d1.quiver, r);
      out << j.dump(2) << "\n";
      return 0;
    }

    if (*c_coh) {
      std::string bytes = read_file(file1);
      FieldDoc doc = fielddoc_from_json(njson::parse(bytes));
      TensorP P = make_tensor(doc.quiver, doc.field, tensor_weight);
      PolyField obstruction;
      if (!is_poisson_tensor(doc.quiver, P, &obstruction))
        throw ValidationError("cohomology: {P,P} != 0, not a Poisson tensor");
      Range ks = parse_range(stars_range), ws = parse_range(weights_range);
      ComplexDriver driver(doc.quiver, P, caps, exec);
      auto reports = driver.summary(ks.lo, ks.hi, ws.lo, ws.hi, want_reps);
      if (format == "csv") {
        out << "k,w,dim_chain,dim_kernel,dim_image_in,dim_H\n";
        for (const auto& r : reports)
          out << r.k << ',' << r.w << ',' << r.dim_chain << ',' << r.dim_kernel << ','
              << r.dim_image_in << ',' << r.dim_H << "\n";
        return 0;
      }
      njson j = header("cohomology", bytes, caps, seed);
      j["tensor_weight"] = P.weight;
      njson rows = njson::array();
      for (const auto& r : reports) {
        njson row{{"k", r.k},
                  {"w", r.w},
                  {"dim_chain", r.dim_chain},
                  {"dim_kernel", r.dim_kernel},
                  {"dim_image_in", r.dim_image_in},
                  {"dim_H", r.dim_H}};
        if (want_reps) {
          njson reps = njson::array();
          for (const auto& f : r.representatives)
            reps.push_back(polyfield_to_json(doc.quiver, f));
          row["representatives"] = reps;
        }
        if (r.k >= 2)
          row["note"] = "computed exactly; no published value to cross-check";
        rows.push_back(row);
      }
      j["reports"] = rows;
      out << j.dump(2) << "\n";
      return 0;
    }

    if (*c_lin) {
      njson j = header("classify-linear", "", caps, seed);
      if (want_catalogue) {
        njson cat = njson::array();
        for (const auto& entry : catalogue_2dim()) {
          Quiver q = loop_quiver(entry.sc);
          TensorP P = tensor_from_constants(q, entry.sc);
          PolyField obstruction;
          bool ok = is_poisson_tensor(q, P, &obstruction);
          cat.push_back({{"name", entry.name},
                         {"algebra", constants_json(entry.sc)},
                         {"tensor", polyfield_to_json(q, P.field)},
                         {"is_poisson", ok}});
        }
        j["catalogue"] = cat;
      }
      if (random_trials > 0) {
        std::mt19937_64 rng(seed);
        int assoc = 0;
        bool holds = true;
        for (int t = 0; t < random_trials; ++t) {
          StructureConstants sc = random_constants(dim, rng);
          Quiver q = loop_quiver(sc);
          bool a = is_associative(sc);
          bool p = is_poisson_tensor(q, tensor_from_constants(q, sc));
          if (a) ++assoc;
          if (a != p) holds = false;
        }
        j["trials"] = random_trials;
        j["dim"] = dim;
        j["associative_count"] = assoc;
        j["equivalence_holds"] = holds;
      }
      out << j.dump(2) << "\n";
      return 0;
    }

    if (*c_hoch) {
      std::string bytes = read_file(file1);
      StructureConstants sc = algebra_from_json(njson::parse(bytes));
      HochschildReport rep = hochschild_dims(sc, max_degree, caps);
      if (format == "csv") {
        out << "i,dim_chain,rank_d,dim_HH\n";
        for (int i = 0; i <= rep.max_degree; ++i)
          out << i << ',' << rep.dim_chain[i] << ',' << rep.rank_d[i] << ','
              << rep.dim_HH[i] << "\n";
        return 0;
      }
      njson j = header("hochschild", bytes, caps, seed);
      njson rows = njson::array();
      for (int i = 0; i <= rep.max_degree; ++i)
        rows.push_back({{"i", i},
                        {"dim_chain", rep.dim_chain[i]},
                        {"rank_d", rep.rank_d[i]},
                        {"dim_HH", rep.dim_HH[i]}});
      j["dims"] = rows;
      if (want_compare) {
        njson cmp = njson::array();
        for (const auto& row : compare_weight1(sc, max_degree, caps))
          cmp.push_back({{"i", row.degree},
                         {"dim_HH", row.dim_HH},
                         {"dim_HP_weight1", row.dim_HP},
                         {"dims_match", row.dims_match},
                         {"intertwines", row.intertwines}});
        j["compare_weight1"] = cmp;
      }
      out << j.dump(2) << "\n";
      return 0;
    }

    if (*c_cls) {
      CommPoly psi = cp_parse(psi_text);
      ClassicalReport rep = classical_cohomology(psi, max_degree);
      if (format == "csv") {
        out << "degree,dim_H0,dim_H1,dim_H2\n";
        for (const auto& r : rep.rows)
          out << r.degree << ',' << r.dim_H0 << ',' << r.dim_H1 << ',' << r.dim_H2 << "\n";
        return 0;
      }
      njson j = header("classical", psi_text, caps, seed);
      j["psi"] = cp_str(psi);
      njson rows = njson::array();
      for (const auto& r : rep.rows)
        rows.push_back({{"degree", r.degree},
                        {"dim_H0", r.dim_H0},
                        {"dim_H1", r.dim_H1},
                        {"dim_H2", r.dim_H2}});
      j["degrees"] = rows;
      j["totals"] = {{"H0", rep.total_H0}, {"H1", rep.total_H1}, {"H2", rep.total_H2}};
      out << j.dump(2) << "\n";
      return 0;
    }

    if (*c_tr) {
      std::string bytes = read_file(file1);
      FieldDoc doc = fielddoc_from_json(njson::parse(bytes));
      TracedField t = trace_map(doc.quiver, doc.field);
      njson j = header("trace", bytes, caps, seed);
      j["grade0"] = cp_str(t.grade0);
      j["grade1"] = njson::array({cp_str(t.grade1.f), cp_str(t.grade1.g)});
      j["grade2"] = cp_str(t.grade2);
      out << j.dump(2) << "\n";
      return 0;
    }
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const njson::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace dpcoh
