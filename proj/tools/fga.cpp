// Command-line front end for the free-group-algebra toolkit.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fga/fga.hpp"

namespace {

fga::FieldSpec parse_field(const std::string &s) {
  if (s == "q" || s == "Q")
    return fga::FieldSpec::rationals();
  if (s.rfind("gf:", 0) == 0)
    return fga::FieldSpec::gf(
        static_cast<std::uint32_t>(std::stoul(s.substr(3))));
  throw fga::precondition_error("field must be 'gf:<p>' or 'q'");
}

// A generator spec is either a single element (k = 1) or k entries joined
// with ';'. A spec naming a .json file loads the whole submodule instead.
fga::Submodule load_module(const std::vector<std::string> &specs,
                           fga::FieldSpec field, int rank, std::size_t k) {
  if (specs.size() == 1 && specs[0].size() > 5 &&
      specs[0].rfind(".json") == specs[0].size() - 5) {
    std::ifstream in(specs[0]);
    if (!in)
      throw fga::precondition_error("cannot open " + specs[0]);
    nlohmann::json j;
    in >> j;
    return fga::submodule_from_json(j, field, rank);
  }
  std::vector<fga::AlgebraVector> gens;
  for (const auto &spec : specs) {
    std::vector<fga::AlgebraElement> entries;
    std::string item;
    std::stringstream ss(spec);
    while (std::getline(ss, item, ';'))
      entries.push_back(fga::parse_element(item, field, rank));
    if (entries.size() != k)
      throw fga::precondition_error("generator has " +
                                    std::to_string(entries.size()) +
                                    " entries, expected " + std::to_string(k));
    gens.push_back(fga::AlgebraVector(std::move(entries)));
  }
  return fga::Submodule(k, std::move(gens));
}

fga::Submodule whole_module(fga::FieldSpec field, int rank, std::size_t k) {
  std::vector<fga::AlgebraVector> gens;
  for (std::size_t i = 0; i < k; ++i)
    gens.push_back(fga::AlgebraVector::unit(field, rank, k, i));
  return fga::Submodule(k, std::move(gens));
}

fga::Subgroup load_subgroup(const std::vector<std::string> &specs, int rank) {
  if (specs.size() == 1 && specs[0].size() > 5 &&
      specs[0].rfind(".json") == specs[0].size() - 5) {
    std::ifstream in(specs[0]);
    if (!in)
      throw fga::precondition_error("cannot open " + specs[0]);
    nlohmann::json j;
    in >> j;
    return fga::subgroup_from_json(j, rank);
  }
  std::vector<fga::Word> gens;
  for (const auto &s : specs)
    gens.push_back(fga::parse_word(s, rank));
  return fga::Subgroup(rank, std::move(gens));
}

nlohmann::json vector_json(const fga::AlgebraVector &v) {
  nlohmann::json row = nlohmann::json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    row.push_back(fga::to_string(v[i]));
  return row;
}

nlohmann::json gens_json(const std::vector<fga::AlgebraVector> &gens,
                         std::size_t k) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto &g : gens) {
    if (k == 1)
      out.push_back(fga::to_string(g[0]));
    else
      out.push_back(vector_json(g));
  }
  return out;
}

int print_bool(bool v, bool json) {
  if (json)
    std::cout << nlohmann::json{{"result", v}}.dump() << "\n";
  else
    std::cout << (v ? "true" : "false") << "\n";
  return v ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact computations in free-group algebras: canonical ideal "
               "bases, duality, closures, subgroups, intersections, and "
               "word measures"};
  app.require_subcommand(1);

  std::string field_spec = "gf:2";
  int rank = 2;
  std::size_t ambient_k = 1;
  std::string output = "text";
  std::size_t budget = 100000;
  app.add_option("--field", field_spec, "coefficient field: gf:<p> or q");
  app.add_option("--rank", rank, "rank of the ambient free group");
  app.add_option("--ambient-k", ambient_k, "ambient module width k");
  app.add_option("--output", output, "text or json");
  app.add_option("--budget", budget, "completion insertion cap");

  std::vector<std::string> m_specs, n_specs, h_specs, g_specs;
  std::string f_spec, w_spec;
  std::uint32_t phi_q = 2;
  std::size_t phi_dim = 1;
  std::string phi_method = "exact";

  auto add_module_flags = [&](CLI::App *cmd, bool need_n) {
    cmd->add_option("-M", m_specs, "module generators (repeatable; ';' "
                                   "separates vector entries; or a .json "
                                   "file)")
        ->required();
    auto *n = cmd->add_option("-N", n_specs,
                              "second module (defaults to the whole ambient "
                              "module)");
    (void)need_n;
    (void)n;
  };

  auto *basis = app.add_subcommand("basis", "canonical free basis of a module");
  basis->add_option("-M", m_specs)->required();
  auto *coeffs = app.add_subcommand(
      "coeffs", "express an element in the canonical basis");
  coeffs->add_option("-M", m_specs)->required();
  coeffs->add_option("-f", f_spec, "element or ';'-joined vector")->required();
  auto *member = app.add_subcommand("member", "module membership");
  member->add_option("-M", m_specs)->required();
  member->add_option("-f", f_spec)->required();
  auto *equal = app.add_subcommand("equal", "module equality");
  equal->add_option("-M", m_specs)->required();
  equal->add_option("-N", n_specs)->required();
  auto *rankv = app.add_subcommand("rank", "module rank");
  rankv->add_option("-M", m_specs)->required();
  auto *dual = app.add_subcommand(
      "dual", "dual of -N with respect to the matrix of -M's generators");
  add_module_flags(dual, false);
  auto *closure = app.add_subcommand("closure", "algebraic closure of -M in -N");
  add_module_flags(closure, false);
  auto *isfree = app.add_subcommand("is-free", "is -M a free factor of -N");
  add_module_flags(isfree, false);
  auto *isalg = app.add_subcommand("is-algebraic", "is -M algebraic in -N");
  add_module_flags(isalg, false);
  auto *isprim = app.add_subcommand("is-primitive",
                                    "is -f part of a free basis of -N");
  isprim->add_option("-f", f_spec)->required();
  isprim->add_option("-N", n_specs);
  auto *intersect = app.add_subcommand("intersect", "intersection of -M and -N");
  intersect->add_option("-M", m_specs)->required();
  intersect->add_option("-N", n_specs)->required();

  auto *gclosure =
      app.add_subcommand("group-closure", "algebraic closure of -H in -G");
  gclosure->add_option("-H", h_specs, "subgroup generator words")->required();
  gclosure->add_option("-G", g_specs, "ambient subgroup (defaults to F)");
  auto *gisfree = app.add_subcommand("group-is-free",
                                     "is -H a free factor of -G");
  gisfree->add_option("-H", h_specs)->required();
  gisfree->add_option("-G", g_specs);
  auto *gisalg = app.add_subcommand("group-is-algebraic",
                                    "is -H algebraic in -G");
  gisalg->add_option("-H", h_specs)->required();
  gisalg->add_option("-G", g_specs);
  auto *wprim = app.add_subcommand("word-primitive",
                                   "is the word -w primitive in -G");
  wprim->add_option("-w", w_spec)->required();
  wprim->add_option("-G", g_specs);

  auto *phi = app.add_subcommand("phi", "word measure of -M against -N");
  phi->add_option("-M", m_specs)->required();
  phi->add_option("-N", n_specs)->required();
  phi->add_option("-q,--q", phi_q, "field order (prime)");
  phi->add_option("--method", phi_method, "exact or direct");
  // "--N" (dimension) would collide with the short "-N" above if declared on
  // the subcommand, so it lives on the app and phi falls through to it
  app.add_option("--N", phi_dim, "representation dimension for phi");

  // global flags may appear after the verb
  for (CLI::App *sc : app.get_subcommands([](const CLI::App *) { return true; }))
    sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  bool json = output == "json";
  try {
    fga::completion_insertion_cap() = budget;
    fga::FieldSpec field = parse_field(field_spec);

    auto module_m = [&] { return load_module(m_specs, field, rank, ambient_k); };
    auto module_n = [&] {
      return n_specs.empty() ? whole_module(field, rank, ambient_k)
                             : load_module(n_specs, field, rank, ambient_k);
    };
    auto vector_f = [&] {
      std::vector<fga::AlgebraElement> entries;
      std::string item;
      std::stringstream ss(f_spec);
      while (std::getline(ss, item, ';'))
        entries.push_back(fga::parse_element(item, field, rank));
      return fga::AlgebraVector(std::move(entries));
    };
    auto group_h = [&] { return load_subgroup(h_specs, rank); };
    auto group_g = [&] {
      return g_specs.empty() ? fga::Subgroup::whole(rank)
                             : load_subgroup(g_specs, rank);
    };
    auto print_module = [&](const fga::Submodule &m) {
      nlohmann::json out = gens_json(module_basis(m), m.ambient_k());
      if (json)
        std::cout << nlohmann::json{{"rank", module_rank(m)},
                                    {"basis", out}}
                         .dump()
                  << "\n";
      else
        std::cout << out.dump() << "\n";
    };
    auto print_group = [&](const fga::Subgroup &h) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto &w : h.gens)
        out.push_back(fga::to_string(w));
      if (json)
        std::cout << nlohmann::json{{"rank", fga::subgroup_rank(h)},
                                    {"gens", out}}
                         .dump()
                  << "\n";
      else
        std::cout << out.dump() << "\n";
    };

    if (*basis) {
      fga::Submodule m = module_m();
      if (m.ambient_k() == 1) {
        nlohmann::json out = fga::to_json(m.groebner());
        if (json)
          std::cout << out.dump() << "\n";
        else {
          std::cout << "rank " << out["rank"] << "\n";
          std::cout << "firsts " << out["firsts"].dump() << "\n";
          std::cout << "seconds " << out["seconds"].dump() << "\n";
        }
      } else
        print_module(m);
      return 0;
    }
    if (*coeffs) {
      fga::Submodule m = module_m();
      fga::AlgebraVector f = vector_f();
      if (m.ambient_k() == 1) {
        auto [cs, rem] = fga::extract_coefficients(m.groebner(), f[0]);
        nlohmann::json out = nlohmann::json::array();
        for (const auto &c : cs)
          out.push_back(fga::to_string(c));
        nlohmann::json res{{"coeffs", out},
                           {"remainder", fga::to_string(rem)}};
        std::cout << res.dump() << "\n";
      } else {
        auto cs = fga::express_in_basis(m, f);
        nlohmann::json out = nlohmann::json::array();
        for (const auto &c : cs)
          out.push_back(fga::to_string(c));
        std::cout << nlohmann::json{{"coeffs", out}}.dump() << "\n";
      }
      return 0;
    }
    if (*member)
      return print_bool(fga::module_membership(module_m(), vector_f()), json);
    if (*equal)
      return print_bool(fga::module_equal(module_m(), module_n()), json);
    if (*rankv) {
      std::size_t rk = fga::module_rank(module_m());
      if (json)
        std::cout << nlohmann::json{{"rank", rk}}.dump() << "\n";
      else
        std::cout << rk << "\n";
      return 0;
    }
    if (*dual) {
      fga::Submodule m = module_m();
      fga::AlgebraMatrix q = fga::AlgebraMatrix::from_columns(m.gens());
      print_module(fga::q_dual(q, module_n()));
      return 0;
    }
    if (*closure) {
      print_module(fga::algebraic_closure(module_m(), module_n()));
      return 0;
    }
    if (*isfree)
      return print_bool(fga::is_free_factor(module_m(), module_n()), json);
    if (*isalg)
      return print_bool(fga::is_algebraic(module_m(), module_n()), json);
    if (*isprim)
      return print_bool(fga::is_primitive(vector_f(), module_n()), json);
    if (*intersect) {
      print_module(fga::module_intersection(module_m(), module_n()));
      return 0;
    }
    if (*gclosure) {
      print_group(fga::group_algebraic_closure(group_h(), group_g(), field));
      return 0;
    }
    if (*gisfree)
      return print_bool(fga::group_is_free_factor(group_h(), group_g(), field),
                        json);
    if (*gisalg)
      return print_bool(fga::group_is_algebraic(group_h(), group_g(), field),
                        json);
    if (*wprim)
      return print_bool(fga::word_is_primitive(fga::parse_word(w_spec, rank),
                                               group_g(), field),
                        json);
    if (*phi) {
      fga::FieldSpec pf = fga::FieldSpec::gf(phi_q);
      fga::Submodule i = load_module(m_specs, pf, rank, ambient_k);
      fga::Submodule jj = load_module(n_specs, pf, rank, ambient_k);
      fga::Rational v = phi_method == "direct"
                            ? fga::phi_direct(i, jj, phi_q, phi_dim)
                            : fga::phi_exact(i, jj, phi_q, phi_dim);
      std::string frac = numerator(v).str() + "/" + denominator(v).str();
      double dec = v.convert_to<double>();
      if (json)
        std::cout << nlohmann::json{{"value", frac}, {"decimal", dec}}.dump()
                  << "\n";
      else
        std::cout << frac << " (" << dec << ")\n";
      return 0;
    }
  } catch (const fga::parse_error &e) {
    std::cerr << nlohmann::json{{"error", "parse"}, {"message", e.what()}}
                     .dump()
              << "\n";
    return 2;
  } catch (const fga::budget_error &e) {
    std::cerr << nlohmann::json{{"error", "budget"}, {"message", e.what()}}
                     .dump()
              << "\n";
    return 2;
  } catch (const fga::mismatch_error &e) {
    std::cerr << nlohmann::json{{"error", "mismatch"}, {"message", e.what()}}
                     .dump()
              << "\n";
    return 2;
  } catch (const fga::error &e) {
    std::cerr << nlohmann::json{{"error", "invalid"}, {"message", e.what()}}
                     .dump()
              << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << nlohmann::json{{"error", "internal"}, {"message", e.what()}}
                     .dump()
              << "\n";
    return 2;
  }
  return 2;
}
