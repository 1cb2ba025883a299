// Command-line front end: every operation reads JSON (inline or @file),
// prints one JSON report (or DOT text) on stdout, and exits 0 on success,
// 2 on input problems, 3 on capacity limits.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pointfree/complexes.hpp"
#include "pointfree/dot.hpp"
#include "pointfree/errors.hpp"
#include "pointfree/groebner.hpp"
#include "pointfree/hochster.hpp"
#include "pointfree/json_io.hpp"
#include "pointfree/localized.hpp"
#include "pointfree/scheme.hpp"
#include "pointfree/ttc.hpp"

using namespace pointfree;
using jsonio::json;

namespace {

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError(std::string(what) + ": malformed JSON");
  return j;
}

/** Inline JSON, or @path to read a file. */
json load_json(const std::string& arg, const char* what) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw InputError(std::string(what) + ": cannot open '" + arg.substr(1) + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), what);
  }
  return parse_json(arg, what);
}

/** One value from either an inline flag or a --file flag. */
json load_input(const std::string& inline_arg, const std::string& file_arg,
                const char* what) {
  if (!inline_arg.empty() && !file_arg.empty()) {
    throw InputError(std::string(what) + ": give inline JSON or --file, not both");
  }
  if (!file_arg.empty()) return load_json("@" + file_arg, what);
  if (!inline_arg.empty()) return load_json(inline_arg, what);
  throw InputError(std::string(what) + ": missing input");
}

Caps caps_from_env() {
  Caps caps;
  const char* env = std::getenv("POINTFREE_CAP");
  if (!env || !*env) return caps;
  std::istringstream parts{std::string(env)};
  std::string item;
  while (std::getline(parts, item, ',')) {
    auto eq = item.find('=');
    std::string key = eq == std::string::npos ? "lattice" : item.substr(0, eq);
    std::string val = eq == std::string::npos ? item : item.substr(eq + 1);
    std::size_t n = 0;
    try {
      n = static_cast<std::size_t>(std::stoul(val));
    } catch (const std::exception&) {
      throw InputError("POINTFREE_CAP: bad number '" + val + "'");
    }
    if (key == "lattice") {
      caps.lattice_generators = n;
    } else if (key == "covering") {
      caps.covering_elements = n;
    } else if (key == "universe") {
      caps.universe_generators = n;
    } else {
      throw InputError("POINTFREE_CAP: unknown cap '" + key + "' (lattice, covering, universe)");
    }
  }
  return caps;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

RingPtr ring_arg(const std::string& s) {
  return jsonio::ring_from_json(load_json(s, "ring"));
}

Matrix matrix_from_json(const RingPtr& ring, const json& j) {
  if (!j.is_array()) throw InputError("matrix: expected an array of rows");
  std::size_t rows = j.size();
  std::size_t cols = rows > 0 && j[0].is_array() ? j[0].size() : 0;
  Matrix m = Matrix::zero(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InputError("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      m.at(r, c) = jsonio::value_from_json(ring, j[r][c]);
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m.ring->str(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json modules_to_json(const std::map<int, ModulePresentation>& groups) {
  json out = json::object();
  for (const auto& [n, h] : groups) {
    if (h.is_zero_module()) continue;
    json torsion = json::array();
    for (const auto& d : h.divisors) torsion.push_back(h.ring->str(d));
    out[std::to_string(n)] = json{{"divisors", std::move(torsion)},
                                  {"rank", h.free_rank}};
  }
  return out;
}

// Option bundles.  Each subcommand owns one through a shared_ptr captured
// by its callback.
struct Args {
  std::string ring, source, target, images, expr, f, p, lhs, rhs, gens, ideal;
  std::string lattice, complex, a, b, file, ttc, scheme, order = "grevlex";
  std::string model = "cech", kind = "zariski", primes, torsion, cover, samples;
  std::string dictionary, factors, to;
  unsigned bound = 8, exponent = 3, stage = 1, free_rank = 1;
  int degree = 0;
  bool top = false, poset = false;
};

using ArgsPtr = std::shared_ptr<Args>;

ArgsPtr bundle(CLI::App*) { return std::make_shared<Args>(); }

DLatticePresentation lattice_arg(const Args& a) {
  return jsonio::lattice_from_json(load_input(a.lattice, a.file, "lattice"));
}

ChainComplex complex_arg(const Args& a) {
  return jsonio::complex_from_json(load_input(a.complex, a.file, "complex"));
}

ChainComplex complex_operand(const std::string& s, const char* what) {
  return jsonio::complex_from_json(load_json(s, what));
}

TTPresentation tt_arg(const Args& a) {
  return jsonio::tt_from_json(load_input(a.ttc, a.file, "category"));
}

Scheme scheme_arg(const Args& a) {
  return glue(jsonio::scheme_from_json(load_input(a.scheme, a.file, "scheme")));
}

void add_ring_verbs(CLI::App& app) {
  auto* ring = app.add_subcommand("ring", "exact ring arithmetic");
  ring->require_subcommand(1);

  {
    auto* c = ring->add_subcommand("eval", "parse an element, print its canonical form");
    auto a = bundle(c);
    c->add_option("--ring", a->ring, "ring JSON (or @file)")->required();
    c->add_option("--expr", a->expr, "element expression")->required();
    c->callback([a] {
      RingPtr R = ring_arg(a->ring);
      emit(json{{"value", R->str(R->parse(a->expr))}});
    });
  }
  {
    auto* c = ring->add_subcommand("radical-member", "decide f ∈ √(g1,…,gk)");
    auto a = bundle(c);
    c->add_option("--ring", a->ring)->required();
    c->add_option("--f", a->f, "element expression")->required();
    c->add_option("--ideal", a->ideal, "JSON array of generators")->required();
    c->callback([a] {
      RingPtr R = ring_arg(a->ring);
      auto gens = jsonio::values_from_json(R, load_json(a->ideal, "ideal"));
      emit(json{{"result", radical_member(R, R->parse(a->f), gens)}});
    });
  }
  {
    auto* c = ring->add_subcommand("groebner", "reduced Groebner basis");
    auto a = bundle(c);
    c->add_option("--ring", a->ring)->required();
    c->add_option("--gens", a->gens, "JSON array of polynomials")->required();
    c->add_option("--order", a->order, "grevlex (default) or lex");
    c->callback([a] {
      RingPtr R = ring_arg(a->ring);
      auto gens = jsonio::values_from_json(R, load_json(a->gens, "gens"));
      auto basis = groebner_basis(R, gens, monomial_order_from_string(a->order));
      json out = json::array();
      for (const auto& g : basis) out.push_back(R->str(g));
      emit(json{{"basis", std::move(out)}});
    });
  }
  {
    auto* c = ring->add_subcommand("snf", "Smith normal form U*M*V = D");
    auto a = bundle(c);
    c->add_option("--ring", a->ring)->required();
    c->add_option("--matrix", a->lhs, "JSON array of rows")->required();
    c->callback([a] {
      RingPtr R = ring_arg(a->ring);
      Matrix m = matrix_from_json(R, load_json(a->lhs, "matrix"));
      SnfResult snf = smith_normal_form(m);
      json divisors = json::array();
      for (const auto& d : snf.divisors) divisors.push_back(R->str(d));
      emit(json{{"D", matrix_to_json(snf.D)},
                {"U", matrix_to_json(snf.U)},
                {"V", matrix_to_json(snf.V)},
                {"divisors", std::move(divisors)}});
    });
  }
}

void add_lattice_verbs(CLI::App& app, const Caps& caps) {
  auto* lat = app.add_subcommand("lattice", "finitely presented distributive lattices");
  lat->require_subcommand(1);

  auto common = [](CLI::App* c, const ArgsPtr& a) {
    c->add_option("--lattice", a->lattice, "lattice JSON (or @file)");
    c->add_option("--file", a->file, "path to lattice JSON");
  };

  {
    auto* c = lat->add_subcommand("entails", "decide lhs ≤ rhs");
    auto a = bundle(c);
    common(c, a);
    c->add_option("--lhs", a->lhs, "term JSON")->required();
    c->add_option("--rhs", a->rhs, "term JSON")->required();
    c->callback([a, &caps] {
      auto L = lattice_arg(*a);
      emit(json{{"result", entails(L, jsonio::term_from_json(load_json(a->lhs, "lhs")),
                                   jsonio::term_from_json(load_json(a->rhs, "rhs")), caps)}});
    });
  }
  {
    auto* c = lat->add_subcommand("meet", "normal form of lhs ∧ rhs");
    auto a = bundle(c);
    common(c, a);
    c->add_option("--lhs", a->lhs)->required();
    c->add_option("--rhs", a->rhs)->required();
    c->callback([a] {
      auto L = lattice_arg(*a);
      emit(jsonio::term_to_json(term_meet(L, jsonio::term_from_json(load_json(a->lhs, "lhs")),
                                          jsonio::term_from_json(load_json(a->rhs, "rhs")))));
    });
  }
  {
    auto* c = lat->add_subcommand("join", "normal form of lhs ∨ rhs");
    auto a = bundle(c);
    common(c, a);
    c->add_option("--lhs", a->lhs)->required();
    c->add_option("--rhs", a->rhs)->required();
    c->callback([a] {
      auto L = lattice_arg(*a);
      emit(jsonio::term_to_json(term_join(L, jsonio::term_from_json(load_json(a->lhs, "lhs")),
                                          jsonio::term_from_json(load_json(a->rhs, "rhs")))));
    });
  }
  {
    auto* c = lat->add_subcommand("points", "two-valued models in lexicographic order");
    auto a = bundle(c);
    common(c, a);
    c->callback([a, &caps] {
      auto L = lattice_arg(*a);
      auto pts = points(L, caps);
      json list = json::array();
      for (const auto& p : pts) list.push_back(jsonio::point_to_json(p));
      emit(json{{"count", pts.size()}, {"points", std::move(list)}});
    });
  }
  {
    auto* c = lat->add_subcommand("dual", "the opposite lattice");
    auto a = bundle(c);
    common(c, a);
    c->callback([a] { emit(jsonio::lattice_to_json(dual_lattice(lattice_arg(*a)))); });
  }
  {
    auto* c = lat->add_subcommand("birkhoff", "finite representation round trip");
    auto a = bundle(c);
    common(c, a);
    c->callback([a, &caps] {
      emit(json{{"result", birkhoff_roundtrip(lattice_arg(*a), caps)}});
    });
  }
  {
    auto* c = lat->add_subcommand("dot", "Hasse diagram as Graphviz text");
    auto a = bundle(c);
    common(c, a);
    c->add_flag("--points", a->poset, "emit the point poset instead of the lattice");
    c->callback([a, &caps] {
      auto L = lattice_arg(*a);
      std::cout << (a->poset ? points_dot(L, caps) : lattice_dot(L, caps));
    });
  }
}

void add_zar_verbs(CLI::App& app) {
  auto* zar = app.add_subcommand("zar", "radicals of finitely generated ideals");
  zar->require_subcommand(1);

  {
    auto* c = zar->add_subcommand("support", "√(f)");
    auto a = bundle(c);
    c->add_option("--ring", a->ring)->required();
    c->add_option("--f", a->f)->required();
    c->callback([a] {
      RingPtr R = ring_arg(a->ring);
      emit(jsonio::ideal_to_json(zar_support(R, R->parse(a->f))));
    });
  }
  {
    auto* c = zar->add_subcommand("leq", "√(lhs) ⊆ √(rhs)");
    auto a = bundle(c);
    c->add_option("--ring", a->ring)->required();
    c->add_option("--lhs", a->lhs, "JSON array of generators")->required();
    c->add_option("--rhs", a->rhs, "JSON array of generators")->required();
    c->callback([a] {
      RingPtr R = ring_arg(a->ring);
      emit(json{{"result", zar_leq(jsonio::ideal_from_json(R, load_json(a->lhs, "lhs")),
                                   jsonio::ideal_from_json(R, load_json(a->rhs, "rhs")))}});
    });
  }
  {
    auto* c = zar->add_subcommand("meet", "√(I·J)");
    auto a = bundle(c);
    c->add_option("--ring", a->ring)->required();
    c->add_option("--lhs", a->lhs)->required();
    c->add_option("--rhs", a->rhs)->required();
    c->callback([a] {
      RingPtr R = ring_arg(a->ring);
      emit(jsonio::ideal_to_json(zar_meet(jsonio::ideal_from_json(R, load_json(a->lhs, "lhs")),
                                          jsonio::ideal_from_json(R, load_json(a->rhs, "rhs")))));
    });
  }
  {
    auto* c = zar->add_subcommand("join", "√(I+J)");
    auto a = bundle(c);
    c->add_option("--ring", a->ring)->required();
    c->add_option("--lhs", a->lhs)->required();
    c->add_option("--rhs", a->rhs)->required();
    c->callback([a] {
      RingPtr R = ring_arg(a->ring);
      emit(jsonio::ideal_to_json(zar_join(jsonio::ideal_from_json(R, load_json(a->lhs, "lhs")),
                                          jsonio::ideal_from_json(R, load_json(a->rhs, "rhs")))));
    });
  }
  {
    auto* c = zar->add_subcommand("universal",
                                  "frame-map extension of the powerset support");
    auto a = bundle(c);
    c->add_option("--ring", a->ring)->required();
    c->add_option("--primes", a->primes, "JSON array of primes")->required();
    c->add_option("--ideal", a->ideal)->required();
    c->callback([a] {
      RingPtr R = ring_arg(a->ring);
      json pj = load_json(a->primes, "primes");
      if (!pj.is_array()) throw InputError("primes: expected an array");
      std::vector<Int> primes;
      for (const auto& p : pj) primes.push_back(jsonio::int_from_json(p));
      SupportMap sm = powerset_support(R, primes);
      emit(jsonio::term_to_json(
          universal_support_map(sm, jsonio::ideal_from_json(R, load_json(a->ideal, "ideal")))));
    });
  }
  {
    auto* c = zar->add_subcommand("induced", "push a radical forward along a ring map");
    auto a = bundle(c);
    c->add_option("--source", a->source, "source ring JSON")->required();
    c->add_option("--target", a->target, "target ring JSON")->required();
    c->add_option("--images", a->images, "JSON object: variable -> element");
    c->add_option("--ideal", a->ideal)->required();
    c->callback([a] {
      RingPtr S = ring_arg(a->source);
      RingPtr T = ring_arg(a->target);
      std::map<std::string, Value> images;
      if (!a->images.empty()) {
        json ij = load_json(a->images, "images");
        if (!ij.is_object()) throw InputError("images: expected an object");
        for (const auto& [name, img] : ij.items()) {
          images.emplace(name, jsonio::value_from_json(T, img));
        }
      }
      RingHom hom = make_hom(S, T, std::move(images));
      emit(jsonio::ideal_to_json(
          induced_map(hom, jsonio::ideal_from_json(S, load_json(a->ideal, "ideal")))));
    });
  }
  {
    auto* c = zar->add_subcommand("point", "membership of a prime point in an open");
    auto a = bundle(c);
    c->add_option("--ring", a->ring)->required();
    c->add_option("--p", a->p, "prime element (0 = generic point)")->required();
    c->add_option("--ideal", a->ideal)->required();
    c->add_option("--kind", a->kind, "zariski (default) or hochster");
    c->callback([a] {
      RingPtr R = ring_arg(a->ring);
      RadicalIdeal I = jsonio::ideal_from_json(R, load_json(a->ideal, "ideal"));
      LatticeOpen open = a->kind == "hochster"  ? hochster_open(std::move(I))
                         : a->kind == "zariski" ? zariski_open(std::move(I))
                                                : throw InputError("kind: zariski or hochster");
      emit(json{{"result", point_contains(R->parse(a->p), open)}});
    });
  }
}

void add_complex_verbs(CLI::App& app, const Caps& caps) {
  auto* cx = app.add_subcommand("complex", "bounded complexes of free modules");
  cx->require_subcommand(1);

  auto common = [](CLI::App* c, const ArgsPtr& a) {
    c->add_option("--complex", a->complex, "complex JSON (or @file)");
    c->add_option("--file", a->file, "path to complex JSON");
  };

  {
    auto* c = cx->add_subcommand("koszul", "Koszul complex on a generator list");
    auto a = bundle(c);
    c->add_option("--ring", a->ring)->required();
    c->add_option("--gens", a->gens)->required();
    c->callback([a, &caps] {
      RingPtr R = ring_arg(a->ring);
      emit(jsonio::complex_to_json(
          koszul(R, jsonio::values_from_json(R, load_json(a->gens, "gens")), caps)));
    });
  }
  {
    auto* c = cx->add_subcommand("homology", "invariant factors of H_n");
    auto a = bundle(c);
    common(c, a);
    auto* deg = c->add_option("--degree", a->degree, "single degree (default: all nonzero)");
    c->callback([a, deg] {
      ChainComplex C = complex_arg(*a);
      if (deg->count() > 0) {
        ModulePresentation h = homology(C, a->degree);
        json torsion = json::array();
        for (const auto& d : h.divisors) torsion.push_back(h.ring->str(d));
        json out = json::object();
        out[std::to_string(a->degree)] =
            json{{"divisors", std::move(torsion)}, {"rank", h.free_rank}};
        emit(out);
        return;
      }
      std::map<int, ModulePresentation> groups;
      for (int n = C.lo; n <= C.hi; ++n) groups.emplace(n, homology(C, n));
      emit(modules_to_json(groups));
    });
  }
  {
    auto* c = cx->add_subcommand("tensor", "tensor product of two complexes");
    auto a = bundle(c);
    c->add_option("--a", a->a, "complex JSON (or @file)")->required();
    c->add_option("--b", a->b, "complex JSON (or @file)")->required();
    c->callback([a] {
      emit(jsonio::complex_to_json(tensor_product(complex_operand(a->a, "a"),
                                                  complex_operand(a->b, "b"))));
    });
  }
  {
    auto* c = cx->add_subcommand("torsion", "homology killed by a power of the ideal");
    auto a = bundle(c);
    common(c, a);
    c->add_option("--ideal", a->ideal)->required();
    c->callback([a] {
      ChainComplex C = complex_arg(*a);
      emit(json{{"result",
                 is_I_torsion(C, jsonio::values_from_json(C.ring, load_json(a->ideal, "ideal")))}});
    });
  }
  {
    auto* c = cx->add_subcommand("invertible", "f acts invertibly on homology");
    auto a = bundle(c);
    common(c, a);
    c->add_option("--f", a->f)->required();
    c->callback([a] {
      ChainComplex C = complex_arg(*a);
      emit(json{{"result", is_f_invertible(C, C.ring->parse(a->f))}});
    });
  }
  {
    auto* c = cx->add_subcommand("supph", "radical ideal supporting the homology");
    auto a = bundle(c);
    common(c, a);
    c->callback([a] { emit(jsonio::ideal_to_json(supph(complex_arg(*a)))); });
  }
  {
    auto* c = cx->add_subcommand("invariant", "supph as a Hochster-ordered open");
    auto a = bundle(c);
    common(c, a);
    c->callback([a] { emit(jsonio::open_to_json(loc_invariant(complex_arg(*a)))); });
  }
  {
    auto* c = cx->add_subcommand("equiv", "degreewise isomorphic homology");
    auto a = bundle(c);
    c->add_option("--a", a->a)->required();
    c->add_option("--b", a->b)->required();
    c->callback([a] {
      emit(json{{"result", cellular_equiv(complex_operand(a->a, "a"),
                                          complex_operand(a->b, "b"))}});
    });
  }
  {
    auto* c = cx->add_subcommand("hom", "maps in the derived category, all shifts");
    auto a = bundle(c);
    c->add_option("--a", a->a)->required();
    c->add_option("--b", a->b)->required();
    c->callback([a] {
      emit(modules_to_json(
          derived_hom_groups(complex_operand(a->a, "a"), complex_operand(a->b, "b"))));
    });
  }
  {
    auto* c = cx->add_subcommand("cech", "finite stage or collapsed covering complex");
    auto a = bundle(c);
    c->add_option("--ring", a->ring)->required();
    c->add_option("--gens", a->gens)->required();
    c->add_option("--model", a->model, "cech (default) or stable-koszul");
    c->add_option("--stage", a->stage, "weight exponent (default 1)");
    c->add_flag("--top", a->top, "collapse into the top localization");
    c->callback([a, &caps] {
      RingPtr R = ring_arg(a->ring);
      CoveringModel model = a->model == "stable-koszul" ? CoveringModel::stable_koszul
                            : a->model == "cech"
                                ? CoveringModel::cech
                                : throw InputError("model: cech or stable-koszul");
      CoveringComplex cov = make_covering(
          R, jsonio::values_from_json(R, load_json(a->gens, "gens")), model, caps);
      emit(jsonio::complex_to_json(a->top ? covering_over_top(cov)
                                          : covering_stage(cov, a->stage)));
    });
  }
  {
    auto* c = cx->add_subcommand("localcoh", "torsion cohomology at a finitely generated ideal");
    auto a = bundle(c);
    c->add_option("--ring", a->ring)->required();
    c->add_option("--ideal", a->ideal)->required();
    c->add_option("--free", a->free_rank, "free rank of the module (default 1)");
    c->add_option("--torsion", a->torsion, "JSON array of invariant factors");
    c->callback([a] {
      RingPtr R = ring_arg(a->ring);
      ModulePresentation m;
      m.ring = R;
      m.free_rank = a->free_rank;
      if (!a->torsion.empty()) {
        m.divisors = jsonio::values_from_json(R, load_json(a->torsion, "torsion"));
      }
      LocalCohomology lc = local_cohomology(
          R, jsonio::values_from_json(R, load_json(a->ideal, "ideal")), m);
      emit(json{{"g", R->str(lc.g)},
                {"h0", jsonio::module_to_json(lc.h0)},
                {"h1", json{{"copies", lc.h1.copies}, {"g", R->str(lc.h1.g)}}}});
    });
  }
}

void add_ttc_verbs(CLI::App& app, const Caps& caps) {
  auto* tt = app.add_subcommand("ttc", "tensor-triangulated support calculus");
  tt->require_subcommand(1);

  auto common = [](CLI::App* c, const ArgsPtr& a) {
    c->add_option("--ttc", a->ttc, "presentation JSON (or @file)");
    c->add_option("--file", a->file, "path to presentation JSON");
  };

  {
    auto* c = tt->add_subcommand("lattice", "the support lattice presentation");
    auto a = bundle(c);
    common(c, a);
    c->callback([a] { emit(jsonio::lattice_to_json(build_lattice(tt_arg(*a)))); });
  }
  {
    auto* c = tt->add_subcommand("points", "prime thick tensor ideals");
    auto a = bundle(c);
    common(c, a);
    c->callback([a, &caps] {
      auto pts = spectrum_points(tt_arg(*a), caps);
      json list = json::array();
      for (const auto& sp : pts) {
        list.push_back(json{{"point", jsonio::point_to_json(sp.point)},
                            {"prime_objects", sp.prime_objects}});
      }
      emit(json{{"count", pts.size()}, {"points", std::move(list)}});
    });
  }
  {
    auto* c = tt->add_subcommand("supp-leq", "supp(a) ≤ supp(b)");
    auto a = bundle(c);
    common(c, a);
    c->add_option("--a", a->a, "object name")->required();
    c->add_option("--b", a->b, "object name")->required();
    c->callback([a, &caps] {
      emit(json{{"result", supp_leq(tt_arg(*a), a->a, a->b, caps)}});
    });
  }
  {
    auto* c = tt->add_subcommand("nilpotent", "tensor-nilpotence of a factored morphism");
    auto a = bundle(c);
    common(c, a);
    c->add_option("--factors", a->factors, "JSON array of object names")->required();
    c->callback([a, &caps] {
      json fj = load_json(a->factors, "factors");
      if (!fj.is_array()) throw InputError("factors: expected an array");
      std::vector<std::string> factors;
      for (const auto& f : fj) {
        if (!f.is_string()) throw InputError("factors: expected object names");
        factors.push_back(f.get<std::string>());
      }
      MorphismSupport ms = morphism_support(tt_arg(*a), factors, caps);
      emit(json{{"nilpotent", ms.nilpotent},
                {"support", jsonio::term_to_json(ms.support)}});
    });
  }
  {
    auto* c = tt->add_subcommand("compare", "order comparison against ring radicals");
    auto a = bundle(c);
    common(c, a);
    c->add_option("--ring", a->ring)->required();
    c->add_option("--dictionary", a->dictionary,
                  "JSON array of {\"object\":name,\"ideal\":[gens]}")
        ->required();
    c->callback([a, &caps] {
      RingPtr R = ring_arg(a->ring);
      json dj = load_json(a->dictionary, "dictionary");
      if (!dj.is_array()) throw InputError("dictionary: expected an array");
      std::vector<ObjectIdealPair> rows;
      for (const auto& row : dj) {
        if (!row.is_object() || !row.contains("object") || !row.contains("ideal")) {
          throw InputError("dictionary: rows are {\"object\":…,\"ideal\":[…]}");
        }
        rows.push_back({row.at("object").get<std::string>(),
                        jsonio::ideal_from_json(R, row.at("ideal"))});
      }
      ComparisonReport report = compare_with_ring(tt_arg(*a), rows, caps);
      emit(json{{"order_isomorphic", report.order_isomorphic},
                {"mismatches", report.mismatches}});
    });
  }
}

void add_scheme_verbs(CLI::App& app) {
  auto* sch = app.add_subcommand("scheme", "finitely glued affine pieces");
  sch->require_subcommand(1);

  auto common = [](CLI::App* c, const ArgsPtr& a) {
    c->add_option("--scheme", a->scheme, "scheme JSON (or @file)");
    c->add_option("--file", a->file, "path to scheme JSON");
  };

  {
    auto* c = sch->add_subcommand("glue", "validate the gluing data");
    auto a = bundle(c);
    common(c, a);
    c->callback([a] {
      Scheme s = scheme_arg(*a);
      emit(json{{"gluings", s.gluings.size()}, {"pieces", s.pieces.size()}});
    });
  }
  {
    auto* c = sch->add_subcommand("sections", "global sections of the structure sheaf");
    auto a = bundle(c);
    common(c, a);
    c->add_option("--bound", a->bound, "degree bound for polynomial diagrams (default 8)");
    c->callback([a] {
      GlobalSections s = global_sections(scheme_arg(*a), a->bound);
      emit(json{{"dimension", s.dimension},
                {"ring", s.ring ? jsonio::ring_to_json(*s.ring) : json(nullptr)},
                {"stable", s.stable}});
    });
  }
  {
    auto* c = sch->add_subcommand("sheaf-check", "descent for a principal cover");
    auto a = bundle(c);
    c->add_option("--ring", a->ring)->required();
    c->add_option("--f", a->f, "the covered element")->required();
    c->add_option("--cover", a->cover, "JSON array of covering elements")->required();
    c->add_option("--exponent", a->exponent, "denominator exponent (default 3)");
    c->callback([a] {
      RingPtr R = ring_arg(a->ring);
      SheafCheckReport report = sheaf_condition_check(
          R, R->parse(a->f), jsonio::values_from_json(R, load_json(a->cover, "cover")),
          a->exponent);
      emit(json{{"covers", report.covers},
                {"descends", report.descends},
                {"pass", report.pass()}});
    });
  }
  {
    auto* c = sch->add_subcommand("reconstruct", "lattice/complex round trip per piece");
    auto a = bundle(c);
    common(c, a);
    c->add_option("--samples", a->samples,
                  "JSON array (one array of ideals per piece)")
        ->required();
    c->callback([a] {
      Scheme s = scheme_arg(*a);
      json sj = load_json(a->samples, "samples");
      if (!sj.is_array() || sj.size() != s.pieces.size()) {
        throw InputError("samples: one array of ideals per piece");
      }
      std::vector<std::vector<RadicalIdeal>> samples(s.pieces.size());
      for (std::size_t p = 0; p < samples.size(); ++p) {
        if (!sj[p].is_array()) throw InputError("samples: one array of ideals per piece");
        for (const auto& gens : sj[p]) {
          samples[p].push_back(jsonio::ideal_from_json(s.pieces[p], gens));
        }
      }
      ReconstructionReport full = reconstruction_check(s, samples);
      json per_piece = json::array();
      for (std::size_t p = 0; p < samples.size(); ++p) {
        std::vector<std::vector<RadicalIdeal>> only(s.pieces.size());
        only[p] = samples[p];
        per_piece.push_back(reconstruction_check(s, only).pass);
      }
      emit(json{{"failures", full.failures},
                {"pass", full.pass},
                {"per_piece", std::move(per_piece)}});
    });
  }
  {
    auto* c = sch->add_subcommand("domain", "value of the cut-out-subscheme presheaf");
    auto a = bundle(c);
    c->add_option("--ring", a->ring)->required();
    c->add_option("--gens", a->gens, "JSON array of generators")->required();
    c->add_option("--to", a->to, "restrict to this generator list");
    c->callback([a] {
      RingPtr R = ring_arg(a->ring);
      auto gens = jsonio::values_from_json(R, load_json(a->gens, "gens"));
      json out{{"value", jsonio::ring_to_json(domain_presheaf_value(R, gens))}};
      if (!a->to.empty()) {
        auto to = jsonio::values_from_json(R, load_json(a->to, "to"));
        RingHom hom = domain_presheaf_restriction(R, gens, to);
        out["to_value"] = jsonio::ring_to_json(hom.target);
      }
      emit(out);
    });
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"point-free spectra, supports, and scheme gluing"};
  app.require_subcommand(1);

  try {
    Caps caps = caps_from_env();
    add_ring_verbs(app);
    add_lattice_verbs(app, caps);
    add_zar_verbs(app);
    add_complex_verbs(app, caps);
    add_ttc_verbs(app, caps);
    add_scheme_verbs(app);
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit(json{{"error", {{"message", e.what()}, {"type", "usage"}}}});
    return 2;
  } catch (const CapacityError& e) {
    emit(json{{"error", {{"message", e.what()}, {"type", "capacity"}}}});
    return 3;
  } catch (const InputError& e) {
    emit(json{{"error", {{"message", e.what()}, {"type", "input"}}}});
    return 2;
  } catch (const std::exception& e) {
    emit(json{{"error", {{"message", e.what()}, {"type", "internal"}}}});
    return 2;
  }
  return 0;
}
