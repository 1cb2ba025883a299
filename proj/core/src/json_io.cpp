#include "pointfree/json_io.hpp"

#include <utility>

#include "pointfree/errors.hpp"

namespace pointfree::jsonio {

namespace {

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string(what) + ": missing field '" + key + "'");
  }
  return j.at(key);
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + ": expected a string");
  return j.get<std::string>();
}

int as_int(const json& j, const char* what) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_string()) {
    try {
      return std::stoi(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InputError(std::string(what) + ": expected an integer");
}

std::size_t as_size(const json& j, const char* what) {
  int v = as_int(j, what);
  if (v < 0) throw InputError(std::string(what) + ": expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

}  // namespace

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw InputError("not a decimal integer: '" + j.get<std::string>() + "'");
    }
  }
  throw InputError("expected an integer (as a decimal string)");
}

json term_to_json(const LatticeTerm& t) {
  json clauses = json::array();
  for (const auto& clause : t.clauses()) {
    clauses.push_back(json{{"and", clause}});
  }
  return json{{"or", std::move(clauses)}};
}

LatticeTerm term_from_json(const json& j) {
  const json& clauses = field(j, "or", "term");
  if (!clauses.is_array()) throw InputError("term: 'or' must be an array");
  std::vector<LatticeTerm::Clause> out;
  for (const auto& c : clauses) {
    const json& names = field(c, "and", "term clause");
    if (!names.is_array()) throw InputError("term: 'and' must be an array");
    LatticeTerm::Clause clause;
    for (const auto& n : names) clause.push_back(as_string(n, "term generator"));
    out.push_back(std::move(clause));
  }
  return LatticeTerm::join_of(std::move(out));
}

json lattice_to_json(const DLatticePresentation& lattice) {
  json out{{"generators", lattice.generators()}};
  json relations = json::array();
  if (!lattice.oracle_mode()) {
    for (const auto& [lhs, rhs] : lattice.relations()) {
      relations.push_back(json::array({term_to_json(lhs), term_to_json(rhs)}));
    }
  }
  out["relations"] = std::move(relations);
  if (lattice.orientation() == DLatticePresentation::Orientation::opposite) {
    out["orientation"] = "opposite";
  }
  return out;
}

DLatticePresentation lattice_from_json(const json& j) {
  const json& gens = field(j, "generators", "lattice");
  if (!gens.is_array()) throw InputError("lattice: 'generators' must be an array");
  std::vector<std::string> generators;
  for (const auto& g : gens) generators.push_back(as_string(g, "lattice generator"));
  std::vector<DLatticePresentation::Relation> relations;
  if (j.contains("relations")) {
    const json& rels = j.at("relations");
    if (!rels.is_array()) throw InputError("lattice: 'relations' must be an array");
    for (const auto& r : rels) {
      if (!r.is_array() || r.size() != 2) {
        throw InputError("lattice: each relation is a [lhs, rhs] pair");
      }
      relations.emplace_back(term_from_json(r[0]), term_from_json(r[1]));
    }
  }
  auto lattice = DLatticePresentation::with_relations(std::move(generators),
                                                      std::move(relations));
  if (j.contains("orientation")) {
    std::string o = as_string(j.at("orientation"), "lattice orientation");
    if (o == "opposite") {
      lattice.set_orientation(DLatticePresentation::Orientation::opposite);
    } else if (o != "original") {
      throw InputError("lattice: unknown orientation '" + o + "'");
    }
  }
  return lattice;
}

RingPtr ring_from_json(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Z" || s == "ZZ") return Ring::integers();
    if (s == "Q" || s == "QQ") return Ring::rationals();
    throw InputError("ring: unknown shorthand '" + s + "'");
  }
  std::string type = as_string(field(j, "type", "ring"), "ring type");
  if (type == "int") return Ring::integers();
  if (type == "rat") return Ring::rationals();
  if (type == "intmod") return Ring::integers_mod(int_from_json(field(j, "n", "ring")));
  if (type == "fp") return Ring::prime_field(int_from_json(field(j, "p", "ring")));
  if (type == "poly") {
    RingPtr base = ring_from_json(field(j, "base", "ring"));
    const json& vars = field(j, "vars", "ring");
    if (!vars.is_array()) throw InputError("ring: 'vars' must be an array");
    std::vector<std::string> names;
    for (const auto& v : vars) names.push_back(as_string(v, "ring variable"));
    return Ring::polynomial(base, std::move(names));
  }
  if (type == "localization") {
    RingPtr base = ring_from_json(field(j, "base", "ring"));
    Value f = base->parse(as_string(field(j, "f", "ring"), "ring localization"));
    return localize(base, f).ring;
  }
  throw InputError("ring: unknown type '" + type + "'");
}

json ring_to_json(const RingPtr& ring) {
  switch (ring->kind()) {
    case RingKind::integers:
      return json{{"type", "int"}};
    case RingKind::rationals:
      return json{{"type", "rat"}};
    case RingKind::integers_mod:
      return json{{"type", "intmod"}, {"n", ring->modulus().str()}};
    case RingKind::prime_field:
      return json{{"type", "fp"}, {"p", ring->modulus().str()}};
    case RingKind::polynomial:
      return json{{"type", "poly"},
                  {"base", ring_to_json(ring->coefficient_field())},
                  {"vars", ring->variables()}};
    case RingKind::localization:
      return json{{"type", "localization"},
                  {"base", ring_to_json(ring->localization_base())},
                  {"f", ring->localization_base()->str(ring->inverted_element())}};
  }
  throw Error("unreachable");
}

Value value_from_json(const RingPtr& ring, const json& j) {
  if (j.is_number_integer()) return ring->parse(j.dump());
  return ring->parse(as_string(j, "element"));
}

json value_to_json(const RingPtr& ring, const Value& v) { return json(ring->str(v)); }

std::vector<Value> values_from_json(const RingPtr& ring, const json& j) {
  if (!j.is_array()) throw InputError("expected an array of element strings");
  std::vector<Value> out;
  for (const auto& e : j) out.push_back(value_from_json(ring, e));
  return out;
}

RadicalIdeal ideal_from_json(const RingPtr& ring, const json& j) {
  return radical_ideal(ring, values_from_json(ring, j));
}

json ideal_to_json(const RadicalIdeal& I) {
  json gens = json::array();
  for (const auto& g : I.gens) gens.push_back(I.ring->str(g));
  return json{{"gens", std::move(gens)}};
}

json open_to_json(const LatticeOpen& open) {
  json out = ideal_to_json(open.ideal);
  out["kind"] = open.kind == OpenKind::zariski ? "zariski" : "hochster";
  return out;
}

ChainComplex complex_from_json(const json& j) {
  RingPtr ring = ring_from_json(field(j, "ring", "complex"));
  int lo = as_int(field(j, "lo", "complex"), "complex lo");
  int hi = as_int(field(j, "hi", "complex"), "complex hi");
  const json& ranks_j = field(j, "ranks", "complex");
  if (!ranks_j.is_array()) throw InputError("complex: 'ranks' must be an array");
  std::vector<std::size_t> ranks;
  for (const auto& r : ranks_j) ranks.push_back(as_size(r, "complex rank"));
  std::map<int, Matrix> diffs;
  if (j.contains("differentials")) {
    const json& ds = j.at("differentials");
    if (!ds.is_object()) throw InputError("complex: 'differentials' must be an object");
    for (const auto& [key, rows] : ds.items()) {
      int n = 0;
      try {
        n = std::stoi(key);
      } catch (const std::exception&) {
        throw InputError("complex: bad differential degree '" + key + "'");
      }
      if (!rows.is_array()) throw InputError("complex: a differential must be a 2d array");
      std::size_t nrows = rows.size();
      std::size_t ncols = nrows > 0 && rows[0].is_array() ? rows[0].size() : 0;
      Matrix m = Matrix::zero(ring, nrows, ncols);
      for (std::size_t r = 0; r < nrows; ++r) {
        if (!rows[r].is_array() || rows[r].size() != ncols) {
          throw InputError("complex: ragged differential at degree " + key);
        }
        for (std::size_t c = 0; c < ncols; ++c) {
          m.at(r, c) = value_from_json(ring, rows[r][c]);
        }
      }
      diffs.emplace(n, std::move(m));
    }
  }
  return make_complex(std::move(ring), lo, hi, std::move(ranks), std::move(diffs));
}

json complex_to_json(const ChainComplex& c) {
  json diffs = json::object();
  for (const auto& [n, m] : c.diffs) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows; ++r) {
      json row = json::array();
      for (std::size_t col = 0; col < m.cols; ++col) {
        row.push_back(c.ring->str(m.at(r, col)));
      }
      rows.push_back(std::move(row));
    }
    diffs[std::to_string(n)] = std::move(rows);
  }
  return json{{"ring", ring_to_json(c.ring)},
              {"lo", c.lo},
              {"hi", c.hi},
              {"ranks", c.ranks},
              {"differentials", std::move(diffs)}};
}

json module_to_json(const ModulePresentation& m) {
  json torsion = json::array();
  for (const auto& d : m.divisors) torsion.push_back(m.ring->str(d));
  return json{{"free_rank", m.free_rank}, {"torsion", std::move(torsion)}};
}

json point_to_json(const LatticePoint& p) {
  json out = json::object();
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    out[p.generators[i]] = static_cast<bool>(p.values[i]);
  }
  return out;
}

TTPresentation tt_from_json(const json& j) {
  TTPresentation tt;
  const json& objects = field(j, "objects", "category");
  if (!objects.is_array()) throw InputError("category: 'objects' must be an array");
  for (const auto& o : objects) tt.objects.push_back(as_string(o, "category object"));

  auto read_triples = [&j](const char* key, std::vector<std::array<std::string, 3>>& out) {
    if (!j.contains(key)) return;
    const json& rows = j.at(key);
    if (!rows.is_array()) throw InputError(std::string("category: '") + key +
                                           "' must be an array");
    for (const auto& r : rows) {
      if (!r.is_array() || r.size() != 3) {
        throw InputError(std::string("category: each '") + key + "' row has 3 names");
      }
      out.push_back({as_string(r[0], key), as_string(r[1], key), as_string(r[2], key)});
    }
  };
  read_triples("triangles", tt.triangles);
  read_triples("tensor", tt.tensor);
  read_triples("sum", tt.sum);
  if (j.contains("retracts")) {
    const json& rows = j.at("retracts");
    if (!rows.is_array()) throw InputError("category: 'retracts' must be an array");
    for (const auto& r : rows) {
      if (!r.is_array() || r.size() != 2) {
        throw InputError("category: each 'retracts' row has 2 names");
      }
      tt.retracts.emplace_back(as_string(r[0], "retract"), as_string(r[1], "retract"));
    }
  }
  return make_tt(std::move(tt));
}

SchemeDatum scheme_from_json(const json& j) {
  SchemeDatum datum;
  const json& pieces = field(j, "pieces", "scheme");
  if (!pieces.is_array()) throw InputError("scheme: 'pieces' must be an array");
  for (const auto& p : pieces) datum.pieces.push_back(ring_from_json(p));
  if (!j.contains("gluings")) return datum;
  const json& gluings = j.at("gluings");
  if (!gluings.is_array()) throw InputError("scheme: 'gluings' must be an array");
  for (const auto& g : gluings) {
    RawGluing raw;
    raw.i = as_size(field(g, "i", "gluing"), "gluing index");
    raw.j = as_size(field(g, "j", "gluing"), "gluing index");
    if (raw.i >= datum.pieces.size() || raw.j >= datum.pieces.size()) {
      throw InputError("scheme: gluing references a missing piece");
    }
    const RingPtr& ri = datum.pieces[raw.i];
    const RingPtr& rj = datum.pieces[raw.j];
    raw.f_ij = ri->parse(as_string(field(g, "f_ij", "gluing"), "gluing f_ij"));
    raw.f_ji = rj->parse(as_string(field(g, "f_ji", "gluing"), "gluing f_ji"));
    RingPtr overlap_ij = localize(ri, raw.f_ij).ring;
    RingPtr overlap_ji = localize(rj, raw.f_ji).ring;
    if (g.contains("phi")) {
      for (const auto& [name, img] : g.at("phi").items()) {
        raw.phi_images.emplace(name, overlap_ji->parse(as_string(img, "gluing phi")));
      }
    }
    if (g.contains("phi_inv")) {
      for (const auto& [name, img] : g.at("phi_inv").items()) {
        raw.phi_inv_images.emplace(name, overlap_ij->parse(as_string(img, "gluing phi_inv")));
      }
    }
    datum.gluings.push_back(std::move(raw));
  }
  return datum;
}

}  // namespace pointfree::jsonio
