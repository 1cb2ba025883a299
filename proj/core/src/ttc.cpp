#include "pointfree/ttc.hpp"

#include <algorithm>
#include <set>

#include "pointfree/errors.hpp"

namespace pointfree {

namespace {

void require_declared(const TTPresentation& tt, const std::string& name, const char* where) {
  if (std::find(tt.objects.begin(), tt.objects.end(), name) == tt.objects.end()) {
    throw InputError(std::string(where) + ": unknown object '" + name + "'");
  }
}

}  // namespace

TTPresentation make_tt(TTPresentation tt) {
  std::set<std::string> seen;
  for (const auto& o : tt.objects) {
    if (o.empty()) throw InputError("make_tt: empty object name");
    if (!seen.insert(o).second) throw InputError("make_tt: duplicate object '" + o + "'");
  }
  if (!seen.count("one") || !seen.count("zero")) {
    throw InputError("make_tt: the objects 'one' and 'zero' are required");
  }
  for (const auto& t : tt.triangles) {
    for (const auto& n : t) require_declared(tt, n, "make_tt (triangle)");
  }
  auto check_table = [&](const std::vector<std::array<std::string, 3>>& rows,
                         const char* what) {
    for (const auto& r : rows) {
      for (const auto& n : r) require_declared(tt, n, what);
    }
  };
  check_table(tt.tensor, "make_tt (tensor)");
  check_table(tt.sum, "make_tt (sum)");
  for (const auto& [a, b] : tt.retracts) {
    require_declared(tt, a, "make_tt (retract)");
    require_declared(tt, b, "make_tt (retract)");
  }
  return tt;
}

LatticeTerm support_term(const std::string& object) {
  if (object == "one") return LatticeTerm::top();
  if (object == "zero") return LatticeTerm::bottom();
  return LatticeTerm::var(object);
}

DLatticePresentation build_lattice(const TTPresentation& tt) {
  std::vector<std::string> generators;
  for (const auto& o : tt.objects) {
    if (o != "one" && o != "zero") generators.push_back(o);
  }
  std::vector<DLatticePresentation::Relation> relations;
  auto equate = [&relations](const LatticeTerm& lhs, const LatticeTerm& rhs) {
    relations.emplace_back(lhs, rhs);
    relations.emplace_back(rhs, lhs);
  };
  for (const auto& [a, b, c] : tt.tensor) {
    equate(support_term(c), support_term(a).meet(support_term(b)));
  }
  for (const auto& [a, b, c] : tt.sum) {
    equate(support_term(c), support_term(a).join(support_term(b)));
  }
  for (const auto& [a, b] : tt.retracts) {
    relations.emplace_back(support_term(a), support_term(b));
  }
  for (const auto& [a, b, c] : tt.triangles) {
    LatticeTerm sa = support_term(a), sb = support_term(b), sc = support_term(c);
    relations.emplace_back(sb, sa.join(sc));  // a → b → c
    relations.emplace_back(sc, sb.join(sa));  // b → c → Σa
    relations.emplace_back(sa, sc.join(sb));  // c → Σa → Σb
  }
  return DLatticePresentation::with_relations(std::move(generators), std::move(relations));
}

bool supp_leq(const TTPresentation& tt, const std::string& a, const std::string& b,
              const Caps& caps) {
  require_declared(tt, a, "supp_leq");
  require_declared(tt, b, "supp_leq");
  return entails(build_lattice(tt), support_term(a), support_term(b), caps);
}

std::vector<SpectrumPoint> spectrum_points(const TTPresentation& tt, const Caps& caps) {
  DLatticePresentation lattice = build_lattice(tt);
  std::vector<SpectrumPoint> out;
  for (auto& p : points(lattice, caps)) {
    SpectrumPoint sp{std::move(p), {}};
    for (const auto& o : tt.objects) {
      bool value = support_term(o).eval(
          [&sp](const std::string& name) { return sp.point.value(name); });
      if (!value) sp.prime_objects.push_back(o);
    }
    out.push_back(std::move(sp));
  }
  return out;
}

MorphismSupport morphism_support(const TTPresentation& tt,
                                 const std::vector<std::string>& factors, const Caps& caps) {
  LatticeTerm t = LatticeTerm::top();
  for (const auto& f : factors) {
    require_declared(tt, f, "morphism_support");
    t = t.meet(support_term(f));
  }
  MorphismSupport out{t, false};
  out.nilpotent = entails(build_lattice(tt), t, LatticeTerm::bottom(), caps);
  if (out.nilpotent) out.support = LatticeTerm::bottom();
  return out;
}

ComparisonReport compare_with_ring(const TTPresentation& tt,
                                   const std::vector<ObjectIdealPair>& dictionary,
                                   const Caps& caps) {
  DLatticePresentation lattice = build_lattice(tt);
  ComparisonReport report;
  for (const auto& row : dictionary) require_declared(tt, row.object, "compare_with_ring");
  for (const auto& a : dictionary) {
    for (const auto& b : dictionary) {
      bool cat = entails(lattice, support_term(a.object), support_term(b.object), caps);
      bool ring = zar_leq(b.ideal, a.ideal);
      if (cat != ring) {
        report.order_isomorphic = false;
        report.mismatches.push_back(
            "supp(" + a.object + ") <= supp(" + b.object + ") is " +
            (cat ? "true" : "false") + " in the category but the reversed ideal " +
            "inclusion is " + (ring ? "true" : "false"));
      }
    }
  }
  return report;
}

}  // namespace pointfree
