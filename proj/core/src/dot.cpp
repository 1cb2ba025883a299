#include "pointfree/dot.hpp"

#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

#include "pointfree/errors.hpp"

namespace pointfree {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string render(const std::vector<std::string>& labels,
                   const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::ostringstream out;
  out << "digraph {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << "  n" << i << " [label=\"" << escape(labels[i]) << "\"];\n";
  }
  for (const auto& [from, to] : edges) {
    out << "  n" << from << " -> n" << to << ";\n";
  }
  out << "}\n";
  return out.str();
}

/** Covering edges of a poset given by an explicit strict-order matrix:
 * b covers a iff a < b and nothing sits strictly between. */
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(
    const std::vector<std::vector<bool>>& less) {
  std::size_t n = less.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!less[a][b]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n; ++c) {
        if (less[a][c] && less[c][b]) {
          covered = false;
          break;
        }
      }
      if (covered) edges.emplace_back(a, b);
    }
  }
  return edges;
}

}  // namespace

std::string lattice_dot(const DLatticePresentation& lattice, const Caps& caps) {
  std::vector<LatticeTerm> universe = term_universe(lattice.generators(), caps);
  std::vector<std::string> labels;

  if (!lattice.oracle_mode()) {
    // Every class of terms is an up-set of the model poset, and in the
    // lattice of up-sets the covers are exactly the one-model enlargements,
    // so the Hasse diagram falls out of signature lookups.
    ModelSet ms = ModelSet::of(lattice, caps);
    if (ms.model_count() > 64) {
      throw CapacityError("lattice export limited to 64 models");
    }
    std::vector<std::uint64_t> sigs;
    std::map<std::uint64_t, std::size_t> index_of;
    for (const auto& t : universe) {
      std::uint64_t sig = 0;
      for (std::size_t m = 0; m < ms.model_count(); ++m) {
        if (ms.eval(t, ms.models()[m])) sig |= std::uint64_t{1} << m;
      }
      if (index_of.emplace(sig, sigs.size()).second) {
        sigs.push_back(sig);
        labels.push_back(t.str());
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < sigs.size(); ++a) {
      for (std::size_t m = 0; m < ms.model_count(); ++m) {
        std::uint64_t bit = std::uint64_t{1} << m;
        if (sigs[a] & bit) continue;
        auto it = index_of.find(sigs[a] | bit);
        if (it != index_of.end()) edges.emplace_back(a, it->second);
      }
    }
    return render(labels, edges);
  }

  std::vector<LatticeTerm> reps;
  for (const auto& t : universe) {
    bool fresh = true;
    for (const auto& r : reps) {
      if (entails(lattice, t, r, caps) && entails(lattice, r, t, caps)) {
        fresh = false;
        break;
      }
    }
    if (fresh) {
      reps.push_back(t);
      labels.push_back(t.str());
    }
  }
  std::vector<std::vector<bool>> less(reps.size(), std::vector<bool>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = 0; b < reps.size(); ++b) {
      less[a][b] = a != b && entails(lattice, reps[a], reps[b], caps);
    }
  }
  return render(labels, hasse_edges(less));
}

std::string points_dot(const DLatticePresentation& lattice, const Caps& caps) {
  if (lattice.generators().size() > caps.universe_generators) {
    throw CapacityError("point poset export limited to " +
                        std::to_string(caps.universe_generators) + " generators");
  }
  std::vector<LatticePoint> pts = points(lattice, caps);
  std::vector<std::string> labels;
  for (const auto& p : pts) {
    std::string label = "{";
    bool first = true;
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
      if (!p.values[i]) continue;
      if (!first) label += ",";
      label += p.generators[i];
      first = false;
    }
    label += "}";
    labels.push_back(label);
  }
  std::vector<std::vector<bool>> less(pts.size(), std::vector<bool>(pts.size()));
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = 0; b < pts.size(); ++b) {
      if (a == b) continue;
      bool leq = true;
      for (std::size_t i = 0; i < pts[a].values.size() && leq; ++i) {
        leq = !pts[a].values[i] || pts[b].values[i];
      }
      less[a][b] = leq && pts[a].values != pts[b].values;
    }
  }
  return render(labels, hasse_edges(less));
}

}  // namespace pointfree
