#pragma once

#include <nlohmann/json.hpp>

#include "pointfree/complexes.hpp"
#include "pointfree/lattice.hpp"
#include "pointfree/ring.hpp"
#include "pointfree/scheme.hpp"
#include "pointfree/ttc.hpp"
#include "pointfree/zariski.hpp"

/** Wire formats.  All ring elements and big integers travel as strings;
 * parse failures and shape problems raise InputError.  Serialization uses
 * nlohmann's default (alphabetically ordered) object representation, so
 * output is reproducible byte for byte. */
namespace pointfree::jsonio {

using json = nlohmann::json;

// terms: {"or":[{"and":["a","b"]}, ...]}; bottom {"or":[]}, top {"or":[{"and":[]}]}
json term_to_json(const LatticeTerm& t);
LatticeTerm term_from_json(const json& j);

// lattices: {"generators":[...],"relations":[[term,term],...]}
// plus "orientation":"opposite" for the flipped reading
json lattice_to_json(const DLatticePresentation& lattice);
DLatticePresentation lattice_from_json(const json& j);

// rings: {"type":"int"} | {"type":"rat"} | {"type":"intmod","n":"12"}
//        | {"type":"fp","p":"5"} | {"type":"poly","base":...,"vars":["x"]}
//        | {"type":"localization","base":...,"f":"2"}
// with "Z" and "Q" accepted as shorthand anywhere a ring is expected
RingPtr ring_from_json(const json& j);
json ring_to_json(const RingPtr& ring);

Value value_from_json(const RingPtr& ring, const json& j);  // element string
json value_to_json(const RingPtr& ring, const Value& v);

std::vector<Value> values_from_json(const RingPtr& ring, const json& j);
RadicalIdeal ideal_from_json(const RingPtr& ring, const json& j);  // ["2","3"]
json ideal_to_json(const RadicalIdeal& I);                         // {"gens":[...]}
json open_to_json(const LatticeOpen& open);

// complexes: {"ring":...,"lo":0,"hi":1,"ranks":[1,1],
//             "differentials":{"1":[["2"]]}}
ChainComplex complex_from_json(const json& j);
json complex_to_json(const ChainComplex& c);

json module_to_json(const ModulePresentation& m);  // {"free_rank":0,"torsion":[...]}

json point_to_json(const LatticePoint& p);  // {"a":false,"b":true}

// categories: {"objects":[...],"triangles":[[a,b,c],...],"tensor":[[a,b,c],...],
//              "sum":[[a,b,c],...],"retracts":[[a,b],...]}
TTPresentation tt_from_json(const json& j);

// schemes: {"pieces":[ring,...],"gluings":[{"i":0,"j":1,"f_ij":"t","f_ji":"s",
//           "phi":{"t":"1/s"},"phi_inv":{"s":"1/t"}}]}
SchemeDatum scheme_from_json(const json& j);

Int int_from_json(const json& j);  // decimal string (or small JSON integer)

}  // namespace pointfree::jsonio
