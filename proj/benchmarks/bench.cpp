#include <benchmark/benchmark.h>

#include <vector>

#include "pointfree/complexes.hpp"
#include "pointfree/groebner.hpp"
#include "pointfree/lattice.hpp"
#include "pointfree/matrix.hpp"
#include "pointfree/ring.hpp"

namespace {

using namespace pointfree;

void bm_radical_membership(benchmark::State& state) {
  auto Z = Ring::integers();
  std::vector<Value> gens = {Z->from_int(1350), Z->from_int(2250)};
  Value f = Z->from_int(30 * 30 * 30);
  for (auto _ : state) {
    benchmark::DoNotOptimize(radical_member(Z, f, gens));
  }
}
BENCHMARK(bm_radical_membership);

void bm_groebner_basis(benchmark::State& state) {
  auto R = Ring::polynomial(Ring::rationals(), {"x", "y", "z"});
  std::vector<Value> gens = {
      R->parse("x^2 + y^2 + z^2 - 1"),
      R->parse("x*y - z"),
      R->parse("x - y + z"),
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(groebner_basis(R, gens, MonomialOrder::grevlex));
  }
}
BENCHMARK(bm_groebner_basis);

void bm_smith_normal_form(benchmark::State& state) {
  auto Z = Ring::integers();
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix m = Matrix::zero(Z, n, n);
  long seed = 1;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      seed = (seed * 1103515245 + 12345) % 2147483648L;
      m.at(r, c) = Z->from_int(seed % 19 - 9);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(m));
  }
}
BENCHMARK(bm_smith_normal_form)->Arg(4)->Arg(8);

void bm_lattice_entailment(benchmark::State& state) {
  std::vector<std::string> gens = {"a", "b", "c", "d"};
  DLatticePresentation L = DLatticePresentation::with_relations(gens, {});
  LatticeTerm lhs = LatticeTerm::var("a").meet(LatticeTerm::var("b")).join(
      LatticeTerm::var("c").meet(LatticeTerm::var("d")));
  LatticeTerm rhs = LatticeTerm::var("a").join(LatticeTerm::var("d"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(entails(L, lhs, rhs));
  }
}
BENCHMARK(bm_lattice_entailment);

void bm_koszul_homology(benchmark::State& state) {
  auto Z = Ring::integers();
  std::vector<Value> gens = {Z->from_int(6), Z->from_int(10), Z->from_int(15)};
  for (auto _ : state) {
    ChainComplex k = koszul(Z, gens);
    benchmark::DoNotOptimize(homology(k, 1));
  }
}
BENCHMARK(bm_koszul_homology);

}  // namespace

BENCHMARK_MAIN();
