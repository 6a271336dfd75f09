// Microbenchmarks for the hot paths: subdivision, rank, LP fills, circuit
// enumeration, and calculus evaluation.

#include <benchmark/benchmark.h>

#include "ubcw/builders.hpp"
#include "ubcw/calculus.hpp"
#include "ubcw/certificate.hpp"
#include "ubcw/families.hpp"
#include "ubcw/homology.hpp"
#include "ubcw/poset.hpp"
#include "ubcw/ubc.hpp"

using namespace ubcw;

static void BM_SdComplex(benchmark::State& state) {
  auto base = boundary_simplex(3).to_semi_simplicial();
  for (auto _ : state) {
    auto sd = sd_complex(base);
    benchmark::DoNotOptimize(sd.total_simplices());
  }
}
BENCHMARK(BM_SdComplex);

static void BM_BoundaryMatrix(benchmark::State& state) {
  auto sd = sd_complex(boundary_simplex(3).to_semi_simplicial());
  for (auto _ : state) {
    auto m = sd.boundary_matrix(2);
    benchmark::DoNotOptimize(m.rows);
  }
}
BENCHMARK(BM_BoundaryMatrix);

static void BM_MatrixRank(benchmark::State& state) {
  auto sd = sd_complex(boundary_simplex(3).to_semi_simplicial());
  auto m = sd.boundary_matrix(2);
  for (auto _ : state) {
    Int r = matrix_rank(m);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_MatrixRank);

static void BM_ReducedBetti(benchmark::State& state) {
  auto sd = sd_complex(boundary_simplex(3).to_semi_simplicial());
  for (auto _ : state) {
    auto prof = reduced_betti(sd, 2);
    benchmark::DoNotOptimize(prof.betti.size());
  }
}
BENCHMARK(BM_ReducedBetti);

static void BM_MinFillLp(benchmark::State& state) {
  auto bd3 = boundary_simplex(3).to_semi_simplicial();
  Chain z;
  z.q = 1;
  z.set("0|1", Rat(1));
  z.set("1|2", Rat(1));
  z.set("0|2", Rat(-1));
  for (auto _ : state) {
    auto fill = min_fill(bd3, 1, z);
    benchmark::DoNotOptimize(fill.fill_norm);
  }
}
BENCHMARK(BM_MinFillLp);

static void BM_UbcExactDegree1(benchmark::State& state) {
  auto bd3 = boundary_simplex(3).to_semi_simplicial();
  for (auto _ : state) {
    auto k = ubc_exact(bd3, 1);
    benchmark::DoNotOptimize(k.value);
  }
}
BENCHMARK(BM_UbcExactDegree1);

static void BM_SdCertificate(benchmark::State& state) {
  auto bd3 = boundary_simplex(3).to_semi_simplicial();
  for (auto _ : state) {
    auto cert = sd_certificate(bd3);
    benchmark::DoNotOptimize(cert.verify().ok());
  }
}
BENCHMARK(BM_SdCertificate);

static void BM_UnimodularOrderComplex(benchmark::State& state) {
  UnimodularPosetSpec spec;
  spec.ring = ring_field(2);
  spec.n = 3;
  for (auto _ : state) {
    Poset u = unimodular_poset(spec);
    auto oc = order_complex(u).to_semi_simplicial();
    benchmark::DoNotOptimize(oc.total_simplices());
  }
}
BENCHMARK(BM_UnimodularOrderComplex);

static void BM_TitsConstant(benchmark::State& state) {
  for (auto _ : state) {
    auto c = k_tits(4);
    benchmark::DoNotOptimize(c.value);
  }
}
BENCHMARK(BM_TitsConstant);

static void BM_GlConstant(benchmark::State& state) {
  for (auto _ : state) {
    auto c = k1(2, 1);
    benchmark::DoNotOptimize(c.value);
  }
}
BENCHMARK(BM_GlConstant);

BENCHMARK_MAIN();
