#include <benchmark/benchmark.h>

#include <random>

#include "sysstruct/dsf.hpp"
#include "sysstruct/io.hpp"
#include "sysstruct/structure.hpp"

using namespace sysstruct;

namespace {

QMatrix random_q(std::mt19937_64& rng, std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(long(rng() % 9) - 4);
  return m;
}

GeneralizedRealization ring_fixture() {
  return parse_realization(read_file(std::string(SYSSTRUCT_CORPUS_DIR) + "/ring.real"));
}

GeneralizedRealization c1_fixture() {
  return parse_realization(read_file(std::string(SYSSTRUCT_CORPUS_DIR) + "/c1.real"));
}

}  // namespace

static void BM_poly_mul(benchmark::State& state) {
  const std::size_t deg = state.range(0);
  std::vector<Rational> ca(deg + 1), cb(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) {
    ca[i] = Rational(long(i) + 1, 3);
    cb[i] = Rational(2 * long(i) - 5, 7);
  }
  const Polynomial a{std::vector<Rational>(ca)};
  const Polynomial b{std::vector<Rational>(cb)};
  for (auto _ : state) {
    Polynomial c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_poly_mul)->Arg(8)->Arg(32)->Arg(128);

static void BM_resolvent(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const QMatrix a = random_q(rng, state.range(0));
  for (auto _ : state) {
    RFMatrix inv = inverse(s_minus(a));
    benchmark::DoNotOptimize(inv);
  }
}
BENCHMARK(BM_resolvent)->Arg(2)->Arg(4)->Arg(6);

static void BM_ring_dsf(benchmark::State& state) {
  const GeneralizedRealization g = ring_fixture();
  for (auto _ : state) {
    DynamicalStructureFunction d = dsf(output_normal_form(minimize_intricacy(g)));
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_ring_dsf);

static void BM_three_routes(benchmark::State& state) {
  const GeneralizedRealization g = c1_fixture();
  for (auto _ : state) {
    const StateRealization minimal = minimize_intricacy(g);
    const RFMatrix g_ss = transfer_function(minimal);
    const CompStructure c = comp_structure(g);
    SubsystemStructure ss = subsystem_structure(c);
    attach_block_tfs(ss, c, g);
    const RFMatrix g_lft = lft_transfer(to_lft(ss, c, g));
    const RFMatrix g_dsf = dsf_transfer(dsf(output_normal_form(minimal)));
    benchmark::DoNotOptimize(g_ss == g_lft);
    benchmark::DoNotOptimize(g_ss == g_dsf);
  }
}
BENCHMARK(BM_three_routes);

BENCHMARK_MAIN();
