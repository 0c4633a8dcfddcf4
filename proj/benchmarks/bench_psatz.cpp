#include <benchmark/benchmark.h>

#include <random>

#include "psatz/certificates.hpp"
#include "psatz/gns.hpp"
#include "psatz/hankel.hpp"
#include "psatz/jacobi.hpp"

using namespace psatz;

namespace {

Polynomial dense_polynomial(std::size_t dim, unsigned degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  Polynomial p(dim);
  for (const auto& alpha : monomials_up_to(dim, degree)) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    p.add_term(alpha, c);
  }
  return p;
}

MomentSequence lebesgue_box(std::size_t dim, unsigned max_degree) {
  MomentSequence s(dim, max_degree);
  for (const auto& alpha : monomials_up_to(dim, max_degree)) {
    Rational v(1);
    for (std::size_t i = 0; i < dim; ++i) v /= static_cast<long>(alpha[i]) + 1;
    s.set_value(alpha, v);
  }
  return s;
}

AtomicMeasure planar_atoms(std::size_t count) {
  AtomicMeasure m;
  m.dimension = 2;
  for (std::size_t i = 0; i < count; ++i) {
    Rational x(static_cast<long>(2 * i + 1), static_cast<long>(2 * count + 1));
    Rational y(static_cast<long>(i * i + 1), static_cast<long>(count * count + 2));
    x.canonicalize();
    y.canonicalize();
    m.atoms.push_back({{x, y}, Rational(1, static_cast<long>(count))});
  }
  return m;
}

void BM_PolynomialProduct(benchmark::State& state) {
  auto a = dense_polynomial(2, static_cast<unsigned>(state.range(0)), 1);
  auto b = dense_polynomial(2, static_cast<unsigned>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_PolynomialProduct)->Arg(4)->Arg(8)->Arg(12);

void BM_HankelAssembly(benchmark::State& state) {
  auto s = lebesgue_box(2, 2 * static_cast<unsigned>(state.range(0)) + 1);
  auto g = parse_polynomial("x1", 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(localized_hankel(s, g, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_HankelAssembly)->Arg(2)->Arg(4)->Arg(6);

void BM_JacobiEigen(benchmark::State& state) {
  auto s = lebesgue_box(2, 2 * static_cast<unsigned>(state.range(0)));
  auto block = localized_hankel(s, Polynomial::constant(2, Rational(1)),
                                static_cast<unsigned>(state.range(0)));
  std::vector<std::vector<double>> dense(block.size(), std::vector<double>(block.size()));
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (std::size_t j = 0; j < block.size(); ++j) dense[i][j] = to_double(block.matrix[i][j]);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobi_eigen(dense));
  }
}
BENCHMARK(BM_JacobiEigen)->Arg(2)->Arg(4)->Arg(6);

void BM_HandelmanCertify(benchmark::State& state) {
  std::vector<Polynomial> interval = {parse_polynomial("x1", 1), parse_polynomial("1 - x1", 1)};
  auto h = parse_polynomial("x1^2 - x1 + 1", 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(handelman_certify(h, interval, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_HandelmanCertify)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_GnsExtract(benchmark::State& state) {
  auto s = moments_of(planar_atoms(static_cast<std::size_t>(state.range(0))), 9);
  auto model = gns_build(s, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gns_extract(model));
  }
}
BENCHMARK(BM_GnsExtract)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
