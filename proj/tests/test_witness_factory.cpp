#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "copwit/copositive_cone.hpp"
#include "copwit/matrix_core.hpp"
#include "copwit/registry.hpp"
#include "copwit/symmetric_space.hpp"
#include "copwit/witness_factory.hpp"

using namespace copwit;
using namespace copwit::witness_factory;
using symmetric_space::IndexPair;

namespace {

RealMat random_sym(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RealMat a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) a(i, j) = a(j, i) = u(rng);
  }
  return a;
}

symmetric_space::DSProbabilities random_weights(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  symmetric_space::DSProbabilities p;
  p.d = d;
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) p.p[IndexPair(i, j)] = u(rng);
  }
  return p;
}

}  // namespace

TEST_CASE("extend places matrix entries on the double-index diagonal") {
  RealMat h(2, 2);
  h << 1, 0, 0, 1;
  const RealMat e = extend(h);
  CplxMat expected = CplxMat::Zero(4, 4);
  expected(0, 0) = 1.0;  // |00><00|
  expected(3, 3) = 1.0;  // |11><11|
  CHECK(matrix_core::frob(CplxMat(e.cast<Cplx>() - expected)) <= 1e-15);

  RealMat ones = RealMat::Ones(2, 2);
  const RealMat eo = extend(ones);
  CHECK(eo(0, 3) == 1.0);  // <00|X|11>
  std::mt19937_64 rng(41);
  const RealMat r = random_sym(4, rng);
  const RealMat er = extend(r);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(er(i * 4 + i, j * 4 + j) == r(i, j));
  }
}

TEST_CASE("witness spectrum is the diagonal plus signed off-diagonal entries") {
  RealMat h(2, 2);
  h << 1, -1, -1, 1;
  const auto w = witness(h);
  auto eig = matrix_core::eigh(w.w).eigenvalues;
  std::vector<double> got(eig.data(), eig.data() + eig.size());
  std::sort(got.begin(), got.end());
  const std::vector<double> want{-1, 1, 1, 1};
  for (std::size_t k = 0; k < want.size(); ++k) {
    CHECK(got[k] == doctest::Approx(want[k]));
  }

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 5);
    const RealMat r = random_sym(d, rng);
    auto ev = matrix_core::eigh(witness(r).w).eigenvalues;
    std::vector<double> actual(ev.data(), ev.data() + ev.size());
    std::vector<double> expected;
    for (int i = 0; i < d; ++i) expected.push_back(r(i, i));
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        expected.push_back(r(i, j));
        expected.push_back(-r(i, j));
      }
    }
    std::sort(actual.begin(), actual.end());
    std::sort(expected.begin(), expected.end());
    REQUIRE(actual.size() == expected.size());
    for (std::size_t k = 0; k < actual.size(); ++k) {
      CHECK(std::abs(actual[k] - expected[k]) <= 1e-9);
    }
  }
}

TEST_CASE("product-state expectation equals the quadratic form in the moduli") {
  std::mt19937_64 rng(43);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 5);
    const RealMat h = random_sym(d, rng);
    const auto w = witness(h);
    CplxVec e(d);
    for (int i = 0; i < d; ++i) e[i] = Cplx(g(rng), g(rng));
    e.normalize();
    CplxVec v(d * d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) v[i * d + j] = e[i] * e[j];
    }
    const double val = ((v.adjoint() * w.w * v)(0, 0)).real();
    RealVec x(d);
    for (int i = 0; i < d; ++i) x[i] = std::norm(e[i]);
    CHECK(std::abs(val - x.dot(h * x)) <= 1e-10);
  }
}

TEST_CASE("projection is diagonal in the Dicke basis") {
  std::mt19937_64 rng(44);
  const RealMat h = random_sym(4, rng);
  const auto ws = project_sym(witness(h));
  CHECK(ws.projected);
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const CplxVec dij = symmetric_space::dicke_vector(i, j, 4);
      const double diag = ((dij.adjoint() * ws.w * dij)(0, 0)).real();
      CHECK(diag == doctest::Approx(h(i, j)));
    }
  }
  // Antisymmetric vectors are annihilated.
  CplxVec anti = CplxVec::Zero(16);
  anti[0 * 4 + 1] = 1.0 / std::sqrt(2.0);
  anti[1 * 4 + 0] = -1.0 / std::sqrt(2.0);
  CHECK(std::abs((anti.adjoint() * ws.w * anti)(0, 0)) <= 1e-13);
}

TEST_CASE("projection never changes expectations on symmetric states") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const RealMat h = random_sym(d, rng);
    const auto w = witness(h);
    const auto ws = project_sym(w);
    const auto s = symmetric_space::build_ds(random_weights(d, rng));
    CHECK(std::abs(expectation(w, s) - expectation(ws, s)) <= 1e-10);
  }
}

TEST_CASE("pq_split returns PSD parts matching the projected witness") {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 3);
    RealMat g(d, d);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) g(i, j) = 2.0 * u(rng) - 1.0;
    }
    const RealMat h_psd = g * g.transpose();
    RealMat h_n(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = i; j < d; ++j) h_n(i, j) = h_n(j, i) = u(rng);
    }
    const auto [p, q] = pq_split(h_psd, h_n);
    CHECK(matrix_core::is_psd(RealMat(p), 1e-8).first);
    CHECK(matrix_core::is_psd(RealMat(q), 1e-8).first);
    // P + Q^{T_B} agrees with the projected witness of the sum after
    // conjugation by the symmetric projector.
    const RealMat pi = symmetric_space::sym_projector(d).real();
    const CplxMat qtb = symmetric_space::partial_transpose(q.cast<Cplx>(), d);
    const CplxMat lhs = pi.cast<Cplx>() * (p.cast<Cplx>() + qtb) * pi.cast<Cplx>();
    const auto ws = project_sym(witness(RealMat(h_psd + h_n)));
    const CplxMat rhs = pi.cast<Cplx>() * ws.w * pi.cast<Cplx>();
    CHECK(matrix_core::frob(CplxMat(lhs - rhs)) <= 1e-9);
  }
}

TEST_CASE("pq_split on the trivial split of the identity") {
  const RealMat id = RealMat::Identity(3, 3);
  const RealMat zero = RealMat::Zero(3, 3);
  const auto [p, q] = pq_split(id, zero);
  CHECK(matrix_core::frob(p) <= 1e-14);
  CplxMat expected = CplxMat::Zero(9, 9);
  for (int i = 0; i < 3; ++i) expected(i * 3 + i, i * 3 + i) = 1.0;
  CHECK(matrix_core::frob(CplxMat(q.cast<Cplx>() - expected)) <= 1e-14);
}

TEST_CASE("pq_split validates its preconditions") {
  RealMat not_psd(2, 2);
  not_psd << 1, 0, 0, -1;
  const RealMat ok = RealMat::Identity(2, 2);
  CHECK_THROWS_AS(pq_split(not_psd, ok), std::invalid_argument);
  RealMat neg(2, 2);
  neg << 1, -0.5, -0.5, 1;
  CHECK_THROWS_AS(pq_split(ok, neg), std::invalid_argument);
}

TEST_CASE("coherent witness with no couplings is the plain projection") {
  const RealMat h = registry::toth_witness_matrix();
  const auto a = coherent_witness(h, {});
  const auto b = project_sym(witness(h));
  CHECK(matrix_core::frob(CplxMat(a.w - b.w)) <= 1e-12);
}

TEST_CASE("coherent witness rejects degenerate index triples") {
  const RealMat h = RealMat::Identity(3, 3);
  CoeffMap bad1;
  bad1[{0, IndexPair(0, 2)}] = 1.0;  // i inside the pair
  CHECK_THROWS_AS(coherent_witness(h, bad1), std::invalid_argument);
  CoeffMap bad2;
  bad2[{0, IndexPair(1, 3)}] = 1.0;  // out of range for d = 3
  CHECK_THROWS_AS(coherent_witness(h, bad2), std::invalid_argument);
}

TEST_CASE("one coupling shifts the expectation by four times coeff times amplitude") {
  const RealMat h = RealMat::Identity(3, 3);
  const double coeff = -0.7;
  CoeffMap c;
  c[{1, IndexPair(0, 2)}] = coeff;
  const auto w = coherent_witness(h, c);

  symmetric_space::DSProbabilities p;
  p.d = 3;
  for (int i = 0; i < 3; ++i) p.p[IndexPair(i, i)] = 1.0 / 3.0;
  const double amp = 0.05;
  symmetric_space::CoherenceMap cm;
  cm.d = 3;
  cm.entries.push_back({IndexPair(1, 1), IndexPair(0, 2), Cplx(amp, 0)});
  const auto s = symmetric_space::build_symmetric(p, cm);
  const auto s0 = symmetric_space::build_ds(p);

  const double with_coh = expectation(w, s);
  const double without = expectation(w, s0);
  CHECK(with_coh - without == doctest::Approx(4.0 * coeff * amp));
}

TEST_CASE("diagonal-free couplings leave diagonal-state expectations unchanged") {
  std::mt19937_64 rng(47);
  const RealMat h = random_sym(4, rng);
  const auto plain = project_sym(witness(h));
  CoeffMap c;
  c[{0, IndexPair(1, 2)}] = 5.0;
  c[{3, IndexPair(0, 2)}] = -2.5;
  const auto coh = coherent_witness(h, c);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = symmetric_space::build_ds(random_weights(4, rng));
    CHECK(std::abs(expectation(plain, s) - expectation(coh, s)) <= 1e-10);
  }
}

TEST_CASE("expectation reproduces the companion-matrix trace identity") {
  std::mt19937_64 rng(48);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 6);
    const RealMat h = random_sym(d, rng);
    const auto p = random_weights(d, rng);
    const auto s = symmetric_space::build_ds(p);
    const double lhs = expectation(witness(h), s);
    const double rhs = (h * symmetric_space::m_matrix(p)).trace();
    CHECK(std::abs(lhs - rhs) <= 1e-10);
  }
}

TEST_CASE("negative entries guarantee detection of the matching Dicke state") {
  RealMat h(3, 3);
  h << 1, -0.4, 1,
       -0.4, 1, 1,
       1, 1, 1;
  const auto w = witness(h);
  const CplxVec d01 = symmetric_space::dicke_vector(0, 1, 3);
  const auto s = symmetric_space::make_state(3, d01 * d01.adjoint());
  CHECK(expectation(w, s) == doctest::Approx(-0.4));
}

TEST_CASE("expectation rejects dimension mismatches") {
  const auto w = witness(RealMat::Identity(2, 2));
  const CplxMat rho9 = CplxMat::Identity(9, 9);
  CHECK_THROWS_AS(expectation(w, rho9), std::invalid_argument);
}
