#include <doctest.h>

#include "sudec/lierep.hpp"

#include <random>

using namespace sudec;

namespace {

DynkinLabel su3(int p, int q) { return DynkinLabel(3, {p, q}); }

std::vector<double> random_su_phases(int d, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-M_PI, M_PI);
  std::vector<double> th(static_cast<size_t>(d));
  double sum = 0;
  for (int i = 0; i + 1 < d; ++i) {
    th[static_cast<size_t>(i)] = u(rng);
    sum += th[static_cast<size_t>(i)];
  }
  th[static_cast<size_t>(d) - 1] = -sum;
  return th;
}

}  // namespace

TEST_CASE("weyl_dimension on SU(3)") {
  CHECK(weyl_dimension(su3(0, 0)) == 1);
  CHECK(weyl_dimension(su3(1, 0)) == 3);
  CHECK(weyl_dimension(su3(1, 1)) == 8);
  CHECK(weyl_dimension(su3(3, 0)) == 10);
  CHECK(weyl_dimension(su3(2, 2)) == 27);
  // Cross-check by character at the identity.
  std::vector<double> zero{0, 0, 0};
  CHECK(std::abs(irrep_character(su3(2, 2), zero) - Complex(27.0)) < 1e-9);
}

TEST_CASE("weyl_dimension SU(2) and SU(4)") {
  CHECK(weyl_dimension(DynkinLabel(2, {4})) == 5);  // spin 2
  CHECK(weyl_dimension(DynkinLabel(4, {1, 0, 1})) == 15);
  CHECK(weyl_dimension(DynkinLabel(4, {2, 0, 2})) == 84);
}

TEST_CASE("character at identity equals dimension") {
  std::mt19937 rng(7);
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      std::vector<double> zero{0, 0, 0};
      CHECK(std::abs(irrep_character(su3(p, q), zero) -
                     Complex(static_cast<double>(weyl_dimension(su3(p, q))))) < 1e-9);
    }
}

TEST_CASE("adjoint character is |chi_fund|^2 - 1") {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    auto th = random_su_phases(3, rng);
    Complex fund = 0;
    for (double t : th) fund += std::exp(Complex(0, t));
    Complex adj = irrep_character(su3(1, 1), th);
    CHECK(std::abs(adj - (std::norm(fund) - 1.0)) < 1e-10);
  }
}

TEST_CASE("su2_character values and cross-implementation oracle") {
  CHECK(su2_character(3, 0.0) == doctest::Approx(7.0));
  CHECK(su2_character(1, M_PI) == doctest::Approx(-1.0));
  CHECK(su2_character(2, 2 * M_PI) == doctest::Approx(5.0));
  // Dirichlet-kernel closed form away from the singularities.
  for (double th : {0.3, 1.0, 2.2}) {
    CHECK(su2_character(4, th) ==
          doctest::Approx(std::sin(9 * th / 2) / std::sin(th / 2)).epsilon(1e-12));
  }
  // SU(2) irrep via the Schur route: phases (theta/2, -theta/2).
  double th = 2 * M_PI / 3;
  Complex viaschur = irrep_character(DynkinLabel(2, {4}), {th / 2, -th / 2});
  CHECK(std::abs(viaschur - Complex(su2_character(2, th))) < 1e-12);
}

TEST_CASE("degenerate-eigenphase stability") {
  double th = 0.9;
  std::vector<double> degenerate{th, th, -2 * th};
  Complex direct = irrep_character(su3(2, 1), degenerate);
  double eps = 1e-7;
  std::vector<double> perturbed{th + eps, th - eps, -2 * th};
  Complex limit = irrep_character(su3(2, 1), perturbed);
  CHECK(std::abs(direct - limit) < 1e-5);
  // And exactly at the center element.
  std::vector<double> center{2 * M_PI / 3, 2 * M_PI / 3, 2 * M_PI / 3};
  Complex c = irrep_character(su3(1, 1), center);
  CHECK(std::abs(c - Complex(8.0)) < 1e-9);  // adjoint is blind to the center
}

TEST_CASE("tensor_decompose: adjoint squared for SU(3)") {
  auto dec = tensor_decompose(su3(1, 1), su3(1, 1));
  CHECK(dec.multiplicity(su3(0, 0)) == 1);
  CHECK(dec.multiplicity(su3(1, 1)) == 2);
  CHECK(dec.multiplicity(su3(0, 3)) == 1);
  CHECK(dec.multiplicity(su3(3, 0)) == 1);
  CHECK(dec.multiplicity(su3(2, 2)) == 1);
  CHECK(dec.terms.size() == 5);
  CHECK(dec.total_dimension() == 64);
}

TEST_CASE("tensor_decompose: SU(4) adjoint squared") {
  DynkinLabel adj(4, {1, 0, 1});
  auto dec = tensor_decompose(adj, adj);
  CHECK(dec.multiplicity(DynkinLabel(4, {0, 0, 0})) == 1);
  CHECK(dec.multiplicity(adj) == 2);
  CHECK(dec.multiplicity(DynkinLabel(4, {0, 2, 0})) == 1);
  CHECK(dec.multiplicity(DynkinLabel(4, {2, 1, 0})) == 1);
  CHECK(dec.multiplicity(DynkinLabel(4, {0, 1, 2})) == 1);
  CHECK(dec.multiplicity(DynkinLabel(4, {2, 0, 2})) == 1);
  CHECK(dec.total_dimension() == 15 * 15);
}

TEST_CASE("tensor_decompose: SU(2) angular momentum addition") {
  auto dec = tensor_decompose(DynkinLabel(2, {2}), DynkinLabel(2, {2}));
  CHECK(dec.multiplicity(DynkinLabel(2, {0})) == 1);
  CHECK(dec.multiplicity(DynkinLabel(2, {2})) == 1);
  CHECK(dec.multiplicity(DynkinLabel(2, {4})) == 1);
  CHECK(dec.terms.size() == 3);
}

TEST_CASE("dimension consistency on random products") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(0, 3);
  for (int rep = 0; rep < 10; ++rep) {
    DynkinLabel a = su3(c(rng), c(rng)), b = su3(c(rng), c(rng));
    auto dec = tensor_decompose(a, b);
    CHECK(dec.total_dimension() == weyl_dimension(a) * weyl_dimension(b));
  }
}

TEST_CASE("character multiplicativity across tensor products") {
  std::mt19937 rng(17);
  DynkinLabel a = su3(1, 1), b = su3(2, 0);
  auto dec = tensor_decompose(a, b);
  for (int rep = 0; rep < 20; ++rep) {
    auto th = random_su_phases(3, rng);
    Complex prod = irrep_character(a, th) * irrep_character(b, th);
    Complex sum = 0;
    for (const auto& [label, mult] : dec.terms)
      sum += static_cast<double>(mult) * irrep_character(label, th);
    CHECK(std::abs(prod - sum) < 1e-8);
  }
}

TEST_CASE("duality: a (x) dual(a) contains the trivial exactly once") {
  for (auto a : {su3(1, 0), su3(1, 1), su3(2, 1), su3(3, 0)}) {
    CHECK(dual(dual(a)) == a);
    auto dec = tensor_decompose(a, dual(a));
    CHECK(dec.multiplicity(trivial_label(3)) == 1);
  }
  CHECK(dual(su3(2, 1)) == su3(1, 2));
}

TEST_CASE("adjoint_power_labels reproduces the K = 2, 3, 4 lists") {
  auto k2 = adjoint_power_labels(3, 2);
  std::set<DynkinLabel> expect2{su3(0, 0), su3(1, 1), su3(0, 3), su3(3, 0), su3(2, 2)};
  CHECK(k2 == expect2);

  auto k3 = adjoint_power_labels(3, 3);
  std::set<DynkinLabel> expect3 = expect2;
  expect3.insert(su3(4, 1));
  expect3.insert(su3(1, 4));
  expect3.insert(su3(3, 3));
  CHECK(k3 == expect3);

  auto k4 = adjoint_power_labels(3, 4);
  std::set<DynkinLabel> expect4 = expect3;
  for (auto l : {su3(6, 0), su3(0, 6), su3(5, 2), su3(2, 5), su3(4, 4)}) expect4.insert(l);
  CHECK(k4 == expect4);
}

TEST_CASE("qudit-qudit closed form for d = 5, 6, 7") {
  for (int d : {5, 6, 7}) CHECK(verify_qudit_formula(d));
}

TEST_CASE("operator space spins") {
  CHECK(su2_operator_space_labels(2, 1) == std::set<int>{0, 1, 2});
  CHECK(su2_operator_space_labels(1, 1) == std::set<int>{0, 1});
  CHECK(su2_operator_space_labels(2, 2) == std::set<int>{0, 1, 2, 3, 4});
}
