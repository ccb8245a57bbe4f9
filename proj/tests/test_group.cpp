#include <doctest.h>

#include "sudec/catalog.hpp"
#include "sudec/group.hpp"

#include <random>

using namespace sudec;

namespace {

DynkinLabel su3(int p, int q) { return DynkinLabel(3, {p, q}); }
DynkinLabel spin(int L) { return DynkinLabel(2, {2 * L}); }

}  // namespace

TEST_CASE("closure of the catalog generating sets hits the published orders") {
  CHECK(catalog_group("Delta3n2", 2).order() == 12);
  CHECK(catalog_group("Delta27").order() == 27);
  CHECK(catalog_group("Delta24").order() == 24);
  CHECK(catalog_group("Delta54").order() == 54);
  CHECK(catalog_group("Delta6n2", 1).order() == 6);
  CHECK(catalog_group("Sigma60").order() == 60);
  CHECK(catalog_group("Sigma168").order() == 168);
  CHECK(catalog_group("Sigma36x3").order() == 108);
  CHECK(catalog_group("Sigma72x3").order() == 216);
  CHECK(catalog_group("T").order() == 12);
  CHECK(catalog_group("O").order() == 24);
  CHECK(catalog_group("I").order() == 60);
  CHECK(catalog_group("D2teddy").order() == 4);
  CHECK(catalog_group("Tteddy").order() == 12);
  CHECK(catalog_group("Tc5z").order() == 12);
  CHECK(catalog_group("Oc5z").order() == 24);
}

TEST_CASE("trivial group and max_order abort") {
  FiniteGroup one = generate_group({identity(3)});
  CHECK(one.order() == 1);
  CHECK_THROWS_AS(generate_group(builtin_generators("Sigma72x3"), GroupMode::exact, 100),
                  OrderExceeded);
  CHECK_THROWS_AS(catalog_group("NoSuchGroup"), UnknownGroup);
}

TEST_CASE("projective closure of Sigma72x3 collapses the center") {
  FiniteGroup g = generate_group(builtin_generators("Sigma72x3"), GroupMode::projective, 1000);
  CHECK(g.order() == 72);
}

TEST_CASE("closure determinism") {
  FiniteGroup a = catalog_group("Sigma36x3");
  FiniteGroup b = catalog_group("Sigma36x3");
  REQUIRE(a.order() == b.order());
  for (int i = 0; i < a.order(); ++i) CHECK((a.element(i) - b.element(i)).norm() == 0.0);
}

TEST_CASE("center detection and quotient orders") {
  FiniteGroup d27 = catalog_group("Delta27");
  CHECK(contains_center(d27));
  CHECK(quotient_by_center(d27).order() == 9);

  FiniteGroup s72 = catalog_group("Sigma72x3");
  CHECK(contains_center(s72));
  CHECK(quotient_by_center(s72).order() == 72);

  FiniteGroup d12 = catalog_group("Delta12");
  CHECK_FALSE(contains_center(d12));
  CHECK_THROWS_AS(quotient_by_center(d12), NoCenter);
}

TEST_CASE("class equation") {
  for (const char* name : {"Delta12", "Delta24", "Sigma36x3", "T", "O"}) {
    FiniteGroup g = catalog_group(name);
    const auto& classes = g.conjugacy_classes();
    int total = 0;
    for (const auto& c : classes) {
      total += static_cast<int>(c.size());
      CHECK(g.order() % static_cast<int>(c.size()) == 0);
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("trivial multiplicities from Table III anchors") {
  CHECK(trivial_multiplicity(catalog_group("Delta12"), su3(1, 1)) == 0);
  CHECK(trivial_multiplicity(catalog_group("Delta6n2", 1), su3(1, 1)) > 0);
  FiniteGroup s72 = catalog_group("Sigma72x3");
  CHECK(trivial_multiplicity(s72, su3(2, 2)) == 0);
  CHECK(trivial_multiplicity(s72, su3(4, 1)) > 0);
}

TEST_CASE("SO(3) groups scan spin labels through the rotation angle") {
  FiniteGroup d2 = catalog_group("D2");
  std::vector<DynkinLabel> labels;
  for (int L = 0; L <= 6; ++L) labels.push_back(spin(L));
  auto rows = accessibility_scan(d2, labels);
  // D2 ladder (1+3(-1)^L+2L)/4: inaccessible exactly at L = 1; the rank-3
  // invariant xyz already revives it at L = 3.
  std::vector<int> expected{1, 0, 2, 1, 3, 2, 4};
  for (int L = 0; L <= 6; ++L)
    CHECK(rows[static_cast<size_t>(L)].multiplicity == expected[static_cast<size_t>(L)]);
}

TEST_CASE("one-dimensional characters of D2, T, Sigma72x3") {
  FiniteGroup d2 = catalog_group("D2");
  auto chis = one_dim_characters(d2);
  REQUIRE(chis.size() == 4);
  // Trivial first; all rows are +-1 valued and mutually orthogonal.
  for (auto v : chis[0].class_values) CHECK(std::abs(v - Complex(1.0)) < 1e-10);
  for (size_t i = 0; i < chis.size(); ++i)
    for (size_t j = 0; j < chis.size(); ++j) {
      Complex dot = 0;
      const auto& classes = d2.conjugacy_classes();
      for (size_t c = 0; c < classes.size(); ++c)
        dot += static_cast<double>(classes[c].size()) * std::conj(chis[i].class_values[c]) *
               chis[j].class_values[c];
      dot /= d2.order();
      CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-8);
    }

  auto t_chis = one_dim_characters(catalog_group("T"));
  CHECK(t_chis.size() == 3);
  // The nontrivial ones take the values 1, omega, omega^2.
  bool has_omega = false;
  for (const auto& chi : t_chis)
    for (auto v : chi.class_values)
      if (std::abs(v - std::exp(Complex(0, 2 * M_PI / 3))) < 1e-9) has_omega = true;
  CHECK(has_omega);

  CHECK(one_dim_characters(catalog_group("Sigma72x3")).size() == 4);
  CHECK(one_dim_characters(catalog_group("Sigma168")).size() == 1);
}

TEST_CASE("rep_multiplicity: trivial character against itself, and spin spaces") {
  FiniteGroup t = catalog_group("T");
  auto chis = one_dim_characters(t);
  const auto& classes = t.conjugacy_classes();
  std::vector<Complex> trivial_space(classes.size(), 1.0);
  CHECK(rep_multiplicity(t, trivial_space, chis[0]) == 1);

  // Spin-6 space of T: trivial multiplicity 2.
  std::vector<Complex> chi6(classes.size());
  for (size_t c = 0; c < classes.size(); ++c)
    chi6[c] = su2_character(6, rotation_angle(t.element(classes[c][0])));
  CHECK(rep_multiplicity(t, chi6, chis[0]) == 2);

  // Spin-2 space of D2: trivial multiplicity 2.
  FiniteGroup d2 = catalog_group("D2");
  auto d2_chis = one_dim_characters(d2);
  const auto& d2cl = d2.conjugacy_classes();
  std::vector<Complex> chi2(d2cl.size());
  for (size_t c = 0; c < d2cl.size(); ++c)
    chi2[c] = su2_character(2, rotation_angle(d2.element(d2cl[c][0])));
  CHECK(rep_multiplicity(d2, chi2, d2_chis[0]) == 2);
}

TEST_CASE("symmetrize: identity fixed, inaccessible directions killed") {
  FiniteGroup d12 = catalog_group("Delta12");
  auto pis = represent_all(d12, defining_rep());
  CHECK((symmetrize(identity(3), pis) - identity(3)).norm() < 1e-12);
  Mat l3 = gell_mann(3);
  CHECK(symmetrize(l3, pis).norm() < 1e-10);

  // Idempotence on a random Hermitian input.
  std::mt19937 rng(5);
  std::normal_distribution<double> gauss;
  Mat h(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h(i, j) = Complex(gauss(rng), gauss(rng));
  h = (h + Mat(h.adjoint())) / 2.0;
  Mat once = symmetrize(h, pis);
  CHECK((symmetrize(once, pis) - once).norm() < 1e-9);
}

TEST_CASE("fixed-subspace dimension equals the character multiplicity") {
  // Dimension of the operator-space fixed subspace = sum of trivial
  // multiplicities over the irreps of the operator space.
  for (const char* name : {"Delta12", "Delta24"}) {
    FiniteGroup g = catalog_group(name);
    auto pis = represent_all(g, defining_rep());
    // Symmetrize all matrix units of B(C^3) and count independent images.
    std::vector<Mat> images;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Mat e = Mat::Zero(3, 3);
        e(i, j) = 1;
        images.push_back(symmetrize(e, pis));
      }
    Eigen::MatrixXcd stack(9, 9);
    for (size_t k = 0; k < images.size(); ++k)
      stack.row(static_cast<Eigen::Index>(k)) =
          Eigen::Map<const Eigen::VectorXcd>(images[k].data(), 9).transpose();
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(stack);
    qr.setThreshold(1e-8);
    int fixed_dim = static_cast<int>(qr.rank());
    int expected = 1 + trivial_multiplicity(g, su3(1, 1));  // identity + adjoint part
    CHECK(fixed_dim == expected);
  }
}

TEST_CASE("projective quotient symmetrizes operator spaces identically") {
  FiniteGroup s36 = catalog_group("Sigma36x3");
  FiniteGroup q = quotient_by_center(s36);
  CHECK(q.order() == 36);
  std::mt19937 rng(9);
  std::normal_distribution<double> gauss;
  Mat h(9, 9);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) h(i, j) = Complex(gauss(rng), gauss(rng));
  h = (h + Mat(h.adjoint())) / 2.0;
  Mat full = symmetrize(h, s36, tensor_power_rep(2));
  Mat quot = symmetrize(h, q, tensor_power_rep(2));
  CHECK((full - quot).norm() < 1e-10);
}

TEST_CASE("factorizations") {
  FiniteGroup s72 = catalog_group("Sigma72x3");
  FiniteGroup s36 = catalog_group("Sigma36x3");
  std::vector<Mat> reps{identity(3), mat_X()};
  CHECK(verify_factorization(s72, s36, reps));

  FiniteGroup d12 = catalog_group("Delta12");
  CHECK(verify_factorization(d12, d12, {identity(3)}));

  CHECK_THROWS_AS(verify_factorization(s36, s72, {identity(3)}), NotSubgroup);
}

TEST_CASE("quotient structures K4 and Q8") {
  FiniteGroup s72 = catalog_group("Sigma72x3");
  FiniteGroup d54 = catalog_group("Delta54");
  auto k4 = quotient_group(s72, d54);
  CHECK(k4.order() == 4);
  int self_inverse = 0;
  for (int c = 1; c < 4; ++c)
    if (k4.coset_inverse(c) == c) self_inverse++;
  CHECK(self_inverse == 3);

  FiniteGroup d27 = catalog_group("Delta27");
  auto q8 = quotient_group(s72, d27);
  CHECK(q8.order() == 8);
  int order2 = 0;
  for (int c = 1; c < 8; ++c)
    if (q8.coset_order(c) == 2) order2++;
  CHECK(order2 == 1);

  auto trivial = quotient_group(s72, s72);
  CHECK(trivial.order() == 1);
}

TEST_CASE("is_symmetry_of") {
  Mat diag = Mat::Zero(3, 3);
  diag.diagonal() << 1.0, 2.0, -3.0;
  std::vector<Mat> diagunits{mat_A(5), mat_A(7)};
  CHECK(is_symmetry_of(diag, diagunits, defining_rep()));
  CHECK_FALSE(is_symmetry_of(Mat(gell_mann(1)), {mat_A(4)}, defining_rep()));
}

TEST_CASE("group JSON round trip re-closes to an isomorphic group") {
  FiniteGroup g = catalog_group("Delta24");
  g.conjugacy_classes();
  std::string text = group_to_json(g);
  FiniteGroup back = group_from_json(text);
  CHECK(back.order() == g.order());
  auto sizes = [](const FiniteGroup& x) {
    std::vector<size_t> s;
    for (const auto& c : x.conjugacy_classes()) s.push_back(c.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  CHECK(sizes(back) == sizes(g));
}

TEST_CASE("two-qutrit fixed-subspace dimension matches the character count") {
  // B(H x H) decomposes as 2(0,0) + 4(1,1) + (3,0) + (0,3) + (2,2); the rank
  // of the symmetrized matrix-unit images must equal the multiplicity sum.
  for (const char* name : {"Delta12", "Delta24"}) {
    FiniteGroup g = catalog_group(name);
    auto pis = represent_all(g, tensor_power_rep(2));
    Eigen::MatrixXcd stack(81, 81);
    int row = 0;
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) {
        Mat e = Mat::Zero(9, 9);
        e(i, j) = 1;
        Mat img = symmetrize(e, pis);
        stack.row(row++) = Eigen::Map<const Eigen::VectorXcd>(img.data(), 81).transpose();
      }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(stack);
    qr.setThreshold(1e-8);
    int expected = 2 + 4 * trivial_multiplicity(g, su3(1, 1)) +
                   trivial_multiplicity(g, su3(3, 0)) + trivial_multiplicity(g, su3(0, 3)) +
                   trivial_multiplicity(g, su3(2, 2));
    CHECK(static_cast<int>(qr.rank()) == expected);
  }
}

TEST_CASE("Delta12 and the tetrahedral rotations share their class structure") {
  FiniteGroup d12 = catalog_group("Delta12");
  FiniteGroup t = catalog_group("T");
  REQUIRE(d12.order() == 12);
  REQUIRE(t.order() == 12);
  auto sizes = [](const FiniteGroup& g) {
    std::vector<size_t> s;
    for (const auto& c : g.conjugacy_classes()) s.push_back(c.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  CHECK(sizes(d12) == sizes(t));
}
