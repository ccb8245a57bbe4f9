#include "sudec/catalog.hpp"

#include <cmath>
#include <map>

namespace sudec {

namespace {

Complex xi(int n, int k = 1) { return std::exp(Complex(0, 2 * M_PI * k / n)); }

Eigen::Vector3d vec(double x, double y, double z) { return {x, y, z}; }

// Tetrahedral subgroup of the z-axis-C5 icosahedral group: identity, three
// pi-rotations about mutually orthogonal C2 axes, and the compatible C3s.
// Deterministic pick: orthogonal C2 triple containing the axis of smallest
// azimuth, ordered by azimuth.
std::vector<Mat> icosahedral_z_generators() {
  double alpha = std::acos(1.0 / std::sqrt(5.0));
  Eigen::Vector3d v(std::sin(alpha), 0.0, std::cos(alpha));
  Eigen::Vector3d mid = (Eigen::Vector3d(0, 0, 1) + v).normalized();
  return {so3_rotation(vec(0, 0, 1), 2 * M_PI / 5), so3_rotation(mid, M_PI)};
}

std::vector<Mat> tetrahedral_in_icosahedral_z() {
  FiniteGroup ico = generate_group(icosahedral_z_generators(), GroupMode::exact, 120);
  // Collect pi-rotation axes.
  std::vector<Eigen::Vector3d> axes;
  for (const auto& e : ico.elements()) {
    if (std::abs(rotation_angle(e) - M_PI) > 1e-9) continue;
    Eigen::Matrix3d r = e.real();
    Eigen::AngleAxisd aa(r);
    Eigen::Vector3d ax = aa.axis();
    if (ax(2) < 0 || (std::abs(ax(2)) < 1e-12 && ax(0) < 0)) ax = -ax;
    axes.push_back(ax);
  }
  std::sort(axes.begin(), axes.end(), [](const auto& a, const auto& b) {
    double pa = std::atan2(a(1), a(0)), pb = std::atan2(b(1), b(0));
    if (std::abs(pa - pb) > 1e-9) return pa < pb;
    return a(2) < b(2);
  });
  for (size_t i = 0; i < axes.size(); ++i)
    for (size_t j = i + 1; j < axes.size(); ++j) {
      if (std::abs(axes[i].dot(axes[j])) > 1e-9) continue;
      // Found an orthogonal pair; the D2 it generates plus any order-3 element
      // of the icosahedral group normalizing it closes into a tetrahedral group.
      std::vector<Mat> d2 = {so3_rotation(axes[i], M_PI), so3_rotation(axes[j], M_PI)};
      for (const auto& e : ico.elements()) {
        double ang = rotation_angle(e);
        if (std::abs(ang - 2 * M_PI / 3) > 1e-9) continue;
        std::vector<Mat> cand = d2;
        cand.push_back(e);
        try {
          FiniteGroup t = generate_group(cand, GroupMode::exact, 13);
          if (t.order() == 12) return cand;
        } catch (const OrderExceeded&) {
        }
      }
    }
  throw std::logic_error("no tetrahedral subgroup found in icosahedral group");
}

std::vector<Mat> octahedral_c5z_generators() {
  auto tgens = tetrahedral_in_icosahedral_z();
  // Extend by a pi/2 rotation about one of the tetrahedral C2 axes.
  Eigen::Matrix3d r = tgens[0].real();
  Eigen::AngleAxisd aa(r);
  auto gens = tgens;
  gens.push_back(so3_rotation(aa.axis(), M_PI / 2));
  return gens;
}

}  // namespace

Mat mat_A(int n) {
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = 1;
  m(1, 1) = xi(n);
  m(2, 2) = xi(n, -1);
  return m;
}

Mat mat_B() {
  Mat m = Mat::Zero(3, 3);
  m(0, 2) = -1;
  m(1, 1) = -1;
  m(2, 0) = -1;
  return m;
}

Mat mat_C() { return mat_A(3); }

Mat mat_D() {
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = xi(9, 2);
  m(1, 1) = xi(9, 2);
  m(2, 2) = xi(9, 2) * xi(3);
  return m;
}

Mat mat_E() {
  Mat m = Mat::Zero(3, 3);
  m(0, 1) = 1;
  m(1, 2) = 1;
  m(2, 0) = 1;
  return m;
}

Mat mat_F() {
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = -1;
  m(1, 2) = -xi(3);
  m(2, 1) = -xi(3, 2);
  return m;
}

Mat mat_V() {
  Mat m(3, 3);
  m << 1, 1, 1, 1, xi(3), xi(3, 2), 1, xi(3, 2), xi(3);
  return Mat(m / (std::sqrt(3.0) * Complex(0, 1)));
}

Mat mat_W() {
  double nu1 = (-1 + std::sqrt(5.0)) / 2, nu2 = (-1 - std::sqrt(5.0)) / 2;
  Mat m(3, 3);
  m << -1, nu2, nu1, nu2, nu1, -1, nu1, -1, nu2;
  return Mat(m / 2.0);
}

Mat mat_X() {
  Mat m(3, 3);
  m << 1, 1, xi(3, 2), 1, xi(3), xi(3), xi(3), 1, xi(3);
  return Mat(m / (std::sqrt(3.0) * Complex(0, 1)));
}

Mat mat_Y() {
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = xi(7);
  m(1, 1) = xi(7, 2);
  m(2, 2) = xi(7, 4);
  return m;
}

Mat mat_Z() {
  auto e = [&](int k) { return xi(7, k); };
  Mat m(3, 3);
  m << e(4) - e(3), e(2) - e(5), e(1) - e(6),
       e(2) - e(5), e(1) - e(6), e(4) - e(3),
       e(1) - e(6), e(4) - e(3), e(2) - e(5);
  return Mat(m * Complex(0, 1) / std::sqrt(7.0));
}

std::vector<Mat> builtin_generators(const std::string& name, std::optional<int> n) {
  auto need_n = [&](int min_n) {
    if (!n || *n < min_n) throw UnknownGroup(name + " requires n >= " + std::to_string(min_n));
    return *n;
  };
  if (name == "Delta3n2") {
    int k = need_n(2);
    return {mat_A(k), mat_E()};
  }
  if (name == "Delta6n2") {
    int k = need_n(1);
    return {mat_A(k), mat_E(), mat_B()};
  }
  if (name == "Delta12") return {mat_A(2), mat_E()};
  if (name == "Delta27") return {mat_A(3), mat_E()};
  if (name == "Delta24") return {mat_A(2), mat_E(), mat_B()};
  if (name == "Delta54") return {mat_A(3), mat_E(), mat_B()};
  if (name == "Sigma60") return {mat_E(), Mat(mat_A(2) * mat_W())};
  if (name == "Sigma168") return {mat_Y(), mat_Z()};
  if (name == "Sigma36x3") return {mat_C(), mat_V()};
  if (name == "Sigma72x3") return {mat_V(), mat_X()};
  if (name == "Sigma216x3") return {mat_V(), mat_D()};
  if (name == "Sigma360x3") return {mat_A(2), mat_E(), mat_W(), mat_F()};
  if (name == "D2") return {so3_rotation(vec(0, 0, 1), M_PI), so3_rotation(vec(1, 0, 0), M_PI)};
  if (name == "D3")
    return {so3_rotation(vec(0, 0, 1), 2 * M_PI / 3), so3_rotation(vec(1, 0, 0), M_PI)};
  if (name == "Dn") {
    int k = need_n(2);
    return {so3_rotation(vec(0, 0, 1), 2 * M_PI / k), so3_rotation(vec(1, 0, 0), M_PI)};
  }
  if (name == "T")
    return {so3_rotation(vec(0, 0, 1), M_PI), so3_rotation(vec(1, 0, 0), M_PI),
            so3_rotation(vec(1, 1, 1), 2 * M_PI / 3)};
  if (name == "O")
    return {so3_rotation(vec(0, 0, 1), M_PI / 2), so3_rotation(vec(1, 1, 1), 2 * M_PI / 3)};
  if (name == "I") return icosahedral_z_generators();
  if (name == "D2teddy")
    return {so3_rotation(vec(std::sqrt(2.0), 0, 1), M_PI),
            so3_rotation(vec(-1 / std::sqrt(6.0), 1 / std::sqrt(2.0), 1 / std::sqrt(3.0)), M_PI)};
  if (name == "Tteddy") {
    auto gens = builtin_generators("D2teddy");
    gens.push_back(so3_rotation(vec(0, 0, 1), 2 * M_PI / 3));
    return gens;
  }
  if (name == "Tc5z") return tetrahedral_in_icosahedral_z();
  if (name == "Oc5z") return octahedral_c5z_generators();
  throw UnknownGroup("unknown group: " + name);
}

FiniteGroup catalog_group(const std::string& name, std::optional<int> n, int max_order) {
  int cap = max_order > 0 ? max_order : 5000;
  if (name == "Delta3n2" || name == "Delta6n2")
    cap = std::max(cap, 6 * (*n) * (*n) + 1);
  FiniteGroup g = generate_group(builtin_generators(name, n), GroupMode::exact, cap);
  std::string label = name;
  if (n) label += "(n=" + std::to_string(*n) + ")";
  g.set_name(label);
  return g;
}

std::vector<std::string> catalog_names() {
  return {"Delta3n2", "Delta6n2", "Delta12",  "Delta27",   "Delta24",    "Delta54",
          "Sigma60",  "Sigma168", "Sigma36x3", "Sigma72x3", "Sigma216x3", "Sigma360x3",
          "D2",       "D3",       "Dn",        "T",         "O",          "I",
          "D2teddy",  "Tteddy",   "Tc5z",      "Oc5z"};
}

}  // namespace sudec
