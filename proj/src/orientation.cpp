#include "sudec/orientation.hpp"

#include "sudec/catalog.hpp"

#include <json.hpp>

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <map>

namespace sudec {

Mat Orientation::full_conjugator() const {
  if (weyl_perm.empty()) return conjugator;
  return Mat(conjugator * permutation_matrix(weyl_perm));
}

Orientation identity_orientation(int d) {
  return Orientation{Mat::Identity(d, d), {}, "identity"};
}

Mat permutation_matrix(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  Mat p = Mat::Zero(n, n);
  for (int j = 0; j < n; ++j) p(perm[static_cast<size_t>(j)], j) = 1;
  return p;
}

std::vector<Mat> conjugate_generators(const std::vector<Mat>& gens, const Orientation& o) {
  Mat q = o.full_conjugator();
  std::vector<Mat> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(Mat(q.adjoint() * g * q));
  return out;
}

Mat diagonalizer_of_X() {
  const double s3 = std::sqrt(3.0);
  const double np = std::sqrt(6 + 2 * s3), nm = std::sqrt(6 - 2 * s3);
  const Complex w = std::exp(Complex(0, 2 * M_PI / 3));
  Mat u(3, 3);
  u << (1 + s3) / np, (1 - s3) / nm, 0,
       1 / np,        1 / nm,        -w * w / std::sqrt(2.0),
       w / np,        w / nm,        1 / std::sqrt(2.0);
  return u;
}

namespace {

std::vector<std::vector<int>> all_permutations_3() {
  return {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
}

std::string perm_name(const std::vector<int>& p) {
  static const std::map<std::vector<int>, std::string> names = {
      {{0, 1, 2}, "e"},   {{1, 0, 2}, "(12)"},  {{2, 1, 0}, "(13)"},
      {{0, 2, 1}, "(23)"}, {{1, 2, 0}, "(123)"}, {{2, 0, 1}, "(132)"}};
  return names.at(p);
}

}  // namespace

std::vector<Orientation> weyl_orientations() {
  Mat u = diagonalizer_of_X();
  std::vector<Orientation> out;
  for (const auto& p : all_permutations_3())
    out.push_back({u, p, "diag-X U" + perm_name(p)});
  return out;
}

std::vector<Orientation> reduced_weyl_orientations() {
  // The column swap (13) fixes the rotating-frame Hamiltonians, so cosets of
  // <(13)> suffice: representatives e, (12), (123).
  Mat u = diagonalizer_of_X();
  return {{u, {0, 1, 2}, "diag-X Ue"},
          {u, {1, 0, 2}, "diag-X U(12)"},
          {u, {1, 2, 0}, "diag-X U(123)"}};
}

std::pair<Mat, Mat> octahedral_reference_pair() {
  Mat m1(3, 3), m2(3, 3);
  m1 << 0, 1, 0, 0, 0, -1, -1, 0, 0;
  m2 << -1, 0, 0, 0, 0, -1, 0, -1, 0;
  return {m1, m2};
}

Delta24Embedding delta24_embedding() {
  // Septet-phase realization of Sigma(168) whose generator product is Y.
  auto e7 = [](int k) { return std::exp(Complex(0, 2 * M_PI * k / 7)); };
  const Complex i7 = Complex(0, 1) / std::sqrt(7.0);
  Mat a(3, 3), b(3, 3);
  a << e7(2) - e7(5), e7(1) - e7(6), e7(4) - e7(3),
       e7(1) - e7(6), e7(4) - e7(3), e7(2) - e7(5),
       e7(4) - e7(3), e7(2) - e7(5), e7(1) - e7(6);
  a *= i7;
  b << e7(3) - e7(6), e7(3) - e7(1), e7(1) - Complex(1),
       e7(2) - Complex(1), e7(6) - e7(5), e7(6) - e7(2),
       e7(5) - e7(4), e7(4) - Complex(1), e7(5) - e7(3);
  b *= i7;
  Mat w1 = b * (a * b) * (a * b) * (b * a) * (b * a);

  auto [m1, m2] = octahedral_reference_pair();
  FiniteGroup s168 = catalog_group("Sigma168");
  Mat e = mat_E();

  auto cpoly = [](const Mat& m) {
    Complex tr = m.trace();
    return std::make_pair(tr, (tr * tr - (m * m).trace()) / 2.0);
  };
  auto matches = [&](const Mat& x, const std::pair<Complex, Complex>& c) {
    auto p = cpoly(x);
    return std::abs(p.first - c.first) < 1e-8 && std::abs(p.second - c.second) < 1e-8;
  };
  auto c1 = cpoly(m1), c2 = cpoly(m2);
  std::vector<int> cands1, cands2;
  for (int i = 0; i < s168.order(); ++i) {
    if (matches(s168.element(i), c1)) cands1.push_back(i);
    if (matches(s168.element(i), c2)) cands2.push_back(i);
  }

  // Find the intertwiner w with w m_i w^dag inside Sigma(168) and w1^dag w
  // circulant. The target pair determines w up to phase.
  for (int ia : cands1) {
    for (int ib : cands2) {
      const Mat &g1 = s168.element(ia), &g2 = s168.element(ib);
      Eigen::MatrixXcd sys = Eigen::MatrixXcd::Zero(18, 9);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          int row = 3 * i + j;
          for (int k = 0; k < 3; ++k) {
            sys(row, 3 * i + k) += m1(k, j);
            sys(row, 3 * k + j) -= g1(i, k);
            sys(9 + row, 3 * i + k) += m2(k, j);
            sys(9 + row, 3 * k + j) -= g2(i, k);
          }
        }
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys, Eigen::ComputeFullV);
      if (svd.singularValues()(8) > 1e-8) continue;
      Eigen::VectorXcd v = svd.matrixV().col(8);
      Mat w(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) w(i, j) = v(3 * i + j);
      w /= std::sqrt((w.adjoint() * w).trace().real() / 3.0);
      if (!is_unitary(w, 1e-8)) continue;
      Mat w2 = w1.adjoint() * w;
      if ((e * w2 - w2 * e).norm() > 1e-8) continue;
      w = canonical_phase(w);
      Delta24Embedding emb;
      emb.conjugator = w;
      emb.w1 = w1;
      emb.w2 = Mat(w1.adjoint() * w);
      emb.generators = {Mat(w * m1 * w.adjoint()), Mat(w * m2 * w.adjoint())};
      return emb;
    }
  }
  throw std::logic_error("delta24_embedding: no circulant intertwiner found");
}

bool forbidden_entry_check(const Mat& h) {
  if (h.rows() != 3 || h.cols() != 3)
    throw DimensionMismatch("forbidden_entry_check: need a 3x3 matrix");
  return std::abs(h(0, 2)) <= 1e-9 * h.norm();
}

namespace {

// lambda_8 enters the pulse-frame phases unnormalized: diag(1, 1, -2).
Mat lambda8_unnormalized() {
  Mat m = Mat::Zero(3, 3);
  m.diagonal() << 1, 1, -2;
  return m;
}

Mat phase_frame(const Mat& rotor, double theta, double phi1, double phi2) {
  // e^{i theta rotor} e^{i phi1 diag(1,1,-2)} e^{i phi2 lambda3}
  return Mat(expm_skew(rotor, -theta) * expm_skew(lambda8_unnormalized(), -phi1) *
             expm_skew(gell_mann(3), -phi2));
}

}  // namespace

Mat pulse_frame_P() {
  const double s3 = std::sqrt(3.0);
  double theta = std::atan(std::sqrt((9 + s3) / (9 - s3)));
  double phi2 = -0.5 * std::acos(3.0 / std::sqrt(13.0));
  double phi_prime = -std::acos((0.5 + s3) / std::sqrt(5 + 2 * s3));
  double phi1 = (phi_prime - phi2) / 3.0;
  return phase_frame(gell_mann(2), theta, phi1, phi2);
}

Mat pulse_frame_Pprime() {
  const double s3 = std::sqrt(3.0);
  double theta = std::atan(std::sqrt((9 + s3) / 5.0));
  double phi2 = 0.5 * std::acos(1.0 / std::sqrt(5.0));
  double phi1 = (std::acos(3.0 / (2 * std::sqrt(5.0) * std::sqrt(5 + 2 * s3))) + phi2) / 3.0;
  return phase_frame(gell_mann(7), theta, phi1, phi2);
}

Mat pulse_generator_C() {
  Mat h = Mat::Zero(3, 3);
  h.diagonal() << 0, 1, -1;
  return Mat(h * (-2 * M_PI / 3));
}

Mat pulse_generator_V() {
  Mat m(3, 3);
  m << -1, -1, -1, -1, 0.5, 0.5, -1, 0.5, 0.5;
  return Mat(m * (-M_PI / 2 / std::sqrt(3.0)));
}

Mat pulse_generator_E() {
  const Complex i(0, 1);
  Mat m(3, 3);
  m << 0, -i, i, i, 0, -i, -i, i, 0;
  return Mat(m * (-2 * M_PI / 3 / std::sqrt(3.0)));
}

Mat double_driving_hamiltonian(const DoubleDrivingPulse& p) {
  if (p.omega_a < 0 || p.omega_b < 0)
    throw std::invalid_argument("double_driving_hamiltonian: amplitudes must be >= 0");
  double w10 = 2.0 / 3.0 * p.detuning_a - 1.0 / 3.0 * p.detuning_b;
  double wm10 = 2.0 / 3.0 * p.detuning_b - 1.0 / 3.0 * p.detuning_a;
  Mat h = Mat::Zero(3, 3);
  h(0, 0) = w10;
  h(1, 1) = wm10 - w10;
  h(2, 2) = -wm10;
  h(0, 1) = -p.omega_a * std::exp(Complex(0, -p.phi_a));
  h(1, 0) = -p.omega_a * std::exp(Complex(0, p.phi_a));
  h(1, 2) = -p.omega_b * std::exp(Complex(0, -p.phi_b));
  h(2, 1) = -p.omega_b * std::exp(Complex(0, p.phi_b));
  return h;
}

std::vector<Orientation> orientation_catalog() {
  std::vector<Orientation> cat = weyl_orientations();
  Mat u = diagonalizer_of_X();
  cat.push_back({Mat(u * pulse_frame_P().adjoint()), {}, "pulse-frame P"});
  cat.push_back({Mat(u * pulse_frame_Pprime().adjoint()), {}, "pulse-frame P'"});
  return cat;
}

std::vector<RankedOrientation> orientation_search(const std::vector<Mat>& gens,
                                                  const std::vector<Mat>& target_ops,
                                                  OrientationCriterion criterion) {
  return orientation_search(gens, target_ops, criterion, orientation_catalog());
}

std::string group_json_with_orientation(const FiniteGroup& g, const Orientation& o) {
  nlohmann::json j = nlohmann::json::parse(group_to_json(g));
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index r = 0; r < o.conjugator.rows(); ++r)
    for (Eigen::Index c = 0; c < o.conjugator.cols(); ++c)
      entries.push_back({o.conjugator(r, c).real(), o.conjugator(r, c).imag()});
  j["orientation"] = {{"conjugator", entries},
                      {"permutation", o.weyl_perm},
                      {"description", o.description}};
  return j.dump(2);
}

Orientation orientation_from_group_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const auto& jo = j.at("orientation");
  const auto& entries = jo.at("conjugator");
  int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(entries.size()))));
  Orientation o;
  o.conjugator = Mat(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) {
      const auto& pair = entries.at(static_cast<size_t>(r * d + c));
      o.conjugator(r, c) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
  o.weyl_perm = jo.at("permutation").get<std::vector<int>>();
  if (jo.contains("description")) o.description = jo["description"].get<std::string>();
  return o;
}

std::vector<RankedOrientation> orientation_search(const std::vector<Mat>& gens,
                                                  const std::vector<Mat>& target_ops,
                                                  OrientationCriterion criterion,
                                                  const std::vector<Orientation>& catalog) {
  if (catalog.empty()) throw EmptyCatalog("orientation_search: empty catalog");
  std::vector<RankedOrientation> ranked;
  for (const auto& o : catalog) {
    auto conj = conjugate_generators(gens, o);
    double score = 0;
    if (criterion == OrientationCriterion::symmetry) {
      for (const auto& g : conj) {
        bool all_ok = true;
        for (const auto& op : target_ops) {
          // Single-site targets see the defining action, two-site targets the
          // tensor-square; anything else is a caller error.
          const Eigen::Index d = g.rows();
          RepMap rep;
          if (op.rows() == d)
            rep = defining_rep();
          else if (op.rows() == d * d)
            rep = tensor_power_rep(2);
          else
            throw DimensionMismatch("orientation_search: target operator dimension");
          if (!is_symmetry_of(op, {g}, rep)) {
            all_ok = false;
            break;
          }
        }
        if (all_ok) score += 1.0;
      }
    } else {
      for (const auto& g : conj)
        score = std::max(score, std::abs(principal_log_generator(g)(0, 2)));
    }
    ranked.push_back({o, score});
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](const RankedOrientation& a, const RankedOrientation& b) {
                     return criterion == OrientationCriterion::symmetry ? a.score > b.score
                                                                        : a.score < b.score;
                   });
  return ranked;
}

}  // namespace sudec
