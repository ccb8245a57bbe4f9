#include "sudec/qecc.hpp"

#include "sudec/lierep.hpp"

#include <json.hpp>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace sudec {

AmbientSpace AmbientSpace::spin(int j) {
  AmbientSpace a;
  a.kind = Kind::spin;
  a.j = j;
  return a;
}

AmbientSpace AmbientSpace::symmetric(int d, int n_qudits) {
  AmbientSpace a;
  a.kind = Kind::symmetric_qudits;
  a.d = d;
  a.n_qudits = n_qudits;
  return a;
}

AmbientSpace AmbientSpace::full_register(int d, int n_qudits) {
  AmbientSpace a;
  a.kind = Kind::full_register;
  a.d = d;
  a.n_qudits = n_qudits;
  return a;
}

long AmbientSpace::dimension() const {
  switch (kind) {
    case Kind::spin: return 2L * j + 1;
    case Kind::symmetric_qudits: return sym_dim(d, n_qudits);
    case Kind::full_register: return static_cast<long>(std::pow(d, n_qudits));
  }
  return 0;
}

Mat ambient_action(const Mat& element, const AmbientSpace& a) {
  switch (a.kind) {
    case AmbientSpace::Kind::spin:
      return sym_power(su2_lift(element), 2 * a.j);
    case AmbientSpace::Kind::symmetric_qudits:
      return sym_power(element, a.n_qudits);
    case AmbientSpace::Kind::full_register:
      return kron_power(element, a.n_qudits);
  }
  throw UnknownKind("ambient_action: unknown ambient kind");
}

Complex space_character(const AmbientSpace& a, const Mat& element) {
  switch (a.kind) {
    case AmbientSpace::Kind::spin:
      return su2_character(a.j, rotation_angle(element));
    case AmbientSpace::Kind::symmetric_qudits:
      return complete_homogeneous(a.n_qudits, unitary_eigenvalues(element));
    case AmbientSpace::Kind::full_register:
      return std::pow(element.trace(), a.n_qudits);
  }
  throw UnknownKind("space_character: unknown ambient kind");
}

std::vector<Complex> space_class_characters(const FiniteGroup& g, const AmbientSpace& a) {
  const auto& classes = g.conjugacy_classes();
  std::vector<Complex> chi(classes.size());
  for (size_t c = 0; c < classes.size(); ++c)
    chi[c] = space_character(a, g.element(classes[c][0]));
  return chi;
}

std::vector<ScanRow> multiplicity_scan(const FiniteGroup& g, AmbientSpace::Kind kind, int lo,
                                       int hi) {
  auto chis = one_dim_characters(g);
  std::vector<ScanRow> rows;
  for (int p = lo; p <= hi; ++p) {
    AmbientSpace a = kind == AmbientSpace::Kind::spin ? AmbientSpace::spin(p)
                                                      : AmbientSpace::symmetric(g.dim(), p);
    auto chi_space = space_class_characters(g, a);
    for (size_t c = 0; c < chis.size(); ++c)
      rows.push_back({p, static_cast<int>(c), rep_multiplicity(g, chi_space, chis[c])});
  }
  return rows;
}

Mat codespace_projector(const FiniteGroup& g, const OneDimCharacter& chi,
                        const AmbientSpace& a) {
  const long dim = a.dimension();
  Mat p = Mat::Zero(dim, dim);
  for (int i = 0; i < g.order(); ++i)
    p += std::conj(chi.value_at(g, i)) * ambient_action(g.element(i), a);
  p /= static_cast<double>(g.order());
  if ((p * p - p).norm() > 1e-9 * dim)
    throw NonIdempotent("codespace_projector: projector failed P^2 = P");
  return p;
}

CodeSpace extract_codewords(const Mat& projector, int k_expected, const FiniteGroup& g,
                            const OneDimCharacter& chi, const AmbientSpace& a) {
  if ((projector * projector - projector).norm() > 1e-9 * projector.rows())
    throw NonIdempotent("extract_codewords: input is not idempotent");
  Eigen::SelfAdjointEigenSolver<Mat> es(projector);
  std::vector<int> keep;
  for (Eigen::Index i = 0; i < projector.rows(); ++i)
    if (es.eigenvalues()(i) >= 1.0 - 1e-6) keep.push_back(static_cast<int>(i));
  if (static_cast<int>(keep.size()) != k_expected)
    throw RankMismatch("extract_codewords: sector dimension " + std::to_string(keep.size()) +
                       ", expected " + std::to_string(k_expected));
  Mat c(projector.rows(), k_expected);
  for (size_t i = 0; i < keep.size(); ++i) c.col(static_cast<Eigen::Index>(i)) = es.eigenvectors().col(keep[i]);
  // Phase convention: first component above 1e-6 made real positive.
  for (Eigen::Index col = 0; col < c.cols(); ++col) {
    for (Eigen::Index row = 0; row < c.rows(); ++row) {
      if (std::abs(c(row, col)) > 1e-6) {
        c.col(col) *= std::conj(c(row, col)) / std::abs(c(row, col));
        break;
      }
    }
  }
  CodeSpace code;
  code.ambient = a;
  code.character = chi;
  code.codewords = c;
  return code;
}

CodeSpace build_codespace(const FiniteGroup& g, const OneDimCharacter& chi,
                          const AmbientSpace& a, int k_expected) {
  Mat p = codespace_projector(g, chi, a);
  CodeSpace code = extract_codewords(p, k_expected, g, chi, a);
  if (codeword_symmetry_residual(code, g) > 1e-8)
    throw NonIdempotent("build_codespace: codeword symmetry residual too large");
  return code;
}

double codeword_symmetry_residual(const CodeSpace& code, const FiniteGroup& g) {
  double worst = 0;
  for (int i = 0; i < g.order(); ++i) {
    Mat pi = ambient_action(g.element(i), code.ambient);
    Complex phase = code.character.value_at(g, i);
    worst = std::max(worst, (pi * code.codewords - phase * code.codewords).norm());
  }
  return worst;
}

namespace {

std::array<Mat, 3> ambient_spin_ops(const AmbientSpace& a) {
  if (a.kind != AmbientSpace::Kind::spin)
    throw UnknownKind("error_set: spin error family on a non-spin ambient");
  return spin_ops(2 * a.j);
}

}  // namespace

std::vector<Mat> error_set(ErrorKind kind, const AmbientSpace& a) {
  std::vector<Mat> errors;
  errors.push_back(Mat::Identity(a.dimension(), a.dimension()));
  switch (kind) {
    case ErrorKind::spin_linear: {
      auto [sx, sy, sz] = ambient_spin_ops(a);
      errors.push_back(sz);
      errors.push_back(Mat(sx + Complex(0, 1) * sy));
      errors.push_back(Mat(sx - Complex(0, 1) * sy));
      break;
    }
    case ErrorKind::dephasing: {
      auto [sx, sy, sz] = ambient_spin_ops(a);
      (void)sx;
      (void)sy;
      errors.push_back(sz);
      break;
    }
    case ErrorKind::dipolar_disorder_rwa: {
      auto [sx, sy, sz] = ambient_spin_ops(a);
      errors.push_back(sz);
      errors.push_back(Mat(sx + Complex(0, 1) * sy));
      errors.push_back(Mat(sx - Complex(0, 1) * sy));
      Mat j2 = sx * sx + sy * sy + sz * sz;
      errors.push_back(Mat(3.0 * sz * sz - j2));
      break;
    }
    case ErrorKind::qutrit_single: {
      if (a.kind != AmbientSpace::Kind::symmetric_qudits || a.d != 3)
        throw UnknownKind("error_set: qutrit family needs a symmetric qutrit ambient");
      for (int l = 1; l <= 8; ++l) errors.push_back(collective_op(gell_mann(l), a.n_qudits));
      break;
    }
    case ErrorKind::qutrit_dephasing: {
      if (a.kind != AmbientSpace::Kind::symmetric_qudits || a.d != 3)
        throw UnknownKind("error_set: qutrit family needs a symmetric qutrit ambient");
      errors.push_back(collective_op(gell_mann(3), a.n_qudits));
      errors.push_back(collective_op(gell_mann(8), a.n_qudits));
      break;
    }
  }
  return errors;
}

KLReport kl_check(const CodeSpace& code, const std::vector<Mat>& errors, KlMode mode) {
  std::vector<Mat> fs;
  if (mode == KlMode::detect) {
    fs = errors;
  } else {
    for (const auto& ep : errors)
      for (const auto& eq : errors) fs.push_back(Mat(ep.adjoint() * eq));
  }
  KLReport report;
  report.mode = mode;
  const Mat& c = code.codewords;
  const double k = static_cast<double>(code.k());
  for (const auto& f : fs) {
    double norm = f.norm();
    Mat block = c.adjoint() * f * c;
    Complex mean = block.trace() / k;
    double off = 0, spread = 0;
    for (Eigen::Index i = 0; i < block.rows(); ++i)
      for (Eigen::Index j = 0; j < block.cols(); ++j) {
        if (i == j)
          spread = std::max(spread, std::abs(block(i, j) - mean));
        else
          off = std::max(off, std::abs(block(i, j)));
      }
    double rel = norm > 0 ? 1.0 / norm : 0.0;
    report.per_operator.push_back({off * rel, spread * rel, norm});
    report.max_offdiag = std::max(report.max_offdiag, off * rel);
    report.max_diag_spread = std::max(report.max_diag_spread, spread * rel);
  }
  report.pass = report.max_offdiag < 1e-8 && report.max_diag_spread < 1e-8;
  return report;
}

std::optional<Mat> logical_gate_check(const CodeSpace& code, const Mat& candidate) {
  Mat image = candidate * code.codewords;
  Mat logical = code.codewords.adjoint() * image;
  double residual = (image - code.codewords * logical).norm();
  if (residual > 1e-8 * std::sqrt(static_cast<double>(code.k()))) return std::nullopt;
  return logical;
}

CodeSpace refine_basis(const CodeSpace& code, const FiniteGroup& larger) {
  auto chis = one_dim_characters(larger);
  CodeSpace refined = code;
  std::vector<Mat> new_cols;
  std::vector<int> sectors;
  for (size_t ci = 0; ci < chis.size(); ++ci) {
    Mat p = codespace_projector(larger, chis[ci], code.ambient);
    Mat block = code.codewords.adjoint() * p * code.codewords;
    Eigen::SelfAdjointEigenSolver<Mat> es(block);
    for (Eigen::Index i = 0; i < block.rows(); ++i) {
      double ev = es.eigenvalues()(i);
      if (ev >= 1.0 - 1e-6) {
        new_cols.push_back(Mat(code.codewords * es.eigenvectors().col(i)));
        sectors.push_back(static_cast<int>(ci));
      } else if (ev > 1e-6 && ev < 1.0 - 1e-6) {
        throw NoRefinement("refine_basis: sector projector is not block-diagonal on the code");
      }
    }
  }
  if (static_cast<int>(new_cols.size()) != code.k())
    throw NoRefinement("refine_basis: refined sectors do not span the codespace");
  Mat c(code.codewords.rows(), code.k());
  for (size_t i = 0; i < new_cols.size(); ++i) c.col(static_cast<Eigen::Index>(i)) = new_cols[i];
  for (Eigen::Index col = 0; col < c.cols(); ++col)
    for (Eigen::Index row = 0; row < c.rows(); ++row)
      if (std::abs(c(row, col)) > 1e-6) {
        c.col(col) *= std::conj(c(row, col)) / std::abs(c(row, col));
        break;
      }
  refined.codewords = c;
  refined.refined_sectors = sectors;
  return refined;
}

std::string kl_report_to_json(const KLReport& report, const std::string& group,
                              const std::string& ambient, int character_index, int k) {
  nlohmann::json j;
  j["group"] = group;
  j["ambient"] = ambient;
  j["character_index"] = character_index;
  j["k"] = k;
  j["mode"] = report.mode == KlMode::detect ? "detect" : "correct";
  j["max_offdiag"] = report.max_offdiag;
  j["max_diag_spread"] = report.max_diag_spread;
  j["pass"] = report.pass;
  nlohmann::json ops = nlohmann::json::array();
  for (const auto& po : report.per_operator)
    ops.push_back({{"offdiag", po.offdiag}, {"diag_spread", po.diag_spread}, {"norm", po.norm}});
  j["per_operator"] = ops;
  return j.dump(2);
}

}  // namespace sudec
