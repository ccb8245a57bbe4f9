#include "sudec/ddsim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>

namespace sudec {

uint64_t ModelRng::next() {
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double ModelRng::uniform() {
  return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
}

double ModelRng::uniform_symmetric() { return uniform() - 0.5; }

double ModelRng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0;
  while (u1 <= 1e-300) u1 = uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2 * M_PI * u2);
  have_spare_ = true;
  return r * std::cos(2 * M_PI * u2);
}

Mat embed_site(const Mat& op, int site, int n_sites, int local_dim) {
  Mat out = Mat::Identity(1, 1);
  for (int s = 0; s < n_sites; ++s)
    out = kron(out, s == site ? op : Mat(Mat::Identity(local_dim, local_dim)));
  return out;
}

namespace {

std::vector<Mat> gell_mann_all() {
  std::vector<Mat> l;
  for (int a = 1; a <= 8; ++a) l.push_back(gell_mann(a));
  return l;
}

}  // namespace

Mat assemble_disorder(const HamiltonianModel& model, double delta_scale) {
  const long dim = static_cast<long>(std::pow(model.local_dim, model.n_sites));
  Mat h = Mat::Zero(dim, dim);
  auto lambdas = gell_mann_all();
  for (const auto& t : model.disorder) {
    Mat local = Mat::Zero(model.local_dim, model.local_dim);
    for (int a = 0; a < t.direction.size(); ++a) local += t.direction(a) * lambdas[static_cast<size_t>(a)];
    h += delta_scale * t.delta * embed_site(local, t.site, model.n_sites, model.local_dim);
  }
  for (const auto& t : model.rwa_disorder) {
    Mat sz = Mat::Zero(3, 3);
    sz.diagonal() << 1, 0, -1;
    h += delta_scale * t.delta_z * embed_site(sz, t.site, model.n_sites, model.local_dim);
  }
  return h;
}

Mat assemble_pairs(const HamiltonianModel& model, double gamma_scale) {
  const long dim = static_cast<long>(std::pow(model.local_dim, model.n_sites));
  Mat h = Mat::Zero(dim, dim);
  auto lambdas = gell_mann_all();
  for (const auto& t : model.pairs) {
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        if (t.matrix(a, b) == 0.0) continue;
        h += gamma_scale * t.gamma * t.matrix(a, b) *
             embed_site(lambdas[static_cast<size_t>(a)], t.site_i, model.n_sites, model.local_dim) *
             embed_site(lambdas[static_cast<size_t>(b)], t.site_j, model.n_sites, model.local_dim);
      }
  }
  for (const auto& t : model.secular)
    h += gamma_scale * secular_dipolar_pair(model.n_sites, t.site_i, t.site_j, t.coupling);
  return h;
}

RandomHamiltonian build_random_hamiltonian(int n_sites, double delta_scale, double gamma_scale,
                                           bool anisotropic, uint64_t seed) {
  if (n_sites < 1) throw std::invalid_argument("build_random_hamiltonian: n_sites >= 1");
  ModelRng rng(seed);
  RandomHamiltonian out;
  out.model.n_sites = n_sites;
  out.model.local_dim = 3;
  out.model.anisotropic = anisotropic;

  for (int i = 0; i < n_sites; ++i) {
    Eigen::VectorXd dir(8);
    for (int a = 0; a < 8; ++a) dir(a) = rng.gaussian();
    dir.normalize();
    out.model.disorder.push_back({i, rng.uniform_symmetric(), dir});
  }
  for (int i = 0; i < n_sites; ++i)
    for (int j = i + 1; j < n_sites; ++j) {
      Eigen::MatrixXd m(8, 8);
      for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) m(a, b) = rng.gaussian();
      if (anisotropic) {
        double tr = m.trace() / 8.0;
        for (int a = 0; a < 8; ++a) m(a, a) -= tr;
      }
      m /= m.norm();
      out.model.pairs.push_back({i, j, rng.uniform_symmetric(), m});
    }
  out.matrix = assemble_disorder(out.model, delta_scale) + assemble_pairs(out.model, gamma_scale);
  return out;
}

Mat secular_dipolar_pair(int n_sites, int site_i, int site_j, double coupling) {
  auto put = [&](int a) { return embed_site(gell_mann(a), site_i, n_sites, 3); };
  auto put_j = [&](int a) { return embed_site(gell_mann(a), site_j, n_sites, 3); };
  Mat l38_i = put(3) + std::sqrt(3.0) * put(8);
  Mat l38_j = put_j(3) + std::sqrt(3.0) * put_j(8);
  Mat h = put(1) * put_j(1) + put(2) * put_j(2) + put(6) * put_j(6) + put(7) * put_j(7) -
          l38_i * l38_j;
  return Mat(-coupling / 4.0 * h);
}

Mat build_secular_dipolar(int n_sites, const std::vector<double>& couplings) {
  if (n_sites < 2) throw std::invalid_argument("build_secular_dipolar: n_sites >= 2");
  const long dim = static_cast<long>(std::pow(3, n_sites));
  Mat h = Mat::Zero(dim, dim);
  size_t k = 0;
  for (int i = 0; i < n_sites; ++i)
    for (int j = i + 1; j < n_sites; ++j) {
      double c = k < couplings.size() ? couplings[k] : 0.0;
      h += secular_dipolar_pair(n_sites, i, j, c);
      k++;
    }
  return h;
}

Mat build_rwa_disorder(int n_sites, const std::vector<double>& deltas_z) {
  Mat sz = Mat::Zero(3, 3);
  sz.diagonal() << 1, 0, -1;
  const long dim = static_cast<long>(std::pow(3, n_sites));
  Mat h = Mat::Zero(dim, dim);
  for (int i = 0; i < n_sites && i < static_cast<int>(deltas_z.size()); ++i)
    h += deltas_z[static_cast<size_t>(i)] * embed_site(sz, i, n_sites, 3);
  return h;
}

Mat build_su2_hamiltonian(Su2Kind kind, int two_j, int n_sites, int site_i, int site_j,
                          int axis_a, int axis_b) {
  auto ops = spin_ops(two_j);
  const int ld = two_j + 1;
  auto at = [&](const Mat& op, int site) { return embed_site(op, site, n_sites, ld); };
  switch (kind) {
    case Su2Kind::exchange: {
      Mat h = Mat::Zero(static_cast<long>(std::pow(ld, n_sites)),
                        static_cast<long>(std::pow(ld, n_sites)));
      for (int a = 0; a < 3; ++a)
        h += at(ops[static_cast<size_t>(a)], site_i) * at(ops[static_cast<size_t>(a)], site_j);
      return h;
    }
    case Su2Kind::secular_dipolar: {
      Mat zz = at(ops[2], site_i) * at(ops[2], site_j);
      return Mat(3.0 * zz -
                 build_su2_hamiltonian(Su2Kind::exchange, two_j, n_sites, site_i, site_j));
    }
    case Su2Kind::bilinear:
      return Mat(at(ops[static_cast<size_t>(axis_a)], site_i) *
                 at(ops[static_cast<size_t>(axis_b)], site_j));
  }
  throw std::invalid_argument("build_su2_hamiltonian: unknown kind");
}

RepAssignment RepAssignment::plain(int n_sites) {
  RepAssignment a;
  a.n_sites = n_sites;
  return a;
}

Mat apply_rep_assignment(const Mat& pulse, const RepAssignment& a) {
  Mat out = Mat::Identity(1, 1);
  for (int s = 0; s < a.n_sites; ++s) {
    Mat local = pulse;
    if (!a.conjugators.empty() && a.conjugators[static_cast<size_t>(s)].size() > 0)
      local = a.conjugators[static_cast<size_t>(s)].adjoint() * local *
              a.conjugators[static_cast<size_t>(s)];
    if (!a.dual.empty() && a.dual[static_cast<size_t>(s)]) local = local.conjugate();
    out = kron(out, local);
  }
  return out;
}

RepMap assignment_rep(const RepAssignment& a) {
  return [a](const Mat& u) { return apply_rep_assignment(u, a); };
}

Mat evolve_sequence(const Mat& h, const PulseSequence& seq, const RepAssignment& a, double tau) {
  Mat u_free = expm_skew(h, tau);
  if (seq.pulses.empty()) return u_free;
  // Lifted-pulse cache, keyed by label but verified against the raw unitary.
  std::map<std::string, std::pair<Mat, Mat>> cache;
  Mat u = Mat::Identity(h.rows(), h.cols());
  for (const auto& p : seq.pulses) {
    auto it = cache.find(p.label);
    if (it == cache.end() || (it->second.first - p.unitary).norm() > 1e-14)
      it = cache.insert_or_assign(p.label,
                                  std::make_pair(p.unitary, apply_rep_assignment(p.unitary, a)))
               .first;
    if (it->second.second.rows() != h.rows())
      throw DimensionMismatch("evolve_sequence: pulse does not match Hamiltonian space");
    u = it->second.second * (u_free * u);
  }
  return u;
}

double distance_to_target(const Mat& u, const Mat& target) {
  if (u.rows() != target.rows()) throw DimensionMismatch("distance_to_target: size mismatch");
  double overlap = std::abs((u * target.adjoint()).trace()) / static_cast<double>(u.rows());
  return std::sqrt(std::max(0.0, 1.0 - overlap));
}

double distance_to_identity(const Mat& u) {
  return distance_to_target(u, Mat(Mat::Identity(u.rows(), u.cols())));
}

double slope_estimate(const std::vector<double>& tau_values,
                      const std::vector<double>& distances) {
  if (tau_values.size() != distances.size() || tau_values.size() < 4)
    throw DegenerateWindow("slope_estimate: need >= 4 matched points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(tau_values.size());
  for (size_t k = 0; k < tau_values.size(); ++k) {
    if (distances[k] <= 1e-13)
      throw DegenerateWindow("slope_estimate: distance at the noise floor");
    double x = std::log(tau_values[k]), y = std::log(distances[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-12) throw DegenerateWindow("slope_estimate: degenerate abscissae");
  return (n * sxy - sx * sy) / denom;
}

namespace {

struct ModelParts {
  Mat h_delta;  // multiplies tau_delta
  Mat h_gamma;  // multiplies tau_gamma
};

ModelParts build_parts(ModelKind kind, int n_sites, uint64_t seed) {
  ModelParts parts;
  if (kind == ModelKind::random_pair) {
    auto rh = build_random_hamiltonian(n_sites, 1.0, 1.0, /*anisotropic=*/true, seed);
    parts.h_delta = assemble_disorder(rh.model, 1.0);
    parts.h_gamma = assemble_pairs(rh.model, 1.0);
  } else {
    ModelRng rng(seed);
    std::vector<double> deltas(static_cast<size_t>(n_sites));
    for (auto& d : deltas) d = rng.uniform_symmetric();
    parts.h_delta = build_rwa_disorder(n_sites, deltas);
    std::vector<double> js;
    for (int i = 0; i < n_sites; ++i)
      for (int j = i + 1; j < n_sites; ++j) js.push_back(rng.uniform_symmetric());
    parts.h_gamma = build_secular_dipolar(n_sites, js);
  }
  return parts;
}

}  // namespace

std::vector<SweepRow> sweep(const SweepGrid& grid, const std::vector<LabeledSequence>& sequences,
                            ModelKind model_kind, int n_sites) {
  if (grid.tau_delta_values.empty() || grid.tau_gamma_values.empty())
    throw std::invalid_argument("sweep: empty grid axis");
  RepAssignment assign = RepAssignment::plain(n_sites);

  int min_pulses = 0;
  for (const auto& ls : sequences) {
    int n = ls.sequence.intervals();
    if (min_pulses == 0 || (n > 0 && n < min_pulses)) min_pulses = n;
  }
  if (min_pulses == 0) min_pulses = 1;

  // Ensemble pulses are sample-independent: lift them once per sequence.
  const long model_dim = static_cast<long>(std::pow(3, n_sites));
  std::vector<std::vector<Mat>> lifted(sequences.size());
  std::vector<std::vector<int>> lifted_index(sequences.size());
  std::vector<Mat> targets(sequences.size());
  for (size_t s = 0; s < sequences.size(); ++s)
    targets[s] = sequences[s].target ? apply_rep_assignment(*sequences[s].target, assign)
                                     : Mat(Mat::Identity(model_dim, model_dim));
  for (size_t s = 0; s < sequences.size(); ++s) {
    std::map<std::string, std::pair<Mat, int>> by_label;
    for (const auto& p : sequences[s].sequence.pulses) {
      auto it = by_label.find(p.label);
      if (it == by_label.end() || (it->second.first - p.unitary).norm() > 1e-14) {
        Mat big = apply_rep_assignment(p.unitary, assign);
        if (big.rows() != model_dim)
          throw DimensionMismatch("sweep: sequence '" + sequences[s].label +
                                  "' does not fit the model register");
        it = by_label.insert_or_assign(p.label,
                                       std::make_pair(p.unitary,
                                                      static_cast<int>(lifted[s].size())))
                 .first;
        lifted[s].push_back(std::move(big));
      }
      lifted_index[s].push_back(it->second.second);
    }
  }

  // Per-sample distances land in preallocated slots, so the reduction order
  // (and hence the CSV) is independent of the worker count.
  const size_t na = grid.tau_delta_values.size(), nb = grid.tau_gamma_values.size();
  const size_t nlabels = sequences.size() + 1;
  const size_t cells = nlabels * na * nb;
  std::vector<double> samples(cells * static_cast<size_t>(grid.n_hamiltonians), 0.0);
  auto slot = [&](size_t s, size_t a, size_t b, int sample) {
    return (static_cast<size_t>(sample) * nlabels + s) * na * nb + a * nb + b;
  };

  auto run_sample = [&](int sample) {
    uint64_t sample_seed = grid.seed * 0x100000001b3ULL + static_cast<uint64_t>(sample);
    ModelParts parts = build_parts(model_kind, n_sites, sample_seed);
    for (size_t a = 0; a < na; ++a) {
      for (size_t b = 0; b < nb; ++b) {
        Mat h = grid.tau_delta_values[a] * parts.h_delta +
                grid.tau_gamma_values[b] * parts.h_gamma;
        Mat u_free = expm_skew(h, 1.0);
        for (size_t s = 0; s < sequences.size(); ++s) {
          Mat u = Mat::Identity(h.rows(), h.cols());
          for (int idx : lifted_index[s]) u = lifted[s][static_cast<size_t>(idx)] * (u_free * u);
          samples[slot(s, a, b, sample)] = distance_to_target(u, targets[s]);
        }
        // Free evolution for the duration of the shortest sequence.
        Mat u_nodd = expm_skew(h, static_cast<double>(min_pulses));
        samples[slot(sequences.size(), a, b, sample)] = distance_to_identity(u_nodd);
      }
    }
  };

  int workers = std::max(1, grid.workers);
  if (workers <= 1) {
    for (int sample = 0; sample < grid.n_hamiltonians; ++sample) run_sample(sample);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&]() {
        for (int sample = next.fetch_add(1); sample < grid.n_hamiltonians;
             sample = next.fetch_add(1))
          run_sample(sample);
      });
    for (auto& t : pool) t.join();
  }

  std::vector<SweepRow> rows;
  for (size_t s = 0; s < nlabels; ++s) {
    std::string label = s < sequences.size() ? sequences[s].label : "NoDD";
    for (size_t a = 0; a < na; ++a)
      for (size_t b = 0; b < nb; ++b) {
        double sum = 0;
        for (int sample = 0; sample < grid.n_hamiltonians; ++sample)
          sum += samples[slot(s, a, b, sample)];
        rows.push_back({label, grid.tau_delta_values[a], grid.tau_gamma_values[b],
                        sum / grid.n_hamiltonians, grid.n_hamiltonians, grid.seed});
      }
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "sequence_label,tau_delta,tau_gamma,mean_distance,n_samples,seed\n";
  os.precision(12);
  for (const auto& r : rows)
    os << r.sequence_label << "," << r.tau_delta << "," << r.tau_gamma << ","
       << r.mean_distance << "," << r.n_samples << "," << r.seed << "\n";
  return os.str();
}

}  // namespace sudec
