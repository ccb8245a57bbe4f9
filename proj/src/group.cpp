#include "sudec/group.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>

namespace sudec {

namespace {

constexpr double kQuantum = 1e-6;
constexpr double kVerifyTol = 1e-9;

// Quantized key of a matrix. Coordinates within 1e-3 quanta of a rounding
// boundary also emit neighbor keys, so drifted copies of one element cannot
// straddle a cell edge unseen.
void quantized_keys(const Mat& u, std::vector<std::string>& out) {
  const Eigen::Index n = u.size();
  std::vector<long> base(static_cast<size_t>(2 * n));
  std::vector<int> wobble;  // coordinate slots with a second candidate
  std::vector<long> alt(static_cast<size_t>(2 * n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex c = u(i / u.cols(), i % u.cols());
    for (int part = 0; part < 2; ++part) {
      double v = part == 0 ? c.real() : c.imag();
      double r = v / kQuantum;
      long k = std::lround(r);
      size_t slot = static_cast<size_t>(2 * i + part);
      base[slot] = k;
      alt[slot] = k;
      double frac = r - static_cast<double>(k);
      if (std::abs(std::abs(frac) - 0.5) < 1e-3) {
        alt[slot] = k + (frac > 0 ? 1 : -1);
        wobble.push_back(static_cast<int>(slot));
      }
    }
  }
  auto emit = [&](const std::vector<long>& ks) {
    std::string s;
    s.reserve(ks.size() * sizeof(long));
    for (long k : ks) s.append(reinterpret_cast<const char*>(&k), sizeof(long));
    out.push_back(std::move(s));
  };
  emit(base);
  // At most a handful of boundary coordinates in practice; cap the expansion.
  if (!wobble.empty() && wobble.size() <= 6) {
    for (size_t mask = 1; mask < (size_t{1} << wobble.size()); ++mask) {
      std::vector<long> ks = base;
      for (size_t b = 0; b < wobble.size(); ++b)
        if (mask & (size_t{1} << b)) ks[static_cast<size_t>(wobble[b])] = alt[static_cast<size_t>(wobble[b])];
      emit(ks);
    }
  }
}

}  // namespace

Mat canonical_phase(const Mat& u) {
  double maxmag = 0;
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    for (Eigen::Index j = 0; j < u.cols(); ++j) maxmag = std::max(maxmag, std::abs(u(i, j)));
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    for (Eigen::Index j = 0; j < u.cols(); ++j)
      if (std::abs(u(i, j)) >= maxmag - 1e-5) {
        Complex ph = u(i, j) / std::abs(u(i, j));
        return Mat(u / ph);
      }
  return u;  // zero matrix; not a group element
}

int FiniteGroup::find(const Mat& u) const {
  Mat c = mode_ == GroupMode::projective ? canonical_phase(u) : u;
  std::vector<std::string> keys;
  quantized_keys(c, keys);
  for (const auto& key : keys) {
    auto it = buckets_.find(key);
    if (it == buckets_.end()) continue;
    for (int idx : it->second)
      if ((elements_[static_cast<size_t>(idx)] - c).norm() <= kVerifyTol * d_) return idx;
  }
  return -1;
}

int FiniteGroup::multiply(int i, int j) const {
  if (mult_.empty()) build_tables();
  return mult_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

int FiniteGroup::inverse(int i) const {
  if (inv_.empty()) {
    inv_.resize(elements_.size());
    for (size_t k = 0; k < elements_.size(); ++k) {
      int idx = find(elements_[k].adjoint());
      if (idx < 0) throw std::logic_error("group not closed under inverses");
      inv_[k] = idx;
    }
  }
  return inv_[static_cast<size_t>(i)];
}

void FiniteGroup::build_tables() const {
  const int n = order();
  mult_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = find(elements_[static_cast<size_t>(i)] * elements_[static_cast<size_t>(j)]);
      if (k < 0) throw std::logic_error("group not closed under products");
      mult_[static_cast<size_t>(i)][static_cast<size_t>(j)] = k;
    }
}

const std::vector<std::vector<int>>& FiniteGroup::conjugacy_classes() const {
  if (!classes_.empty()) return classes_;
  const int n = order();
  if (mult_.empty()) build_tables();
  inverse(0);
  class_of_.assign(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (class_of_[static_cast<size_t>(x)] >= 0) continue;
    std::vector<int> cls;
    int id = static_cast<int>(classes_.size());
    for (int g = 0; g < n; ++g) {
      int y = mult_[static_cast<size_t>(mult_[static_cast<size_t>(g)][static_cast<size_t>(x)])]
                   [static_cast<size_t>(inv_[static_cast<size_t>(g)])];
      if (class_of_[static_cast<size_t>(y)] < 0) {
        class_of_[static_cast<size_t>(y)] = id;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
  return classes_;
}

int FiniteGroup::class_of(int element) const {
  conjugacy_classes();
  return class_of_[static_cast<size_t>(element)];
}

const std::vector<double>& FiniteGroup::eigenphases(int i) const {
  if (phases_.empty()) {
    phases_.resize(elements_.size());
    for (size_t k = 0; k < elements_.size(); ++k)
      phases_[k] = eig_unitary(elements_[k]).phases;
  }
  return phases_[static_cast<size_t>(i)];
}

void FiniteGroup::prepare() const {
  conjugacy_classes();
  eigenphases(0);
  inverse(0);
}

FiniteGroup generate_group(const std::vector<Mat>& generators, GroupMode mode, int max_order) {
  if (generators.empty()) throw std::invalid_argument("generate_group: no generators");
  const int d = static_cast<int>(generators.front().rows());
  FiniteGroup g;
  g.d_ = d;
  g.mode_ = mode;

  for (const auto& gen : generators) {
    if (gen.rows() != d || gen.cols() != d)
      throw NotUnitary("generate_group: generators must share one dimension");
    if (!is_unitary(gen, 1e-9)) throw NotUnitary("generate_group: generator not unitary");
    if (mode == GroupMode::exact && std::abs(gen.determinant() - Complex(1.0)) > 1e-8)
      throw NotUnitary("generate_group: exact mode requires det = 1");
  }

  auto insert = [&](const Mat& raw) -> int {
    Mat c = mode == GroupMode::projective ? canonical_phase(raw) : raw;
    int existing = g.find(c);
    if (existing >= 0) return -1;
    int idx = g.order();
    g.elements_.push_back(c);
    std::vector<std::string> keys;
    quantized_keys(c, keys);
    // All neighbor keys point at the element, so a drifted probe finds it.
    for (const auto& key : keys) g.buckets_[key].push_back(idx);
    return idx;
  };

  insert(Mat::Identity(d, d));
  std::vector<int> gen_idx;
  std::deque<int> frontier{0};
  for (const auto& gen : generators) {
    int idx = insert(gen);
    int at = idx >= 0 ? idx : g.find(gen);
    gen_idx.push_back(at);
    if (idx >= 0) frontier.push_back(idx);
  }

  while (!frontier.empty()) {
    int i = frontier.front();
    frontier.pop_front();
    for (int gi : gen_idx) {
      Mat prod = g.elements_[static_cast<size_t>(gi)] * g.elements_[static_cast<size_t>(i)];
      int idx = insert(prod);
      if (idx >= 0) {
        if (g.order() > max_order)
          throw OrderExceeded("generate_group: closure exceeded max_order");
        frontier.push_back(idx);
      }
    }
  }

  g.generator_indices_ = gen_idx;
  g.real_orthogonal_ = true;
  for (const auto& e : g.elements_)
    if (e.imag().norm() > 1e-9) {
      g.real_orthogonal_ = false;
      break;
    }
  return g;
}

bool contains_center(const FiniteGroup& g) {
  const int d = g.dim();
  for (int k = 1; k < d; ++k) {
    Complex phase = std::exp(Complex(0, 2 * M_PI * k / d));
    if (g.find(Mat(phase * Mat::Identity(d, d))) < 0) return false;
  }
  return true;
}

FiniteGroup quotient_by_center(const FiniteGroup& g) {
  if (!contains_center(g)) throw NoCenter("quotient_by_center: center not a subgroup");
  std::vector<Mat> gens;
  for (int i : g.generator_indices()) gens.push_back(g.element(i));
  FiniteGroup q = generate_group(gens, GroupMode::projective, g.order());
  q.set_name(g.name().empty() ? "quotient" : g.name() + "/Z" + std::to_string(g.dim()));
  return q;
}

namespace {

int check_integer(double value, double residual_tol, const char* what) {
  double rounded = std::round(value);
  if (std::abs(value - rounded) > residual_tol)
    throw NonIntegerMultiplicity(std::string(what) + ": non-integer multiplicity " +
                                 std::to_string(value));
  return static_cast<int>(rounded);
}

}  // namespace

int trivial_multiplicity(const FiniteGroup& g, const DynkinLabel& label) {
  Complex sum = 0;
  const int n = g.order();
  if (label.d == g.dim()) {
    for (int i = 0; i < n; ++i) sum += irrep_character(label, g.eigenphases(i));
  } else if (label.d == 2 && g.dim() == 3 && g.is_real_orthogonal()) {
    if (label.coeffs[0] % 2 != 0)
      throw DimensionMismatch("trivial_multiplicity: SO(3) groups carry integer spins only");
    int L = label.coeffs[0] / 2;
    for (int i = 0; i < n; ++i) sum += su2_character(L, rotation_angle(g.element(i)));
  } else {
    throw DimensionMismatch("trivial_multiplicity: label dimension does not match group");
  }
  sum /= static_cast<double>(n);
  if (std::abs(sum.imag()) > 1e-6)
    throw NonIntegerMultiplicity("trivial_multiplicity: complex residual");
  return check_integer(sum.real(), 1e-6, "trivial_multiplicity");
}

std::vector<AccessRow> accessibility_scan(const FiniteGroup& g,
                                          const std::vector<DynkinLabel>& labels) {
  std::vector<AccessRow> rows;
  rows.reserve(labels.size());
  for (const auto& l : labels) {
    int m = trivial_multiplicity(g, l);
    rows.push_back({l, m, m > 0});
  }
  return rows;
}

namespace {

// Subgroup generated by the seed indices: closure of words in the seeds.
std::vector<int> index_closure(const FiniteGroup& g, const std::vector<int>& seeds) {
  std::vector<char> in(static_cast<size_t>(g.order()), 0);
  std::deque<int> todo;
  std::vector<int> members;
  auto push = [&](int x) {
    if (!in[static_cast<size_t>(x)]) {
      in[static_cast<size_t>(x)] = 1;
      members.push_back(x);
      todo.push_back(x);
    }
  };
  push(g.identity_index());
  while (!todo.empty()) {
    int a = todo.front();
    todo.pop_front();
    for (int s : seeds) push(g.multiply(s, a));
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

std::vector<OneDimCharacter> one_dim_characters(const FiniteGroup& g) {
  g.conjugacy_classes();
  const int n = g.order();

  // Commutator subgroup: closure of all commutators.
  std::vector<int> comms;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = g.multiply(g.multiply(a, b),
                         g.multiply(g.inverse(a), g.inverse(b)));
      comms.push_back(c);
    }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  std::vector<int> derived = index_closure(g, comms);

  // Cosets of the derived subgroup form the abelianization.
  std::vector<int> coset_of(static_cast<size_t>(n), -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[static_cast<size_t>(x)] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int k : derived) coset_of[static_cast<size_t>(g.multiply(x, k))] = id;
  }
  const int q = static_cast<int>(reps.size());
  auto qmul = [&](int a, int b) {
    return coset_of[static_cast<size_t>(g.multiply(reps[static_cast<size_t>(a)],
                                                   reps[static_cast<size_t>(b)]))];
  };

  // Small generating set of the abelian quotient.
  std::vector<int> qgens;
  {
    std::vector<char> covered(static_cast<size_t>(q), 0);
    covered[0] = 1;
    int ncov = 1;
    for (int cand = 1; cand < q && ncov < q; ++cand) {
      if (covered[static_cast<size_t>(cand)]) continue;
      qgens.push_back(cand);
      std::vector<int> cur;
      for (int x = 0; x < q; ++x)
        if (covered[static_cast<size_t>(x)]) cur.push_back(x);
      // Abelian quotient: the enlarged subgroup is the union of cosets C cand^k.
      for (int x : cur) {
        int y = x;
        while (true) {
          y = qmul(y, cand);
          if (!covered[static_cast<size_t>(y)]) {
            covered[static_cast<size_t>(y)] = 1;
            ncov++;
          }
          if (y == x) break;
        }
      }
    }
  }
  std::vector<int> orders;
  for (int s : qgens) {
    int o = 1, y = s;
    while (y != 0) {
      y = qmul(y, s);
      o++;
    }
    orders.push_back(o);
  }

  // Enumerate phase assignments on the generators and keep consistent ones.
  std::vector<std::vector<Complex>> char_tables;  // per coset values
  std::vector<int> assign(qgens.size(), 0);
  std::function<void(size_t)> enumerate = [&](size_t pos) {
    if (pos == qgens.size()) {
      std::vector<Complex> vals(static_cast<size_t>(q), Complex(0, 0));
      vals[0] = 1.0;
      std::deque<int> todo{0};
      std::vector<char> seen(static_cast<size_t>(q), 0);
      seen[0] = 1;
      while (!todo.empty()) {
        int x = todo.front();
        todo.pop_front();
        for (size_t s = 0; s < qgens.size(); ++s) {
          int y = qmul(x, qgens[s]);
          Complex v = vals[static_cast<size_t>(x)] *
                      std::exp(Complex(0, 2 * M_PI * assign[s] / orders[s]));
          if (!seen[static_cast<size_t>(y)]) {
            seen[static_cast<size_t>(y)] = 1;
            vals[static_cast<size_t>(y)] = v;
            todo.push_back(y);
          } else if (std::abs(vals[static_cast<size_t>(y)] - v) > 1e-8) {
            return;  // inconsistent assignment
          }
        }
      }
      char_tables.push_back(std::move(vals));
      return;
    }
    for (int a = 0; a < orders[pos]; ++a) {
      assign[pos] = a;
      enumerate(pos + 1);
    }
  };
  enumerate(0);

  // Lift to per-class values.
  const auto& classes = g.conjugacy_classes();
  std::vector<OneDimCharacter> out;
  for (const auto& tab : char_tables) {
    OneDimCharacter chi;
    chi.class_values.resize(classes.size());
    for (size_t c = 0; c < classes.size(); ++c)
      chi.class_values[c] = tab[static_cast<size_t>(coset_of[static_cast<size_t>(classes[c][0])])];
    out.push_back(std::move(chi));
  }

  // Canonical order: trivial first, then lexicographic by quantized (arg) values.
  auto is_trivial = [](const OneDimCharacter& c) {
    for (auto v : c.class_values)
      if (std::abs(v - Complex(1.0)) > 1e-8) return false;
    return true;
  };
  std::sort(out.begin(), out.end(), [&](const OneDimCharacter& a, const OneDimCharacter& b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    for (size_t i = 0; i < a.class_values.size(); ++i) {
      long pa = std::lround(std::arg(a.class_values[i]) * 1e6);
      long pb = std::lround(std::arg(b.class_values[i]) * 1e6);
      if (pa != pb) return pa < pb;
    }
    return false;
  });
  return out;
}

int rep_multiplicity(const FiniteGroup& g, const std::vector<Complex>& chi_space,
                     const OneDimCharacter& chi_irrep) {
  const auto& classes = g.conjugacy_classes();
  if (chi_space.size() != classes.size() || chi_irrep.class_values.size() != classes.size())
    throw DimensionMismatch("rep_multiplicity: class-function size mismatch");
  Complex sum = 0;
  for (size_t c = 0; c < classes.size(); ++c)
    sum += static_cast<double>(classes[c].size()) * std::conj(chi_irrep.class_values[c]) *
           chi_space[c];
  sum /= static_cast<double>(g.order());
  if (std::abs(sum.imag()) > 1e-6)
    throw NonIntegerMultiplicity("rep_multiplicity: complex residual");
  return check_integer(sum.real(), 1e-6, "rep_multiplicity");
}

RepMap defining_rep() {
  return [](const Mat& u) { return u; };
}

RepMap tensor_power_rep(int nsites) {
  return [nsites](const Mat& u) { return kron_power(u, nsites); };
}

RepMap sym_power_rep(int degree) {
  return [degree](const Mat& u) { return sym_power(u, degree); };
}

RepMap spin_rep(int L) {
  return [L](const Mat& u) { return sym_power(su2_lift(u), 2 * L); };
}

std::vector<Mat> represent_all(const FiniteGroup& g, const RepMap& rep) {
  std::vector<Mat> out;
  out.reserve(static_cast<size_t>(g.order()));
  for (const auto& e : g.elements()) out.push_back(rep(e));
  return out;
}

Mat symmetrize(const Mat& op, const std::vector<Mat>& represented) {
  if (represented.empty()) throw std::invalid_argument("symmetrize: empty element list");
  if (represented.front().rows() != op.rows())
    throw DimensionMismatch("symmetrize: representation does not match operator space");
  Mat acc = Mat::Zero(op.rows(), op.cols());
  for (const auto& pi : represented) acc += pi.adjoint() * op * pi;
  return Mat(acc / static_cast<double>(represented.size()));
}

Mat symmetrize(const Mat& op, const FiniteGroup& g, const RepMap& rep) {
  return symmetrize(op, represent_all(g, rep));
}

bool verify_factorization(const FiniteGroup& g, const FiniteGroup& k, const std::vector<Mat>& s) {
  std::vector<int> k_in_g;
  for (const auto& e : k.elements()) {
    int idx = g.find(e);
    if (idx < 0) throw NotSubgroup("verify_factorization: k not contained in g");
    k_in_g.push_back(idx);
  }
  std::vector<int> s_in_g;
  for (const auto& e : s) {
    int idx = g.find(e);
    if (idx < 0) throw NotSubgroup("verify_factorization: s not contained in g");
    s_in_g.push_back(idx);
  }
  if (static_cast<long>(k_in_g.size()) * static_cast<long>(s_in_g.size()) != g.order())
    return false;
  std::vector<char> hit(static_cast<size_t>(g.order()), 0);
  for (int ki : k_in_g)
    for (int si : s_in_g) {
      int p = g.multiply(ki, si);
      if (hit[static_cast<size_t>(p)]) return false;
      hit[static_cast<size_t>(p)] = 1;
    }
  return true;
}

int QuotientGroup::coset_inverse(int c) const {
  for (int x = 0; x < order(); ++x)
    if (mult[static_cast<size_t>(c)][static_cast<size_t>(x)] == 0) return x;
  return -1;
}

int QuotientGroup::coset_order(int c) const {
  int o = 1, y = c;
  while (y != 0) {
    y = mult[static_cast<size_t>(y)][static_cast<size_t>(c)];
    o++;
    if (o > order() + 1) return -1;
  }
  return o;
}

QuotientGroup quotient_group(const FiniteGroup& g, const FiniteGroup& k) {
  std::vector<int> k_in_g;
  for (const auto& e : k.elements()) {
    int idx = g.find(e);
    if (idx < 0) throw NotSubgroup("quotient_group: k not contained in g");
    k_in_g.push_back(idx);
  }
  std::vector<char> in_k(static_cast<size_t>(g.order()), 0);
  for (int i : k_in_g) in_k[static_cast<size_t>(i)] = 1;

  for (int gi : g.generator_indices()) {
    for (int ki : k_in_g) {
      int conj = g.multiply(g.multiply(gi, ki), g.inverse(gi));
      if (!in_k[static_cast<size_t>(conj)]) throw NotNormal("quotient_group: k not normal in g");
    }
  }

  QuotientGroup q;
  std::vector<int> coset_of(static_cast<size_t>(g.order()), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (coset_of[static_cast<size_t>(x)] >= 0) continue;
    int id = static_cast<int>(q.cosets.size());
    std::vector<int> members;
    for (int ki : k_in_g) {
      int y = g.multiply(x, ki);
      coset_of[static_cast<size_t>(y)] = id;
      members.push_back(y);
    }
    std::sort(members.begin(), members.end());
    q.representatives.push_back(members.front());
    q.cosets.push_back(std::move(members));
  }
  // Coset 0 must be k itself; element 0 (identity) lands there by construction.
  const int m = q.order();
  q.mult.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m), -1));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      q.mult[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          coset_of[static_cast<size_t>(g.multiply(q.representatives[static_cast<size_t>(a)],
                                                  q.representatives[static_cast<size_t>(b)]))];
  return q;
}

bool is_symmetry_of(const Mat& op, const std::vector<Mat>& elements, const RepMap& rep) {
  const double scale = op.norm();
  for (const auto& e : elements) {
    Mat pi = rep(e);
    if (pi.rows() != op.rows())
      throw DimensionMismatch("is_symmetry_of: representation/operator mismatch");
    if ((pi.adjoint() * op * pi - op).norm() > 1e-8 * scale) return false;
  }
  return true;
}

std::string group_to_json(const FiniteGroup& g) {
  nlohmann::json j;
  j["name"] = g.name();
  j["d"] = g.dim();
  j["mode"] = g.mode() == GroupMode::exact ? "exact" : "projective";
  j["order"] = g.order();
  nlohmann::json gens = nlohmann::json::array();
  for (int gi : g.generator_indices()) {
    const Mat& m = g.element(gi);
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c)
        rows.push_back({m(r, c).real(), m(r, c).imag()});
    gens.push_back(rows);
  }
  j["generators"] = gens;
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cls : g.conjugacy_classes()) classes.push_back(cls);
  j["classes"] = classes;
  return j.dump(2);
}

FiniteGroup group_from_json(const std::string& text, int max_order) {
  nlohmann::json j = nlohmann::json::parse(text);
  const int d = j.at("d").get<int>();
  GroupMode mode = j.at("mode").get<std::string>() == "projective" ? GroupMode::projective
                                                                   : GroupMode::exact;
  std::vector<Mat> gens;
  for (const auto& flat : j.at("generators")) {
    Mat m(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < d; ++c) {
        const auto& pair = flat.at(static_cast<size_t>(r * d + c));
        m(r, c) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
      }
    gens.push_back(m);
  }
  FiniteGroup g = generate_group(gens, mode, max_order);
  if (j.contains("name")) g.set_name(j["name"].get<std::string>());
  return g;
}

}  // namespace sudec
