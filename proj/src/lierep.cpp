#include "sudec/lierep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace sudec {

DynkinLabel::DynkinLabel(int d_, std::vector<int> coeffs_) : d(d_), coeffs(std::move(coeffs_)) {
  if (d < 2) throw std::invalid_argument("DynkinLabel: d must be >= 2");
  if (static_cast<int>(coeffs.size()) != d - 1)
    throw std::invalid_argument("DynkinLabel: need d-1 coefficients");
  for (int c : coeffs)
    if (c < 0) throw std::invalid_argument("DynkinLabel: coefficients must be >= 0");
}

bool DynkinLabel::operator<(const DynkinLabel& o) const {
  if (d != o.d) return d < o.d;
  return coeffs < o.coeffs;
}

std::string DynkinLabel::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
  os << ")";
  return os.str();
}

std::vector<int> DynkinLabel::partition() const {
  std::vector<int> lambda(static_cast<size_t>(d), 0);
  for (int i = d - 2; i >= 0; --i)
    lambda[static_cast<size_t>(i)] = lambda[static_cast<size_t>(i) + 1] + coeffs[static_cast<size_t>(i)];
  return lambda;
}

DynkinLabel DynkinLabel::from_partition(int d, std::vector<int> lambda) {
  lambda.resize(static_cast<size_t>(d), 0);
  // Columns of height d drop out: only row-length differences survive.
  std::vector<int> coeffs(static_cast<size_t>(d) - 1);
  for (int i = 0; i < d - 1; ++i)
    coeffs[static_cast<size_t>(i)] =
        lambda[static_cast<size_t>(i)] - lambda[static_cast<size_t>(i) + 1];
  return DynkinLabel(d, std::move(coeffs));
}

DynkinLabel dual(const DynkinLabel& a) {
  std::vector<int> rev(a.coeffs.rbegin(), a.coeffs.rend());
  return DynkinLabel(a.d, std::move(rev));
}

DynkinLabel trivial_label(int d) { return DynkinLabel(d, std::vector<int>(static_cast<size_t>(d) - 1, 0)); }

DynkinLabel adjoint_label(int d) {
  std::vector<int> c(static_cast<size_t>(d) - 1, 0);
  c.front() = 1;
  c.back() += 1;  // d = 2: adjoint is (2)
  return DynkinLabel(d, std::move(c));
}

void IrrepDecomposition::add(const DynkinLabel& l, int mult) {
  for (auto& [label, m] : terms)
    if (label == l) {
      m += mult;
      return;
    }
  terms.emplace_back(l, mult);
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

int IrrepDecomposition::multiplicity(const DynkinLabel& l) const {
  for (const auto& [label, m] : terms)
    if (label == l) return m;
  return 0;
}

std::set<DynkinLabel> IrrepDecomposition::labels() const {
  std::set<DynkinLabel> out;
  for (const auto& [label, m] : terms) out.insert(label);
  return out;
}

long IrrepDecomposition::total_dimension() const {
  long sum = 0;
  for (const auto& [label, m] : terms) sum += m * weyl_dimension(label);
  return sum;
}

long weyl_dimension(const DynkinLabel& label) {
  auto lambda = label.partition();
  const int d = label.d;
  // prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)
  long double num = 1.0L, den = 1.0L;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      num *= lambda[static_cast<size_t>(i)] - lambda[static_cast<size_t>(j)] + j - i;
      den *= j - i;
    }
  return static_cast<long>(std::llroundl(num / den));
}

Complex complete_homogeneous(int n, const std::vector<Complex>& xs) {
  if (n < 0) return 0.0;
  // DP over variables: h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m).
  std::vector<Complex> h(static_cast<size_t>(n) + 1, 0.0);
  h[0] = 1.0;
  for (Complex x : xs)
    for (int k = 1; k <= n; ++k) h[static_cast<size_t>(k)] += x * h[static_cast<size_t>(k) - 1];
  return h[static_cast<size_t>(n)];
}

Complex irrep_character(const DynkinLabel& label, const std::vector<double>& eigenphases) {
  const int d = label.d;
  if (static_cast<int>(eigenphases.size()) != d)
    throw DimensionMismatch("irrep_character: need d eigenphases");
  std::vector<Complex> xs;
  xs.reserve(eigenphases.size());
  for (double th : eigenphases) xs.push_back(std::exp(Complex(0, th)));

  auto lambda = label.partition();
  int maxdeg = lambda[0] + d;
  std::vector<Complex> htab(static_cast<size_t>(maxdeg) + 1, 0.0);  // htab[k] = h_k(xs)
  htab[0] = 1.0;
  for (Complex x : xs)
    for (int k = 1; k <= maxdeg; ++k) htab[static_cast<size_t>(k)] += x * htab[static_cast<size_t>(k) - 1];
  auto h = [&](int k) -> Complex {
    if (k < 0) return 0.0;
    return htab[static_cast<size_t>(k)];
  };

  // Jacobi-Trudi: s_lambda = det( h_{lambda_i - i + j} ), i,j = 1..d.
  Mat jt(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) jt(i, j) = h(lambda[static_cast<size_t>(i)] - (i + 1) + (j + 1));
  return jt.determinant();
}

double su2_character(int L, double theta) {
  double sum = 1.0;
  for (int m = 1; m <= L; ++m) sum += 2.0 * std::cos(m * theta);
  return sum;
}

namespace {

// Littlewood-Richardson expansion: place the boxes of mu's rows ("letters")
// into the shape lambda, letter by letter, keeping a partition shape, at most
// one box of a letter per column, and the lattice-word condition.
void lr_recurse(const std::vector<int>& mu, size_t letter, int d,
                std::vector<int>& shape, std::vector<std::vector<int>>& placed,
                std::map<std::vector<int>, int>& out) {
  if (letter == mu.size() || mu[letter] == 0) {
    out[shape] += 1;
    return;
  }
  const int boxes = mu[letter];
  std::vector<int> before = shape;
  std::vector<int> add(static_cast<size_t>(d), 0);

  std::function<void(int, int)> place = [&](int row, int remaining) {
    if (row == d) {
      if (remaining != 0) return;
      for (int r = 0; r < d; ++r) shape[static_cast<size_t>(r)] += add[static_cast<size_t>(r)];
      placed.push_back(add);
      lr_recurse(mu, letter + 1, d, shape, placed, out);
      placed.pop_back();
      shape = before;
      return;
    }
    for (int a = 0; a <= remaining; ++a) {
      add[static_cast<size_t>(row)] = a;
      // Column strictness: boxes in row r must sit under boxes that existed
      // before this letter was placed (rows below the top row only).
      if (row > 0 && before[static_cast<size_t>(row)] + a > before[static_cast<size_t>(row) - 1]) break;
      // Letters after the first cannot enter row 1, and the lattice condition
      // requires the running count of this letter to stay <= the count of the
      // previous letter over the rows above.
      if (letter > 0) {
        int cur = 0, prev = 0;
        for (int r = 0; r <= row; ++r) cur += add[static_cast<size_t>(r)];
        for (int r = 0; r < row; ++r) prev += placed.back()[static_cast<size_t>(r)];
        if (cur > prev) break;
      }
      place(row + 1, remaining - a);
    }
    add[static_cast<size_t>(row)] = 0;
  };

  place(0, boxes);
}

}  // namespace

IrrepDecomposition tensor_decompose(const DynkinLabel& a, const DynkinLabel& b) {
  if (a.d != b.d) throw DimensionMismatch("tensor_decompose: mismatched d");
  const int d = a.d;
  std::vector<int> lambda = a.partition();
  std::vector<int> mu = b.partition();

  std::map<std::vector<int>, int> shapes;
  std::vector<std::vector<int>> placed;
  // Track previous-letter placements; seed with a row of "infinity" so letter 0
  // is unconstrained by the lattice condition (handled by the letter>0 guard).
  lr_recurse(mu, 0, d, lambda, placed, shapes);

  IrrepDecomposition out;
  for (const auto& [shape, mult] : shapes)
    out.add(DynkinLabel::from_partition(d, shape), mult);
  return out;
}

std::set<DynkinLabel> adjoint_power_labels(int d, int K) {
  if (d < 2 || K < 1) throw std::invalid_argument("adjoint_power_labels: d >= 2, K >= 1");
  const DynkinLabel adj = adjoint_label(d);
  std::set<DynkinLabel> current{adj};
  for (int k = 2; k <= K; ++k) {
    std::set<DynkinLabel> next;
    for (const auto& l : current) {
      auto dec = tensor_decompose(l, adj);
      for (const auto& [label, m] : dec.terms) next.insert(label);
    }
    current = std::move(next);
  }
  return current;
}

bool verify_qudit_formula(int d) {
  if (d < 5) throw std::invalid_argument("verify_qudit_formula: d must be >= 5");
  const DynkinLabel adj = adjoint_label(d);
  auto dec = tensor_decompose(adj, adj);

  auto label = [&](std::vector<std::pair<int, int>> entries) {
    std::vector<int> c(static_cast<size_t>(d) - 1, 0);
    for (auto [pos, val] : entries) c[static_cast<size_t>(pos)] = val;
    return DynkinLabel(d, std::move(c));
  };
  IrrepDecomposition expected;
  expected.add(trivial_label(d), 1);
  expected.add(adj, 2);
  expected.add(label({{1, 1}, {d - 3, 1}}), 1);       // (0,1,0..,1,0)
  expected.add(label({{0, 2}, {d - 3, 1}}), 1);       // (2,0..,1,0)
  expected.add(label({{1, 1}, {d - 2, 2}}), 1);       // (0,1,..0,2)
  expected.add(label({{0, 2}, {d - 2, 2}}), 1);       // (2,0..,2)

  if (dec.terms != expected.terms) return false;
  long dim = static_cast<long>(d) * d - 1;
  return dec.total_dimension() == dim * dim;
}

std::set<int> su2_operator_space_labels(int two_j, int nspins) {
  if (two_j < 1 || nspins < 1)
    throw std::invalid_argument("su2_operator_space_labels: j >= 1/2, nspins >= 1");
  std::set<int> out;
  for (int L = 0; L <= nspins * two_j; ++L) out.insert(L);
  return out;
}

}  // namespace sudec
