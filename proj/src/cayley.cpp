#include "sudec/cayley.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>

namespace sudec {

namespace {

// Deterministic xorshift-based PRNG decoupled from stdlib distributions.
struct SplitMix {
  uint64_t state;
  explicit SplitMix(uint64_t seed) : state(seed + 0x9e3779b97f4a7c15ULL) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  size_t below(size_t n) { return static_cast<size_t>(next() % n); }
};

template <typename T>
void shuffle_vec(std::vector<T>& v, SplitMix& rng) {
  for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

}  // namespace

CayleyGraph build_cayley(std::shared_ptr<const FiniteGroup> g,
                         const std::vector<int>& generator_indices) {
  // The chosen subset must generate the whole group.
  {
    std::vector<Mat> gens;
    for (int i : generator_indices) gens.push_back(g->element(i));
    FiniteGroup sub = generate_group(gens, g->mode(), g->order() + 1);
    if (sub.order() != g->order())
      throw NotGenerating("build_cayley: subset generates a proper subgroup");
  }
  CayleyGraph graph;
  graph.group = g;
  graph.generator_indices = generator_indices;
  graph.out_edges.resize(static_cast<size_t>(g->order()));
  for (int v = 0; v < g->order(); ++v) {
    for (size_t c = 0; c < generator_indices.size(); ++c) {
      int to = g->multiply(generator_indices[c], v);
      graph.out_edges[static_cast<size_t>(v)].push_back(static_cast<int>(graph.edges.size()));
      graph.edges.push_back({v, to, static_cast<int>(c)});
    }
  }
  return graph;
}

std::vector<int> eulerian_circuit(const CayleyGraph& graph, int start, uint64_t seed) {
  SplitMix rng(seed);
  auto order = graph.out_edges;
  for (auto& lst : order) shuffle_vec(lst, rng);
  std::vector<size_t> next_edge(order.size(), 0);
  std::vector<char> used(graph.edges.size(), 0);

  // Hierholzer: walk until stuck, back out recording edges, splice sub-cycles.
  std::vector<std::pair<int, int>> stack;  // (vertex, incoming edge id)
  std::vector<int> circuit;
  stack.emplace_back(start, -1);
  while (!stack.empty()) {
    auto [v, in_edge] = stack.back();
    size_t& cursor = next_edge[static_cast<size_t>(v)];
    bool advanced = false;
    while (cursor < order[static_cast<size_t>(v)].size()) {
      int e = order[static_cast<size_t>(v)][cursor++];
      if (used[static_cast<size_t>(e)]) continue;
      used[static_cast<size_t>(e)] = 1;
      stack.emplace_back(graph.edges[static_cast<size_t>(e)].to, e);
      advanced = true;
      break;
    }
    if (!advanced) {
      stack.pop_back();
      if (in_edge >= 0) circuit.push_back(in_edge);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

HamiltonianResult hamiltonian_circuit(const CayleyGraph& graph, int start, long budget) {
  const int n = graph.vertices();
  HamiltonianResult result;
  if (n == 1) {
    result.path = std::vector<int>{start};
    return result;
  }
  std::vector<char> visited(static_cast<size_t>(n), 0);
  std::vector<int> path{start};
  visited[static_cast<size_t>(start)] = 1;
  long expansions = 0;

  auto neighbors = [&](int v) {
    std::vector<int> out;
    for (int e : graph.out_edges[static_cast<size_t>(v)])
      out.push_back(graph.edges[static_cast<size_t>(e)].to);
    return out;
  };
  auto unvisited_degree = [&](int v) {
    int k = 0;
    for (int w : neighbors(v))
      if (!visited[static_cast<size_t>(w)]) k++;
    return k;
  };
  auto closes = [&](int v) {
    for (int w : neighbors(v))
      if (w == start) return true;
    return false;
  };

  std::function<bool(int)> dfs = [&](int v) -> bool {
    if (static_cast<int>(path.size()) == n) return closes(v);
    if (++expansions > budget) return false;
    auto cand = neighbors(v);
    std::vector<std::pair<int, int>> ranked;  // (onward choices, vertex)
    for (int w : cand)
      if (!visited[static_cast<size_t>(w)]) ranked.emplace_back(unvisited_degree(w), w);
    std::sort(ranked.begin(), ranked.end());
    for (auto [deg, w] : ranked) {
      visited[static_cast<size_t>(w)] = 1;
      path.push_back(w);
      if (dfs(w)) return true;
      path.pop_back();
      visited[static_cast<size_t>(w)] = 0;
      if (expansions > budget) return false;
    }
    return false;
  };

  if (dfs(start)) {
    result.path = path;
  } else if (expansions > budget) {
    result.budget_exhausted = true;
  }
  return result;
}

int PulseSequence::primitive_count() const {
  int total = 0;
  for (const auto& p : pulses) total += p.merged;
  return total;
}

namespace {

std::string color_label(const CayleyGraph& graph, int color) {
  return "g" + std::to_string(color);
}

}  // namespace

PulseSequence emit_sequence(const std::vector<int>& euler_edges, const CayleyGraph& graph,
                            double tau) {
  PulseSequence seq;
  seq.tau = tau;
  seq.kind = SequenceKind::eulerian;
  seq.group_name = graph.group->name();
  if (graph.group->order() == 1) return seq;  // pure wait
  for (int e : euler_edges) {
    int color = graph.edges[static_cast<size_t>(e)].color;
    seq.pulses.push_back(
        {color_label(graph, color),
         graph.group->element(graph.generator_indices[static_cast<size_t>(color)]), 1});
  }
  return seq;
}

PulseSequence emit_sequence_hamiltonian(const std::vector<int>& vertex_path,
                                        const CayleyGraph& graph, double tau) {
  PulseSequence seq;
  seq.tau = tau;
  seq.kind = SequenceKind::hamiltonian;
  seq.group_name = graph.group->name();
  const auto& g = *graph.group;
  const int n = static_cast<int>(vertex_path.size());
  for (int k = 0; k < n; ++k) {
    int from = vertex_path[static_cast<size_t>(k)];
    int to = vertex_path[static_cast<size_t>((k + 1) % n)];
    bool found = false;
    for (int e : graph.out_edges[static_cast<size_t>(from)]) {
      const auto& edge = graph.edges[static_cast<size_t>(e)];
      if (edge.to == to) {
        seq.pulses.push_back(
            {color_label(graph, edge.color),
             g.element(graph.generator_indices[static_cast<size_t>(edge.color)]), 1});
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("emit_sequence_hamiltonian: path edge missing");
  }
  return seq;
}

PulseSequence literal_sequence(const std::vector<std::pair<std::string, Mat>>& pulses,
                               double tau) {
  PulseSequence seq;
  seq.tau = tau;
  seq.kind = SequenceKind::literal;
  for (const auto& [label, u] : pulses) seq.pulses.push_back({label, u, 1});
  return seq;
}

PulseSequence nest_sequences(const PulseSequence& outer, const PulseSequence& inner) {
  if (inner.pulses.empty()) return outer;
  if (!outer.pulses.empty() && outer.dim() != inner.dim())
    throw DimensionMismatch("nest_sequences: pulse dimensions differ");
  PulseSequence out;
  out.tau = inner.tau;
  out.kind = SequenceKind::nested;
  out.group_name = outer.group_name + "[" + inner.group_name + "]";
  for (const auto& po : outer.pulses) {
    for (size_t k = 0; k + 1 < inner.pulses.size(); ++k) out.pulses.push_back(inner.pulses[k]);
    const auto& last = inner.pulses.back();
    // The outer pulse abuts the inner cycle's final pulse: compose them.
    out.pulses.push_back(
        {po.label + "*" + last.label, Mat(po.unitary * last.unitary), po.merged + last.merged});
  }
  return out;
}

std::vector<Mat> toggling_propagators(const PulseSequence& seq) {
  std::vector<Mat> props;
  const Eigen::Index d = seq.dim();
  Mat u = Mat::Identity(d, d);
  for (const auto& p : seq.pulses) {
    props.push_back(u);
    u = p.unitary * u;
  }
  return props;
}

Mat net_unitary(const PulseSequence& seq) {
  const Eigen::Index d = seq.dim();
  Mat u = Mat::Identity(d, d);
  for (const auto& p : seq.pulses) u = p.unitary * u;
  return u;
}

Mat first_order_average(const PulseSequence& seq, const Mat& h, const RepMap& rep) {
  if (seq.pulses.empty()) return h;
  auto props = toggling_propagators(seq);
  Mat acc = Mat::Zero(h.rows(), h.cols());
  for (const auto& u : props) {
    Mat pi = rep(u);
    if (pi.rows() != h.rows())
      throw DimensionMismatch("first_order_average: rep does not match operator");
    acc += pi.adjoint() * h * pi;
  }
  return Mat(acc / static_cast<double>(props.size()));
}

Mat finite_duration_error(const Mat& h, const Mat& pulse_generator, double tau_p, int steps) {
  if (steps < 8) throw std::invalid_argument("finite_duration_error: steps must be >= 8");
  Mat acc = Mat::Zero(h.rows(), h.cols());
  for (int s = 0; s < steps; ++s) {
    double t = (s + 0.5) / steps;  // midpoint of panel s, in units of tau_p
    Mat p = expm_skew(pulse_generator, t);
    acc += p.adjoint() * h * p;
  }
  (void)tau_p;  // the 1/tau_p prefactor cancels against dt = tau_p/steps
  return Mat(acc / static_cast<double>(steps));
}

std::string sequence_to_json(const PulseSequence& seq) {
  nlohmann::json j;
  switch (seq.kind) {
    case SequenceKind::eulerian: j["kind"] = "eulerian"; break;
    case SequenceKind::hamiltonian: j["kind"] = "hamiltonian"; break;
    case SequenceKind::literal: j["kind"] = "literal"; break;
    case SequenceKind::nested: j["kind"] = "nested"; break;
  }
  j["tau"] = seq.tau;
  j["group"] = seq.group_name;
  nlohmann::json pulses = nlohmann::json::array();
  for (const auto& p : seq.pulses) {
    nlohmann::json jp;
    jp["label"] = p.label;
    jp["merged"] = p.merged;
    nlohmann::json u = nlohmann::json::array();
    for (Eigen::Index r = 0; r < p.unitary.rows(); ++r)
      for (Eigen::Index c = 0; c < p.unitary.cols(); ++c)
        u.push_back({p.unitary(r, c).real(), p.unitary(r, c).imag()});
    jp["unitary"] = u;
    pulses.push_back(jp);
  }
  j["pulses"] = pulses;
  return j.dump(2);
}

PulseSequence sequence_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  PulseSequence seq;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "eulerian")
    seq.kind = SequenceKind::eulerian;
  else if (kind == "hamiltonian")
    seq.kind = SequenceKind::hamiltonian;
  else if (kind == "nested")
    seq.kind = SequenceKind::nested;
  else
    seq.kind = SequenceKind::literal;
  seq.tau = j.at("tau").get<double>();
  if (j.contains("group")) seq.group_name = j["group"].get<std::string>();
  for (const auto& jp : j.at("pulses")) {
    const auto& flat = jp.at("unitary");
    int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(flat.size()))));
    Mat u(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < d; ++c) {
        const auto& pair = flat.at(static_cast<size_t>(r * d + c));
        u(r, c) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
      }
    Pulse p{jp.at("label").get<std::string>(), u, 1};
    if (jp.contains("merged")) p.merged = jp["merged"].get<int>();
    seq.pulses.push_back(std::move(p));
  }
  return seq;
}

}  // namespace sudec
