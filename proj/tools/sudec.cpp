#include <CLI11.hpp>
#include <json.hpp>

#include "sudec/catalog.hpp"
#include "sudec/cayley.hpp"
#include "sudec/ddsim.hpp"
#include "sudec/orientation.hpp"
#include "sudec/qecc.hpp"
#include "sudec/verify.hpp"

#include <chrono>
#include <filesystem>
#include <thread>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using namespace sudec;
using nlohmann::json;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitSearchBudget = 3;
constexpr int kExitDimensionMismatch = 4;
constexpr int kExitRankMismatch = 5;

uint64_t resolve_seed(std::optional<uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SUDEC_SEED")) return std::strtoull(env, nullptr, 10);
  return 1;
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  out << text;
}

// Every run drops a manifest echoing the resolved configuration.
void write_manifest(const fs::path& outdir, const std::string& command, const json& config) {
  json m;
  m["command"] = command;
  m["config"] = config;
  m["timestamp"] = static_cast<long>(
      std::chrono::duration_cast<std::chrono::seconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count());
  write_file(outdir / "manifest.json", m.dump(2));
}

uint64_t fnv1a(const std::string& bytes) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::optional<int> opt_n(int n) {
  if (n < 0) return std::nullopt;
  return n;
}

Mat named_matrix(const std::string& name) {
  if (name == "A" || name == "A2") return mat_A(2);
  if (name == "A3") return mat_A(3);
  if (name == "A4") return mat_A(4);
  if (name == "B") return mat_B();
  if (name == "C") return mat_C();
  if (name == "D") return mat_D();
  if (name == "E") return mat_E();
  if (name == "F") return mat_F();
  if (name == "V") return mat_V();
  if (name == "W") return mat_W();
  if (name == "X") return mat_X();
  if (name == "Y") return mat_Y();
  if (name == "Z") return mat_Z();
  throw UnknownGroup("unknown generator name: " + name);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

// Named group orientations: swaps or conjugates the generating set before closure.
std::vector<Mat> oriented_generators(const std::string& group, std::vector<Mat> gens,
                                     const std::string& orient, const std::string& weyl) {
  if (orient.empty() || orient == "none") return gens;
  if (orient == "teddy") {
    if (group == "D2") return builtin_generators("D2teddy");
    if (group == "T") return builtin_generators("Tteddy");
    throw UnknownGroup("orientation 'teddy' applies to D2 or T");
  }
  if (orient == "c5z") {
    if (group == "T") return builtin_generators("Tc5z");
    if (group == "O") return builtin_generators("Oc5z");
    throw UnknownGroup("orientation 'c5z' applies to T or O");
  }
  if (orient == "king") {
    if (group != "Delta24") throw UnknownGroup("orientation 'king' applies to Delta24");
    return delta24_embedding().generators;
  }
  if (orient == "diag-X") {
    std::vector<int> perm{0, 1, 2};
    if (!weyl.empty()) {
      static const std::map<std::string, std::vector<int>> perms = {
          {"e", {0, 1, 2}},  {"12", {1, 0, 2}},  {"13", {2, 1, 0}},
          {"23", {0, 2, 1}}, {"123", {1, 2, 0}}, {"132", {2, 0, 1}}};
      auto it = perms.find(weyl);
      if (it == perms.end()) throw UnknownGroup("unknown weyl permutation: " + weyl);
      perm = it->second;
    }
    Orientation o{diagonalizer_of_X(), perm, "diag-X"};
    return conjugate_generators(gens, o);
  }
  if (orient == "pulse-P" || orient == "pulse-Pprime") {
    Mat q = diagonalizer_of_X() *
            (orient == "pulse-P" ? pulse_frame_P() : pulse_frame_Pprime()).adjoint();
    return conjugate_generators(gens, Orientation{q, {}, orient});
  }
  throw UnknownGroup("unknown orientation: " + orient);
}

int cmd_group(const std::string& name, int n, bool quotient_center, const std::string& out) {
  FiniteGroup g = catalog_group(name, opt_n(n));
  bool center = contains_center(g);
  if (quotient_center) g = quotient_by_center(g);
  g.prepare();
  std::cout << "group " << g.name() << "\n"
            << "order " << g.order() << "\n"
            << "center " << (center ? "yes" : "no") << "\n";
  std::cout << "class sizes";
  for (const auto& c : g.conjugacy_classes()) std::cout << " " << c.size();
  std::cout << "\n";
  if (!out.empty()) write_file(out, group_to_json(g));
  return 0;
}

int cmd_scan(const std::vector<std::string>& groups, const std::string& labels_text, bool table3,
             bool fig2, const std::string& out) {
  std::ostringstream csv;
  if (table3) {
    csv << "group,n,order,center";
    const std::vector<std::pair<int, int>> cols = {{1, 1}, {3, 0}, {2, 2}, {4, 1},
                                                   {3, 3}, {6, 0}, {5, 2}, {4, 4}};
    for (auto [p, q] : cols) csv << ",(" << p << " " << q << ")";
    csv << "\n";
    const std::vector<std::pair<std::string, int>> rows = {
        {"Delta3n2", 2},   {"Delta3n2", 3},   {"Delta3n2", 4},    {"Delta6n2", 1},
        {"Delta6n2", 2},   {"Delta6n2", 3},   {"Sigma60", -1},    {"Sigma168", -1},
        {"Sigma36x3", -1}, {"Sigma72x3", -1}, {"Sigma216x3", -1}, {"Sigma360x3", -1}};
    for (const auto& [name, n] : rows) {
      FiniteGroup g = catalog_group(name, opt_n(n));
      csv << name << "," << (n > 0 ? std::to_string(n) : "") << "," << g.order() << ","
          << (contains_center(g) ? 1 : 0);
      for (auto [p, q] : cols)
        csv << ","
            << (trivial_multiplicity(g, DynkinLabel(3, {p, q})) == 0 ? "inaccessible"
                                                                     : "accessible");
      csv << "\n";
    }
  } else if (fig2) {
    csv << "group,L,multiplicity,accessible\n";
    for (const std::string name : {"D2", "D3", "T", "O", "I"}) {
      FiniteGroup g = catalog_group(name);
      for (int L = 0; L <= 30; ++L) {
        int m = trivial_multiplicity(g, DynkinLabel(2, {2 * L}));
        csv << name << "," << L << "," << m << "," << (m > 0 ? 1 : 0) << "\n";
      }
    }
  } else {
    if (groups.empty() || labels_text.empty()) {
      std::cerr << "scan: need --groups and --labels (or a preset)\n";
      return kExitBadInput;
    }
    std::vector<DynkinLabel> labels;
    for (const auto& part : split(labels_text, ';')) {
      auto nums = split(part, ',');
      std::vector<int> coeffs;
      for (const auto& v : nums) coeffs.push_back(std::stoi(v));
      labels.emplace_back(static_cast<int>(coeffs.size()) + 1, coeffs);
    }
    csv << "group,label,multiplicity,accessible\n";
    for (const auto& name : groups) {
      FiniteGroup g = catalog_group(name);
      for (const auto& row : accessibility_scan(g, labels))
        csv << name << "," << row.label.str() << "," << row.multiplicity << ","
            << (row.accessible ? 1 : 0) << "\n";
    }
  }
  if (out.empty())
    std::cout << csv.str();
  else
    write_file(out, csv.str());
  return 0;
}

int cmd_sequence(const std::string& group, int n, bool quotient_center, bool no_quotient,
                 const std::string& generators, const std::string& orient,
                 const std::string& weyl, const std::string& kind, uint64_t seed, double tau,
                 long budget, const std::string& out) {
  std::vector<Mat> gens;
  if (!generators.empty()) {
    for (const auto& name : split(generators, ',')) gens.push_back(named_matrix(name));
    gens = oriented_generators(group, gens, orient, weyl);
  } else {
    gens = oriented_generators(group, builtin_generators(group, opt_n(n)), orient, weyl);
  }

  FiniteGroup full = generate_group(gens, GroupMode::exact, 5000);
  full.set_name(group + (orient.empty() || orient == "none" ? "" : "(" + orient + ")"));
  // Sequences act on operator spaces, where the center is invisible, so the
  // quotient is taken whenever the center is present (unless suppressed).
  bool reduce = quotient_center || (!no_quotient && contains_center(full));
  auto g = std::make_shared<FiniteGroup>(reduce ? quotient_by_center(full) : full);

  std::vector<int> gi;
  for (const auto& gen : gens) gi.push_back(g->find(gen));
  auto graph = build_cayley(g, gi);

  PulseSequence seq;
  if (kind == "eulerian") {
    seq = emit_sequence(eulerian_circuit(graph, 0, seed), graph, tau);
  } else if (kind == "hamiltonian") {
    auto result = hamiltonian_circuit(graph, 0, budget);
    if (!result.path) {
      std::cerr << "sequence: Hamiltonian circuit not found"
                << (result.budget_exhausted ? " within budget" : " (search exhausted)") << "\n";
      return kExitSearchBudget;
    }
    seq = emit_sequence_hamiltonian(*result.path, graph, tau);
  } else {
    std::cerr << "sequence: unknown kind " << kind << "\n";
    return kExitBadInput;
  }
  seq.group_name = g->name();
  write_file(out, sequence_to_json(seq));
  std::cout << "pulses " << seq.intervals() << "\n";
  return 0;
}

struct SimulateArgs {
  std::vector<std::string> sequence_files;
  std::string preset;
  std::string model = "random";
  int n_sites = 3;
  int samples = 100;
  int workers = 0;  // 0 = machine parallelism
  uint64_t seed = 1;
  std::vector<double> tau_delta{0.0};
  std::vector<double> tau_gamma{0.0};
  std::string out = "out";
};

int cmd_simulate(const SimulateArgs& args) {
  std::vector<LabeledSequence> seqs;
  json manifest_seqs = json::array();
  auto load = [&](const std::string& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open sequence file " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    auto seq = sequence_from_json(ss.str());
    std::string label = seq.group_name.empty() ? fs::path(file).stem().string() : seq.group_name;
    seqs.push_back({label, seq});
    manifest_seqs.push_back({{"file", file}, {"hash", fnv1a(ss.str())}});
  };
  auto synth = [&](const std::string& label, const std::string& name,
                   const std::vector<Mat>& gens, uint64_t seed) {
    auto g = catalog_group(name);
    auto q = std::make_shared<FiniteGroup>(quotient_by_center(g));
    std::vector<int> gi;
    for (const auto& gen : gens) gi.push_back(q->find(gen));
    auto graph = build_cayley(q, gi);
    seqs.push_back({label, emit_sequence(eulerian_circuit(graph, 0, seed), graph, 0.0)});
    manifest_seqs.push_back({{"synthesized", label}, {"seed", seed}});
  };

  SweepGrid grid;
  grid.n_hamiltonians = args.samples;
  grid.seed = args.seed;
  grid.tau_delta_values = args.tau_delta;
  grid.tau_gamma_values = args.tau_gamma;
  grid.workers = args.workers > 0 ? args.workers
                                  : static_cast<int>(std::thread::hardware_concurrency());
  ModelKind kind = args.model == "nv" ? ModelKind::nv_secular : ModelKind::random_pair;

  std::vector<SweepRow> rows;
  auto axis = [](double lo_exp, double hi_exp, int points) {
    std::vector<double> v;
    for (int k = 0; k < points; ++k)
      v.push_back(std::pow(10.0, lo_exp + (hi_exp - lo_exp) * k / (points - 1)));
    return v;
  };

  if (args.preset == "fig5") {
    synth("Delta27/Z3", "Delta27", {mat_C(), mat_E()}, 11);
    synth("Sigma36x3/Z3", "Sigma36x3", {mat_V(), mat_C()}, 12);
    synth("Sigma72x3/Z3", "Sigma72x3", {mat_V(), mat_X()}, 13);
    auto taus = axis(-3.0, -2.0, 5);
    SweepGrid g1 = grid;
    g1.tau_delta_values = taus;
    g1.tau_gamma_values = {0.0};
    SweepGrid g2 = grid;
    g2.tau_delta_values = {0.0};
    g2.tau_gamma_values = taus;
    rows = sweep(g1, seqs, ModelKind::random_pair, 3);
    auto rows2 = sweep(g2, seqs, ModelKind::random_pair, 3);
    rows.insert(rows.end(), rows2.begin(), rows2.end());
  } else if (args.preset == "fig9") {
    // Oriented Sigma36x3/Z3 sequences against the rotating-frame spin-1 model.
    int idx = 0;
    for (const auto& o : reduced_weyl_orientations()) {
      auto gens = conjugate_generators({mat_V(), mat_C()}, o);
      auto full = generate_group(gens, GroupMode::exact, 200);
      auto q = std::make_shared<FiniteGroup>(quotient_by_center(full));
      std::vector<int> gi{q->find(gens[0]), q->find(gens[1])};
      auto graph = build_cayley(q, gi);
      seqs.push_back(
          {o.description, emit_sequence(eulerian_circuit(graph, 0, 21 + idx), graph, 0.0)});
      manifest_seqs.push_back({{"synthesized", o.description}});
      idx++;
    }
    auto taus = axis(-3.0, -2.0, 5);
    SweepGrid g1 = grid;
    g1.tau_delta_values = taus;
    g1.tau_gamma_values = taus;  // diagonal cut through (tau Delta, tau J)
    rows = sweep(g1, seqs, ModelKind::nv_secular, 3);
  } else if (args.preset == "fig10") {
    auto emb = delta24_embedding();
    int idx = 0;
    for (const auto& o : reduced_weyl_orientations()) {
      auto gens = conjugate_generators(emb.generators, o);
      auto q = std::make_shared<FiniteGroup>(generate_group(gens, GroupMode::exact, 30));
      std::vector<int> gi{q->find(gens[0]), q->find(gens[1])};
      auto graph = build_cayley(q, gi);
      seqs.push_back({"Delta24 " + o.description,
                      emit_sequence(eulerian_circuit(graph, 0, 31 + idx), graph, 0.0)});
      manifest_seqs.push_back({{"synthesized", "Delta24 " + o.description}});
      idx++;
    }
    auto taus = axis(-3.0, -2.0, 5);
    SweepGrid g1 = grid;
    g1.tau_delta_values = taus;
    g1.tau_gamma_values = taus;
    rows = sweep(g1, seqs, ModelKind::nv_secular, 3);
  } else if (args.preset == "fig11") {
    auto inner = literal_sequence({{"E", mat_E()}, {"E", mat_E()}, {"E", mat_E()}}, 0.0);
    auto k4 = literal_sequence(
        {{"X", mat_X()}, {"V", mat_V()}, {"X", mat_X()}, {"V", mat_V()}}, 0.0);
    std::vector<std::pair<std::string, Mat>> q8p;
    for (int rep = 0; rep < 2; ++rep) {
      for (int k = 0; k < 3; ++k) q8p.emplace_back("X", mat_X());
      q8p.emplace_back("V", mat_V());
    }
    auto k4e = nest_sequences(k4, inner);
    auto q8e = nest_sequences(literal_sequence(q8p, 0.0), inner);
    seqs.push_back({"K4[E]", k4e, net_unitary(k4e)});
    seqs.push_back({"Q8[E]", q8e, net_unitary(q8e)});
    manifest_seqs.push_back({{"synthesized", "K4[E]"}});
    manifest_seqs.push_back({{"synthesized", "Q8[E]"}});
    auto taus = axis(-3.0, -2.0, 5);
    SweepGrid g1 = grid;
    g1.tau_delta_values = taus;
    g1.tau_gamma_values = taus;
    rows = sweep(g1, seqs, ModelKind::nv_secular, 3);
  } else {
    for (const auto& f : args.sequence_files) load(f);
    if (seqs.empty()) {
      std::cerr << "simulate: no sequences given\n";
      return kExitBadInput;
    }
    rows = sweep(grid, seqs, kind, args.n_sites);
  }

  fs::path outdir(args.out);
  write_file(outdir / "sweep.csv", sweep_to_csv(rows));
  json config;
  config["model"] = args.model;
  config["preset"] = args.preset;
  config["n_sites"] = args.n_sites;
  config["samples"] = args.samples;
  config["seed"] = args.seed;
  config["sequences"] = manifest_seqs;
  config["tau_delta"] = args.tau_delta;
  config["tau_gamma"] = args.tau_gamma;
  write_manifest(outdir, "simulate", config);
  std::cout << "rows " << rows.size() << "\n";
  return 0;
}

struct QeccArgs {
  std::string preset;
  std::string group;
  int n = -1;
  std::string orient;
  std::string weyl;
  int spin = -1;
  int qutrits = -1;
  std::string spin_scan;     // "lo..hi"
  std::string qutrits_scan;  // "lo..hi"
  int character = 0;
  int k_expected = -1;
  std::string errors = "spin-linear";
  std::string mode = "correct";
  std::string refine_by;
  std::string refine_orient;
  std::string out;
};

int cmd_qecc_preset(const QeccArgs& args) {
  std::ostringstream csv;
  csv << "group,parameter,character,multiplicity\n";
  auto emit = [&](const std::string& label, const FiniteGroup& g, AmbientSpace::Kind kind,
                  int lo, int hi) {
    for (const auto& r : multiplicity_scan(g, kind, lo, hi))
      csv << label << "," << r.parameter << "," << r.character_index << "," << r.multiplicity
          << "\n";
  };
  if (args.preset == "fig6") {
    emit("T", catalog_group("T"), AmbientSpace::Kind::spin, 0, 14);
    emit("D2teddy", catalog_group("D2teddy"), AmbientSpace::Kind::spin, 0, 14);
    emit("Oc5z", catalog_group("Oc5z"), AmbientSpace::Kind::spin, 0, 14);
  } else if (args.preset == "fig7" || args.preset == "fig8") {
    emit("Sigma36x3", catalog_group("Sigma36x3"), AmbientSpace::Kind::symmetric_qudits, 1, 12);
    emit("Sigma72x3", catalog_group("Sigma72x3"), AmbientSpace::Kind::symmetric_qudits, 1, 12);
    emit("Delta24", catalog_group("Delta24"), AmbientSpace::Kind::symmetric_qudits, 1, 12);
    emit("Sigma168", catalog_group("Sigma168"), AmbientSpace::Kind::symmetric_qudits, 1, 12);
    if (args.preset == "fig8")
      emit("Sigma216x3", catalog_group("Sigma216x3"), AmbientSpace::Kind::symmetric_qudits, 1,
           12);
  } else {
    std::cerr << "qecc: unknown preset " << args.preset << "\n";
    return kExitBadInput;
  }
  if (args.out.empty())
    std::cout << csv.str();
  else
    write_file(args.out, csv.str());
  return 0;
}

int cmd_qecc(const QeccArgs& args) {
  if (!args.preset.empty()) return cmd_qecc_preset(args);
  if (args.group.empty()) {
    std::cerr << "qecc: need --group or --preset\n";
    return kExitBadInput;
  }
  auto gens = oriented_generators(args.group, builtin_generators(args.group, opt_n(args.n)),
                                  args.orient, args.weyl);
  FiniteGroup g = generate_group(gens, GroupMode::exact, 5000);
  g.set_name(args.group + (args.orient.empty() ? "" : "(" + args.orient + ")"));

  auto parse_range = [](const std::string& text) {
    auto pos = text.find("..");
    if (pos == std::string::npos) throw std::runtime_error("range must be lo..hi");
    return std::make_pair(std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2)));
  };

  if (!args.spin_scan.empty() || !args.qutrits_scan.empty()) {
    bool spin = !args.spin_scan.empty();
    auto [lo, hi] = parse_range(spin ? args.spin_scan : args.qutrits_scan);
    auto rows = multiplicity_scan(
        g, spin ? AmbientSpace::Kind::spin : AmbientSpace::Kind::symmetric_qudits, lo, hi);
    std::ostringstream csv;
    csv << (spin ? "j" : "N") << ",character,multiplicity\n";
    for (const auto& r : rows)
      csv << r.parameter << "," << r.character_index << "," << r.multiplicity << "\n";
    if (args.out.empty())
      std::cout << csv.str();
    else
      write_file(args.out, csv.str());
    return 0;
  }

  if (args.spin < 0 && args.qutrits < 0) {
    std::cerr << "qecc: need --spin, --qutrits or a scan range\n";
    return kExitBadInput;
  }
  AmbientSpace ambient = args.spin >= 0 ? AmbientSpace::spin(args.spin)
                                        : AmbientSpace::symmetric(3, args.qutrits);
  auto chis = one_dim_characters(g);
  if (args.character < 0 || args.character >= static_cast<int>(chis.size())) {
    std::cerr << "qecc: character index out of range (group has " << chis.size()
              << " one-dimensional irreps)\n";
    return kExitBadInput;
  }
  const auto& chi = chis[static_cast<size_t>(args.character)];
  int k = args.k_expected;
  if (k < 0) {
    auto chi_space = space_class_characters(g, ambient);
    k = rep_multiplicity(g, chi_space, chi);
    if (k == 0) {
      std::cerr << "qecc: empty sector (multiplicity 0)\n";
      return kExitRankMismatch;
    }
  }
  CodeSpace code = build_codespace(g, chi, ambient, k);
  if (!args.refine_by.empty()) {
    auto rgens =
        oriented_generators(args.refine_by, builtin_generators(args.refine_by),
                            args.refine_orient.empty() ? args.orient : args.refine_orient,
                            args.weyl);
    FiniteGroup larger = generate_group(rgens, GroupMode::exact, 5000);
    code = refine_basis(code, larger);
  }

  ErrorKind kind;
  if (args.errors == "spin-linear")
    kind = ErrorKind::spin_linear;
  else if (args.errors == "dephasing")
    kind = ErrorKind::dephasing;
  else if (args.errors == "rwa-dipolar")
    kind = ErrorKind::dipolar_disorder_rwa;
  else if (args.errors == "qutrit-single")
    kind = ErrorKind::qutrit_single;
  else if (args.errors == "qutrit-dephasing")
    kind = ErrorKind::qutrit_dephasing;
  else {
    std::cerr << "qecc: unknown error family " << args.errors << "\n";
    return kExitBadInput;
  }
  auto report = kl_check(code, error_set(kind, ambient),
                         args.mode == "detect" ? KlMode::detect : KlMode::correct);
  std::string ambient_name = args.spin >= 0 ? "spin-" + std::to_string(args.spin)
                                            : "symmetric-" + std::to_string(args.qutrits);
  json full = json::parse(kl_report_to_json(report, g.name(), ambient_name, args.character, k));
  json cw = json::array();
  for (Eigen::Index col = 0; col < code.codewords.cols(); ++col) {
    json column = json::array();
    for (Eigen::Index row = 0; row < code.codewords.rows(); ++row)
      column.push_back({code.codewords(row, col).real(), code.codewords(row, col).imag()});
    cw.push_back(column);
  }
  full["codewords"] = cw;
  if (!code.refined_sectors.empty()) full["refined_sectors"] = code.refined_sectors;
  std::string text = full.dump(2);
  if (args.out.empty())
    std::cout << text << "\n";
  else
    write_file(args.out, text);
  std::cout << "k " << k << " pass " << (report.pass ? 1 : 0) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, int samples, uint64_t seed) {
  AcceptanceOptions opt;
  opt.sweep_samples = samples;
  opt.seed = seed;
  auto results = run_acceptance(suite, opt);
  if (results.empty()) {
    std::cerr << "verify: unknown suite " << suite << "\n";
    return kExitBadInput;
  }
  bool all = true;
  for (const auto& r : results) {
    std::cout << "criterion " << r.number << " [" << (r.pass ? "PASS" : "FAIL") << "] " << r.name
              << "\n";
    for (const auto& note : r.notes) std::cout << "    " << note << "\n";
    all = all && r.pass;
  }
  return all ? 0 : kExitVerifyFail;
}

// Flags override config-file values: options not given on the command line
// pick up values from the JSON config.
void apply_config(CLI::App& app, const std::string& config_file) {
  if (config_file.empty()) return;
  std::ifstream in(config_file);
  if (!in) throw std::runtime_error("cannot open config file " + config_file);
  json j;
  in >> j;
  for (auto& [key, value] : j.items()) {
    for (auto* sub : app.get_subcommands({})) {
      auto* opt = sub->get_option_no_throw("--" + key);
      if (opt && opt->empty()) {
        if (value.is_array()) {
          for (const auto& v : value)
            opt->add_result(v.is_string() ? v.get<std::string>() : v.dump());
        } else if (value.is_string()) {
          opt->add_result(value.get<std::string>());
        } else {
          opt->add_result(value.dump());
        }
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-subgroup pulse-sequence synthesis, simulation and code search"};
  app.require_subcommand(1);
  std::string config_file;
  app.add_option("--config", config_file, "JSON config file mirroring flag names");

  auto* sg = app.add_subcommand("group", "inspect a catalog group");
  std::string g_name;
  int g_n = -1;
  bool g_quot = false;
  std::string g_out;
  sg->add_option("--name", g_name)->required();
  sg->add_option("--n", g_n);
  sg->add_flag("--quotient-center", g_quot);
  sg->add_option("--out", g_out);

  auto* sc = app.add_subcommand("scan", "accessibility scans");
  std::string sc_groups, sc_labels, sc_out;
  bool sc_table3 = false, sc_fig2 = false;
  sc->add_option("--groups", sc_groups);
  sc->add_option("--labels", sc_labels, "semicolon-separated Dynkin labels, e.g. '1,1;3,0'");
  sc->add_flag("--table3", sc_table3);
  sc->add_flag("--fig2", sc_fig2);
  sc->add_option("--out", sc_out);

  auto* sq = app.add_subcommand("sequence", "synthesize a pulse sequence");
  std::string q_group, q_generators, q_orient, q_weyl, q_kind = "eulerian",
                                                       q_out = "sequence.json";
  int q_n = -1;
  bool q_quot = false, q_noquot = false;
  std::optional<uint64_t> q_seed;
  double q_tau = 0.0;
  long q_budget = 10'000'000;
  sq->add_option("--group", q_group)->required();
  sq->add_option("--n", q_n);
  sq->add_flag("--quotient-center", q_quot);
  sq->add_flag("--no-quotient", q_noquot, "keep the full group even when it contains the center");
  sq->add_option("--generators", q_generators, "comma-separated generator names, e.g. V,X");
  sq->add_option("--orient", q_orient, "none|diag-X|teddy|c5z|king|pulse-P|pulse-Pprime");
  sq->add_option("--weyl", q_weyl, "e|12|13|23|123|132");
  sq->add_option("--kind", q_kind, "eulerian|hamiltonian");
  sq->add_option("--seed", q_seed);
  sq->add_option("--tau", q_tau);
  sq->add_option("--budget", q_budget);
  sq->add_option("--out", q_out);

  auto* sm = app.add_subcommand("simulate", "sweep sequences against noise models");
  SimulateArgs sim;
  std::optional<uint64_t> sim_seed;
  sm->add_option("--sequences", sim.sequence_files);
  sm->add_option("--preset", sim.preset, "fig5|fig9|fig10|fig11");
  sm->add_option("--model", sim.model, "random|nv");
  sm->add_option("--n", sim.n_sites);
  sm->add_option("--samples", sim.samples);
  sm->add_option("--workers", sim.workers, "sweep worker threads (0 = machine parallelism)");
  sm->add_option("--seed", sim_seed);
  sm->add_option("--tau-delta", sim.tau_delta);
  sm->add_option("--tau-gamma", sim.tau_gamma);
  sm->add_option("--out", sim.out);

  auto* qc = app.add_subcommand("qecc", "codespace scans and Knill-Laflamme checks");
  QeccArgs qa;
  qc->add_option("--group", qa.group);
  qc->add_option("--preset", qa.preset, "fig6|fig7|fig8 multiplicity scans");
  qc->add_option("--n", qa.n);
  qc->add_option("--orient", qa.orient);
  qc->add_option("--weyl", qa.weyl);
  qc->add_option("--spin", qa.spin);
  qc->add_option("--qutrits", qa.qutrits);
  qc->add_option("--spin-scan", qa.spin_scan, "lo..hi");
  qc->add_option("--qutrits-scan", qa.qutrits_scan, "lo..hi");
  qc->add_option("--character", qa.character);
  qc->add_option("--k", qa.k_expected);
  qc->add_option("--errors", qa.errors,
                 "spin-linear|dephasing|rwa-dipolar|qutrit-single|qutrit-dephasing");
  qc->add_option("--mode", qa.mode, "detect|correct");
  qc->add_option("--refine-by", qa.refine_by);
  qc->add_option("--refine-orient", qa.refine_orient);
  qc->add_option("--out", qa.out);

  auto* vf = app.add_subcommand("verify", "run the verification suites");
  std::string v_suite = "all";
  int v_samples = 100;
  std::optional<uint64_t> v_seed;
  vf->add_option("--suite", v_suite, "all|lie|groups|sequences|qecc");
  vf->add_option("--samples", v_samples);
  vf->add_option("--seed", v_seed);

  CLI11_PARSE(app, argc, argv);

  try {
    apply_config(app, config_file);
    if (*sg) return cmd_group(g_name, g_n, g_quot, g_out);
    if (*sc) return cmd_scan(split(sc_groups, ','), sc_labels, sc_table3, sc_fig2, sc_out);
    if (*sq)
      return cmd_sequence(q_group, q_n, q_quot, q_noquot, q_generators, q_orient, q_weyl,
                          q_kind, resolve_seed(q_seed), q_tau, q_budget, q_out);
    if (*sm) {
      sim.seed = resolve_seed(sim_seed);
      return cmd_simulate(sim);
    }
    if (*qc) return cmd_qecc(qa);
    if (*vf) return cmd_verify(v_suite, v_samples, resolve_seed(v_seed));
  } catch (const UnknownGroup& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDimensionMismatch;
  } catch (const RankMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRankMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return 0;
}
