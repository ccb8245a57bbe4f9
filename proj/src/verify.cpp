#include "sudec/verify.hpp"

#include "sudec/catalog.hpp"
#include "sudec/cayley.hpp"
#include "sudec/ddsim.hpp"
#include "sudec/orientation.hpp"
#include "sudec/qecc.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace sudec {

namespace {

DynkinLabel su3(int p, int q) { return DynkinLabel(3, {p, q}); }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

void expect(CriterionResult& r, bool ok, const std::string& what) {
  if (!ok) {
    r.pass = false;
    r.notes.push_back("FAILED: " + what);
  }
}

PulseSequence quotient_eulerian(const std::string& name, const std::vector<Mat>& gens,
                                uint64_t seed) {
  auto g = catalog_group(name);
  auto q = std::make_shared<FiniteGroup>(quotient_by_center(g));
  std::vector<int> gi;
  for (const auto& gen : gens) gi.push_back(q->find(gen));
  auto graph = build_cayley(q, gi);
  auto seq = emit_sequence(eulerian_circuit(graph, 0, seed), graph, 0.0);
  seq.group_name = name + "/Z3";
  return seq;
}

}  // namespace

CriterionResult check_table3_grid() {
  CriterionResult r{1, "accessibility grid over the exceptional and dihedral-like subgroups",
                    true, {}};
  struct Row {
    const char* name;
    int n;
    int order;
    bool center;
    const char* pattern;  // Y = inaccessible for (1,1),(3,0),(2,2),(4,1),(3,3),(6,0),(5,2),(4,4)
  };
  const Row rows[] = {
      {"Delta3n2", 2, 12, false, "Ynnnnnnn"},   {"Delta3n2", 3, 27, true, "Ynnnnnnn"},
      {"Delta3n2", 4, 48, false, "YnnYnnnn"},   {"Delta6n2", 1, 6, false, "nnnnnnnn"},
      {"Delta6n2", 2, 24, false, "YYnnnnnn"},   {"Delta6n2", 3, 54, true, "YYnnnnnn"},
      {"Sigma60", 0, 60, false, "YYnYnnnn"},    {"Sigma168", 0, 168, false, "YYYYnnYn"},
      {"Sigma36x3", 0, 108, true, "YYnnnnnn"},  {"Sigma72x3", 0, 216, true, "YYYnnnYn"},
      {"Sigma216x3", 0, 648, true, "YYYYnYYn"}, {"Sigma360x3", 0, 1080, true, "YYYYYnYn"},
  };
  const std::vector<DynkinLabel> labels = {su3(1, 1), su3(3, 0), su3(2, 2), su3(4, 1),
                                           su3(3, 3), su3(6, 0), su3(5, 2), su3(4, 4)};
  for (const auto& row : rows) {
    FiniteGroup g = row.n > 0 ? catalog_group(row.name, row.n) : catalog_group(row.name);
    expect(r, g.order() == row.order, std::string(row.name) + " order");
    expect(r, contains_center(g) == row.center, std::string(row.name) + " center flag");
    auto scan = accessibility_scan(g, labels);
    for (size_t c = 0; c < labels.size(); ++c) {
      bool inaccessible = !scan[c].accessible;
      expect(r, inaccessible == (row.pattern[c] == 'Y'),
             std::string(row.name) + " column " + labels[c].str());
    }
  }
  r.notes.push_back("12 groups x 8 irrep columns, exact integer multiplicities");
  return r;
}

CriterionResult check_su2_ladder() {
  CriterionResult r{2, "SU(2) multiplicity ladders with brute-force cross-check", true, {}};
  FiniteGroup d2 = catalog_group("D2");
  FiniteGroup t = catalog_group("T");
  FiniteGroup ico = catalog_group("I");

  // D2 ladder a1(L) = (2L+1+3(-1)^L)/4: zero exactly at L = 1.
  for (int L = 0; L <= 20; ++L) {
    int got = trivial_multiplicity(d2, DynkinLabel(2, {2 * L}));
    int closed = (2 * L + 1 + 3 * (L % 2 == 0 ? 1 : -1)) / 4;
    expect(r, got == closed, "D2 ladder at L=" + std::to_string(L));
    expect(r, (got == 0) == (L == 1), "D2 inaccessible exactly at L=1, L=" + std::to_string(L));
  }
  // T: zero at {1,2,5}, first 2-dimensional sector at L = 6.
  for (int L = 0; L <= 8; ++L) {
    int got = trivial_multiplicity(t, DynkinLabel(2, {2 * L}));
    bool zero = (L == 1 || L == 2 || L == 5);
    expect(r, (got == 0) == zero, "T zero set at L=" + std::to_string(L));
    if (L == 6) expect(r, got == 2, "T multiplicity 2 at L=6");
  }
  // I: first nontrivial invariant at L = 6.
  for (int L = 1; L <= 6; ++L) {
    int got = trivial_multiplicity(ico, DynkinLabel(2, {2 * L}));
    expect(r, (got == 0) == (L <= 5), "I first invariant at L=6, L=" + std::to_string(L));
  }

  // Brute force for L <= 8: trace of the explicitly symmetrized spin-L
  // projector must match the character sum as an exact integer.
  for (const auto* namep : {"D2", "T", "I"}) {
    FiniteGroup g = catalog_group(namep);
    for (int L = 0; L <= 8; ++L) {
      Mat proj = Mat::Zero(2 * L + 1, 2 * L + 1);
      for (const auto& e : g.elements()) proj += sym_power(su2_lift(e), 2 * L);
      proj /= static_cast<double>(g.order());
      int rank = static_cast<int>(std::lround(proj.trace().real()));
      expect(r, std::abs(proj.trace().real() - rank) < 1e-8,
             std::string(namep) + " projector trace integrality");
      expect(r, rank == trivial_multiplicity(g, DynkinLabel(2, {2 * L})),
             std::string(namep) + " brute force at L=" + std::to_string(L));
    }
  }
  r.notes.push_back("ladders D2 (L<=20), T, I; explicit projector ranks for L<=8");
  return r;
}

CriterionResult check_tensor_decompositions() {
  CriterionResult r{3, "tensor-decomposition oracle", true, {}};
  auto k2 = adjoint_power_labels(3, 2);
  std::set<DynkinLabel> e2{su3(0, 0), su3(1, 1), su3(0, 3), su3(3, 0), su3(2, 2)};
  expect(r, k2 == e2, "adjoint^2 label set");
  auto k3 = adjoint_power_labels(3, 3);
  auto e3 = e2;
  for (auto l : {su3(4, 1), su3(1, 4), su3(3, 3)}) e3.insert(l);
  expect(r, k3 == e3, "adjoint^3 label set");
  auto k4 = adjoint_power_labels(3, 4);
  auto e4 = e3;
  for (auto l : {su3(6, 0), su3(0, 6), su3(5, 2), su3(2, 5), su3(4, 4)}) e4.insert(l);
  expect(r, k4 == e4, "adjoint^4 label set");

  DynkinLabel adj4(4, {1, 0, 1});
  auto dec = tensor_decompose(adj4, adj4);
  expect(r, dec.multiplicity(DynkinLabel(4, {0, 0, 0})) == 1, "SU(4) trivial");
  expect(r, dec.multiplicity(adj4) == 2, "SU(4) adjoint x2");
  expect(r, dec.multiplicity(DynkinLabel(4, {0, 2, 0})) == 1, "SU(4) (0,2,0)");
  expect(r, dec.multiplicity(DynkinLabel(4, {2, 1, 0})) == 1, "SU(4) (2,1,0)");
  expect(r, dec.multiplicity(DynkinLabel(4, {0, 1, 2})) == 1, "SU(4) (0,1,2)");
  expect(r, dec.multiplicity(DynkinLabel(4, {2, 0, 2})) == 1, "SU(4) (2,0,2)");
  expect(r, dec.total_dimension() == 225, "SU(4) dimension checksum");

  for (int d : {5, 6, 7})
    expect(r, verify_qudit_formula(d), "qudit closed form d=" + std::to_string(d));
  r.notes.push_back("adjoint powers K=2..4, SU(4) spot check, closed form d=5..7");
  return r;
}

CriterionResult check_operator_decoupling() {
  CriterionResult r{4, "operator-level decoupling of anisotropic two-qutrit couplings", true, {}};
  FiniteGroup q72 = quotient_by_center(catalog_group("Sigma72x3"));
  FiniteGroup q27 = quotient_by_center(catalog_group("Delta27"));
  auto pis72 = represent_all(q72, tensor_power_rep(2));
  auto pis27 = represent_all(q27, tensor_power_rep(2));

  int nonzero27 = 0;
  double worst72 = 0;
  for (int k = 0; k < 50; ++k) {
    auto rh = build_random_hamiltonian(2, 0.0, 1.0, /*anisotropic=*/true, 4000 + k);
    Mat op = rh.matrix / rh.matrix.norm();
    worst72 = std::max(worst72, symmetrize(op, pis72).norm());
    if (symmetrize(op, pis27).norm() > 1e-6) nonzero27++;
  }
  expect(r, worst72 < 1e-10, "Sigma72x3 kills all 50 samples (worst " + fmt(worst72) + ")");
  expect(r, nonzero27 >= 45, "Delta27 leaves a residual on " + std::to_string(nonzero27) + "/50");
  r.notes.push_back("worst Sigma72x3 residual " + fmt(worst72) + ", Delta27 nonzero on " +
                    std::to_string(nonzero27) + "/50");
  return r;
}

CriterionResult check_sequence_scaling(const AcceptanceOptions& opt) {
  CriterionResult r{5, "sequence-simulation scaling exponents (3 qutrits)", true, {}};
  std::vector<LabeledSequence> seqs;
  seqs.push_back({"Delta27/Z3", quotient_eulerian("Delta27", {mat_C(), mat_E()}, 11)});
  seqs.push_back({"Sigma36x3/Z3", quotient_eulerian("Sigma36x3", {mat_V(), mat_C()}, 12)});
  seqs.push_back({"Sigma72x3/Z3", quotient_eulerian("Sigma72x3", {mat_V(), mat_X()}, 13)});

  std::vector<double> taus;
  for (int k = 0; k < 5; ++k) taus.push_back(std::pow(10.0, -3.0 + 0.25 * k));

  auto slopes_on = [&](bool delta_axis) {
    SweepGrid grid;
    grid.n_hamiltonians = opt.sweep_samples;
    grid.seed = opt.seed;
    if (delta_axis) {
      grid.tau_delta_values = taus;
      grid.tau_gamma_values = {0.0};
    } else {
      grid.tau_delta_values = {0.0};
      grid.tau_gamma_values = taus;
    }
    auto rows = sweep(grid, seqs, ModelKind::random_pair, 3);
    std::map<std::string, double> slopes;
    for (const char* label : {"Delta27/Z3", "Sigma36x3/Z3", "Sigma72x3/Z3", "NoDD"}) {
      std::vector<double> ds;
      for (const auto& row : rows)
        if (row.sequence_label == label) ds.push_back(row.mean_distance);
      slopes[label] = slope_estimate(taus, ds);
    }
    return slopes;
  };

  auto sd = slopes_on(true);
  for (const char* label : {"Delta27/Z3", "Sigma36x3/Z3", "Sigma72x3/Z3"})
    expect(r, std::abs(sd[label] - 2.0) <= 0.15,
           std::string("delta-axis slope 2 for ") + label + " (got " + fmt(sd[label]) + ")");
  expect(r, std::abs(sd["NoDD"] - 1.0) <= 0.15,
         "delta-axis slope 1 for NoDD (got " + fmt(sd["NoDD"]) + ")");

  auto sg = slopes_on(false);
  expect(r, std::abs(sg["Sigma72x3/Z3"] - 2.0) <= 0.15,
         "gamma-axis slope 2 for Sigma72x3 (got " + fmt(sg["Sigma72x3/Z3"]) + ")");
  for (const char* label : {"Delta27/Z3", "Sigma36x3/Z3", "NoDD"})
    expect(r, std::abs(sg[label] - 2.0) > 0.15,
           std::string("gamma-axis slope stays first order for ") + label + " (got " +
               fmt(sg[label]) + ")");

  std::ostringstream os;
  os << "delta-axis slopes:";
  for (auto& [k, v] : sd) os << " " << k << "=" << fmt(v);
  os << " | gamma-axis:";
  for (auto& [k, v] : sg) os << " " << k << "=" << fmt(v);
  r.notes.push_back(os.str());
  return r;
}

CriterionResult check_sequence_symmetrizer_equivalence() {
  CriterionResult r{6, "Eulerian circuits, symmetrizer equivalence, phase identities", true, {}};
  struct Entry {
    const char* name;
    std::vector<Mat> gens;
  };
  std::vector<Entry> entries = {{"Delta27", {mat_C(), mat_E()}},
                                {"Sigma36x3", {mat_V(), mat_C()}},
                                {"Sigma72x3", {mat_V(), mat_X()}}};
  ModelRng rng(99);
  for (const auto& entry : entries) {
    auto g = catalog_group(entry.name);
    auto q = std::make_shared<FiniteGroup>(quotient_by_center(g));
    std::vector<int> gi;
    for (const auto& gen : entry.gens) gi.push_back(q->find(gen));
    auto graph = build_cayley(q, gi);
    auto circuit = eulerian_circuit(graph, 0, 17);
    expect(r, circuit.size() == graph.edges.size(),
           std::string(entry.name) + " circuit covers |Gamma||G| edges");
    std::vector<int> count(graph.edges.size(), 0);
    for (int e : circuit) count[static_cast<size_t>(e)]++;
    for (int c : count) expect(r, c == 1, std::string(entry.name) + " each edge exactly once");

    auto seq = emit_sequence(circuit, graph, 0.0);
    for (int rep = 0; rep < 10; ++rep) {
      Mat h(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h(i, j) = Complex(rng.gaussian(), rng.gaussian());
      h = (h + Mat(h.adjoint())) / 2.0;
      double diff = (first_order_average(seq, h, defining_rep()) -
                     symmetrize(h, *q, defining_rep()))
                        .norm();
      expect(r, diff < 1e-10,
             std::string(entry.name) + " average equals symmetrizer (" + fmt(diff) + ")");
    }
  }
  Mat xv = mat_X() * mat_V();
  Mat x3v = mat_X() * mat_X() * mat_X() * mat_V();
  Mat xv4 = xv * xv * xv * xv;
  Mat x3v4 = x3v * x3v * x3v * x3v;
  Complex w = std::exp(Complex(0, 2 * M_PI / 3));
  expect(r, (xv4 - w * identity(3)).norm() < 1e-10, "(XV)^4 = omega 1");
  expect(r, (x3v4 - identity(3)).norm() < 1e-10, "(X^3 V)^4 = 1");
  r.notes.push_back("3 Eulerian sequences x 10 Hermitian inputs at 1e-10");
  return r;
}

CriterionResult check_factorizations() {
  CriterionResult r{7, "group factorizations and quotient structures", true, {}};
  FiniteGroup s72 = catalog_group("Sigma72x3");
  FiniteGroup s36 = catalog_group("Sigma36x3");
  expect(r, verify_factorization(s72, s36, {identity(3), mat_X()}),
         "Sigma72x3 = Sigma36x3 {1, X}");

  auto emb = delta24_embedding();
  FiniteGroup d24 = generate_group(emb.generators, GroupMode::exact, 30);
  expect(r, d24.order() == 24, "embedded octahedral order 24");
  std::vector<size_t> sizes;
  for (const auto& c : d24.conjugacy_classes()) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  expect(r, sizes == std::vector<size_t>{1, 3, 6, 6, 8}, "octahedral class sizes");
  FiniteGroup s168 = catalog_group("Sigma168");
  std::vector<Mat> ypowers;
  Mat yk = identity(3);
  for (int k = 0; k < 7; ++k) {
    ypowers.push_back(yk);
    yk = Mat(yk * mat_Y());
  }
  expect(r, verify_factorization(s168, d24, ypowers), "Sigma168 = Delta24 <Y>");

  FiniteGroup d54 = catalog_group("Delta54");
  auto k4 = quotient_group(s72, d54);
  expect(r, k4.order() == 4, "Sigma72x3 / Delta54 has order 4");
  int self_inv = 0;
  for (int c = 1; c < 4; ++c)
    if (k4.coset_inverse(c) == c) self_inv++;
  expect(r, self_inv == 3, "Klein structure: all non-identity cosets self-inverse");

  FiniteGroup d27 = catalog_group("Delta27");
  auto q8 = quotient_group(s72, d27);
  expect(r, q8.order() == 8, "Sigma72x3 / Delta27 has order 8");
  int order2 = 0;
  for (int c = 1; c < 8; ++c)
    if (q8.coset_order(c) == 2) order2++;
  expect(r, order2 == 1, "quaternion structure: single element of order 2");
  r.notes.push_back("both factorizations exact; K4 and Q8 structure tests");
  return r;
}

CriterionResult check_pulse_simplification() {
  CriterionResult r{8, "pulse-frame constraints for the double-driving implementation", true, {}};
  Mat u = diagonalizer_of_X();
  Mat hv = Mat(u.adjoint() * pulse_generator_V() * u);
  Mat hx = Mat(u.adjoint() * principal_log_generator(mat_X()) * u);
  for (const auto& [name, p] :
       std::vector<std::pair<const char*, Mat>>{{"P", pulse_frame_P()},
                                                {"P'", pulse_frame_Pprime()}}) {
    Mat hv_t = Mat(p * hv * p.adjoint());
    Mat hx_t = Mat(p * hx * p.adjoint());
    expect(r, std::abs(hv_t(0, 2)) < 1e-8, std::string(name) + " zeroes [1,3] of H_V");
    expect(r, std::abs(hx_t(0, 2)) < 1e-8, std::string(name) + " zeroes [1,3] of H_X");
  }
  ModelRng rng(5);
  for (int k = 0; k < 20; ++k) {
    DoubleDrivingPulse p{std::abs(rng.gaussian()), std::abs(rng.gaussian()),
                         rng.gaussian(),           rng.gaussian(),
                         rng.gaussian(),           rng.gaussian()};
    Mat h = double_driving_hamiltonian(p);
    expect(r, is_hermitian(h, 1e-12), "double-driving Hermitian");
    expect(r, std::abs(h.trace()) < 1e-12, "double-driving traceless");
    expect(r, forbidden_entry_check(h), "double-driving forbidden entry");
  }
  r.notes.push_back("closed-form frame parameters verified at 1e-8");
  return r;
}

CriterionResult check_qecc_suite() {
  CriterionResult r{9, "codespace dimensions, KL verdicts, logical gates", true, {}};

  FiniteGroup t = catalog_group("T");
  auto tcode = build_codespace(t, one_dim_characters(t)[0], AmbientSpace::spin(6), 2);
  expect(r, kl_check(tcode, error_set(ErrorKind::spin_linear, tcode.ambient), KlMode::correct)
                .pass,
         "T @ j=6 corrects linear spin errors");

  FiniteGroup d2t = catalog_group("D2teddy");
  auto dcode = build_codespace(d2t, one_dim_characters(d2t)[0], AmbientSpace::spin(2), 2);
  expect(r, kl_check(dcode, error_set(ErrorKind::dephasing, dcode.ambient), KlMode::correct).pass,
         "tilted D2 @ j=2 corrects dephasing");

  FiniteGroup d2 = catalog_group("D2");
  auto neg = build_codespace(d2, one_dim_characters(d2)[0], AmbientSpace::spin(2), 2);
  expect(r,
         !kl_check(neg, error_set(ErrorKind::spin_linear, neg.ambient), KlMode::correct).pass,
         "negative control: z-aligned D2 @ j=2 fails the linear error set");

  FiniteGroup oc5 = catalog_group("Oc5z");
  auto ocode = build_codespace(oc5, one_dim_characters(oc5)[0], AmbientSpace::spin(12), 2);
  expect(r,
         kl_check(ocode, error_set(ErrorKind::dipolar_disorder_rwa, ocode.ambient),
                  KlMode::correct)
             .pass,
         "oriented O @ j=12 corrects disorder, depolarization and z-axis dipolar products");

  auto emb = delta24_embedding();
  FiniteGroup d24w = generate_group(emb.generators, GroupMode::exact, 30);
  auto d24code =
      build_codespace(d24w, one_dim_characters(d24w)[0], AmbientSpace::symmetric(3, 4), 2);
  expect(r,
         kl_check(d24code, error_set(ErrorKind::qutrit_dephasing, d24code.ambient),
                  KlMode::correct)
             .pass,
         "embedded Delta24 @ N=4 corrects qutrit dephasing");

  auto orient = weyl_orientations()[0];
  FiniteGroup s36u =
      generate_group(conjugate_generators(builtin_generators("Sigma36x3"), orient));
  auto s36code =
      build_codespace(s36u, one_dim_characters(s36u)[0], AmbientSpace::symmetric(3, 6), 2);
  expect(r,
         kl_check(s36code, error_set(ErrorKind::qutrit_dephasing, s36code.ambient),
                  KlMode::correct)
             .pass,
         "oriented Sigma36x3 @ N=6 corrects qutrit dephasing");

  FiniteGroup s72 = catalog_group("Sigma72x3");
  auto s72code =
      build_codespace(s72, one_dim_characters(s72)[0], AmbientSpace::symmetric(3, 12), 3);
  expect(r, s72code.k() == 3, "Sigma72x3 trivial sector at N=12 is three-dimensional");
  expect(r,
         kl_check(s72code, error_set(ErrorKind::qutrit_single, s72code.ambient), KlMode::correct)
             .pass,
         "Sigma72x3 @ N=12 corrects arbitrary single-qutrit errors");

  // Logical gates on refined bases.
  FiniteGroup o = catalog_group("O");
  auto refined_t = refine_basis(tcode, o);
  Mat rot4 = ambient_action(so3_rotation({0, 0, 1}, M_PI / 2), tcode.ambient);
  auto pauli_z = logical_gate_check(refined_t, rot4);
  Mat diag_pm(2, 2);
  diag_pm << 1, 0, 0, -1;
  expect(r, pauli_z.has_value() && equal_up_to_phase(*pauli_z, diag_pm, 1e-8),
         "octahedral quarter turn acts as diag(1,-1) on the refined T code");

  FiniteGroup tt = catalog_group("Tteddy");
  auto refined_d = refine_basis(dcode, tt);
  Mat rot3 = ambient_action(so3_rotation({0, 0, 1}, 2 * M_PI / 3), dcode.ambient);
  auto phase_gate = logical_gate_check(refined_d, rot3);
  bool phase_ok = false;
  if (phase_gate) {
    const Mat& g = *phase_gate;
    phase_ok = std::abs(g(0, 1)) < 1e-8 && std::abs(g(1, 0)) < 1e-8 &&
               std::abs(std::abs(std::arg(g(1, 1) / g(0, 0))) - 2 * M_PI / 3) < 1e-8;
  }
  expect(r, phase_ok, "z rotation by 2pi/3 imparts the 2pi/3 relative phase on the D2 code");

  r.notes.push_back("six codes, one negative control, two logical gates");
  return r;
}

CriterionResult check_mixed_representation() {
  CriterionResult r{10, "mixed-representation engineering for spin pairs", true, {}};
  const int two_j = 2;  // spin-1 sites
  auto ops = spin_ops(two_j);
  Mat sp = ops[0] + Complex(0, 1) * ops[1];
  Mat sm = ops[0] - Complex(0, 1) * ops[1];
  Mat sz = ops[2];
  Mat op = Complex(0, 1) * (kron(sm, sm) - kron(sp, sp));

  FiniteGroup d2 = catalog_group("D2");
  RepAssignment dual;
  dual.n_sites = 2;
  dual.dual = {0, 1};
  // The group elements are cartesian rotations; the sites carry the spin-1
  // unitaries, so lift before applying the assignment.
  std::vector<Mat> reps_mixed, reps;
  for (const auto& e : d2.elements()) {
    Mat u = sym_power(su2_lift(e), two_j);
    reps_mixed.push_back(apply_rep_assignment(u, dual));
    reps.push_back(kron(u, u));
  }
  Mat mixed_avg = symmetrize(op, reps_mixed);
  expect(r, mixed_avg.norm() < 1e-10, "dual-assignment D2 average annihilates i(S-S- - S+S+)");

  // Standard-representation average equals the projection of the operator
  // onto the D2-invariant part of its rank-2 bilinear sector.
  Mat std_avg = symmetrize(op, reps);
  Mat exchange = build_su2_hamiltonian(Su2Kind::exchange, two_j, 2, 0, 1);
  std::vector<Mat> rank2 = {kron(sp, sp),
                            Mat(kron(sp, sz) + kron(sz, sp)),
                            Mat(exchange - 3.0 * kron(sz, sz)),
                            Mat(kron(sm, sz) + kron(sz, sm)),
                            kron(sm, sm)};
  std::vector<Mat> basis;
  for (const auto& b : rank2) {
    Mat inv = symmetrize(b, reps);
    if (inv.norm() > 1e-10) basis.push_back(inv);
  }
  Mat proj = Mat::Zero(op.rows(), op.cols());
  if (!basis.empty()) {
    Eigen::MatrixXcd gram(basis.size(), basis.size());
    Eigen::VectorXcd rhs(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) {
      for (size_t j = 0; j < basis.size(); ++j)
        gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            (basis[i].adjoint() * basis[j]).trace();
      rhs(static_cast<Eigen::Index>(i)) = (basis[i].adjoint() * op).trace();
    }
    Eigen::VectorXcd coef = gram.fullPivLu().solve(rhs);
    for (size_t i = 0; i < basis.size(); ++i)
      proj += coef(static_cast<Eigen::Index>(i)) * basis[i];
  }
  expect(r, (std_avg - proj).norm() < 1e-10,
         "standard-rep average equals the invariant projection of the rank-2 sector");

  // Exchange under a 2pi/3-rotated local representation loses its overlap
  // with the mixed-rep isotropic bilinear.
  Mat q = sym_power(su2_rotation({0, 0, 1}, 2 * M_PI / 3), two_j);
  Mat one = Mat::Identity(two_j + 1, two_j + 1);
  Mat mixed_iso = kron(one, q).adjoint() * exchange * kron(one, q);
  double overlap = std::abs((mixed_iso.adjoint() * exchange).trace()) / exchange.squaredNorm();
  expect(r, overlap < 1e-10, "rotated exchange has no isotropic component (" + fmt(overlap) + ")");

  r.notes.push_back("dual and rotated local representations");
  return r;
}

std::vector<CriterionResult> run_acceptance(const std::string& suite,
                                            const AcceptanceOptions& opt) {
  std::vector<CriterionResult> out;
  auto want = [&](const char* name) { return suite == "all" || suite == name; };
  if (want("groups")) out.push_back(check_table3_grid());
  if (want("groups")) out.push_back(check_su2_ladder());
  if (want("lie")) out.push_back(check_tensor_decompositions());
  if (want("sequences")) out.push_back(check_operator_decoupling());
  if (want("sequences")) out.push_back(check_sequence_scaling(opt));
  if (want("sequences")) out.push_back(check_sequence_symmetrizer_equivalence());
  if (want("groups")) out.push_back(check_factorizations());
  if (want("sequences")) out.push_back(check_pulse_simplification());
  if (want("qecc")) out.push_back(check_qecc_suite());
  if (want("qecc")) out.push_back(check_mixed_representation());
  std::sort(out.begin(), out.end(),
            [](const CriterionResult& a, const CriterionResult& b) { return a.number < b.number; });
  return out;
}

}  // namespace sudec
