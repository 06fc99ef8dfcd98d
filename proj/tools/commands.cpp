#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "config.hpp"
#include "parityns/parityns.hpp"

namespace cli {

using namespace parityns;
namespace fs = std::filesystem;

namespace {

constexpr const char* kSchema = "parity-ns/1";

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Hash of the dump and its sidecar.
std::string hash_field_file(const std::string& path) {
  std::uint64_t h = fnv1a(read_bytes(path));
  h = fnv1a(read_bytes(path + ".json"), h);
  return "fnv1a64:" + hex64(h);
}

std::string hash_json(const json& j) { return "fnv1a64:" + hex64(fnv1a(j.dump())); }

json envelope(const std::string& command, const json& config, const std::string& input_hash) {
  return {{"schema", kSchema}, {"command", command}, {"config", config}, {"input_hash", input_hash}};
}

void emit(const json& report, const std::string& out) {
  const std::string text = report.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

json label_json(const std::optional<TypeTuple>& t) { return t ? json(to_string(*t)) : json(nullptr); }

json component_labels(const std::array<std::optional<SymLabel>, 3>& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back(l ? json(to_string(*l)) : json(nullptr));
  return out;
}

json finite(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

Parity parse_beta(const std::string& s) {
  try {
    return parse_parity(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create " + dir + ": " + ec.message());
}

int verdict(bool ok) { return ok ? kOk : kVerificationFailed; }

std::string quote_csv(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

int run_enumerate(const EnumerateArgs& a) {
  const bool complex = a.mode == "complex";
  const Census& census = complex ? census_complex() : census_real();
  const OracleResult oracle = dedupe_oracle(complex);

  const std::map<std::string, std::size_t> expected_new =
      complex ? std::map<std::string, std::size_t>{{"C0", 64},  {"Ci", 168}, {"Cii", 168}, {"Ciii", 189},
                                                   {"Civ", 378}, {"Cv", 8},   {"Cvi", 8},   {"Cvii", 1}}
              : std::map<std::string, std::size_t>{{"R1", 8}, {"R2", 21}, {"R3", 1}};
  const std::size_t expected_total = complex ? 984 : 30;

  bool breakdown_ok = true;
  json by_case = json::object();
  for (const auto& [id, count] : census.by_case) {
    const std::string name = to_string(id);
    by_case[name] = {{"raw", count.raw}, {"new", count.fresh}, {"overlap", count.overlap}};
    auto it = expected_new.find(name);
    if (it == expected_new.end() || it->second != count.fresh) breakdown_ok = false;
  }
  const bool oracle_agrees = oracle.distinct == census.tuples && oracle.total == census.total;
  const bool verified = census.total == expected_total && breakdown_ok && oracle_agrees;

  if (a.format == "csv") {
    std::ostringstream os;
    os << "kind,witness\n";
    for (const auto& t : census.tuples) os << quote_csv(to_string(t)) << ',' << quote_csv(to_string(census.witness.at(t))) << '\n';
    os << "# case,raw,new,overlap\n";
    for (const auto& [id, count] : census.by_case)
      os << "# " << to_string(id) << ',' << count.raw << ',' << count.fresh << ',' << count.overlap << '\n';
    os << "# total," << census.total << '\n';
    os << "# oracle_multiset," << oracle.multiset_size << '\n';
    os << "# oracle_distinct," << oracle.distinct.size() << '\n';
    os << "# verified," << (verified ? "true" : "false") << '\n';
    if (a.out.empty()) {
      std::cout << os.str();
    } else {
      std::ofstream f(a.out, std::ios::binary);
      if (!f) throw UsageError("cannot write " + a.out);
      f << os.str();
    }
    return verdict(verified);
  }

  const json config = {{"mode", a.mode}};
  json report = envelope("enumerate", config, hash_json(config));
  json kinds = json::array();
  for (const auto& t : census.tuples) kinds.push_back({{"kind", to_string(t)}, {"witness", to_string(census.witness.at(t))}});
  report["kinds"] = std::move(kinds);
  report["summary"] = {{"byCase", by_case},
                       {"total", census.total},
                       {"oracle", {{"multiset_size", oracle.multiset_size},
                                   {"distinct", oracle.distinct.size()},
                                   {"agrees", oracle_agrees}}}};
  report["verified"] = verified;
  emit(report, a.out);
  return verdict(verified);
}

int run_decompose(const DecomposeArgs& a) {
  if (!(a.div_tol > 0.0)) throw UsageError("--div-tol must be positive");
  const Parity beta = parse_beta(a.beta);
  const VectorField u = read_field(a.in);
  const auto parts = decompose_matched(u, beta, a.div_tol);
  ensure_dir(a.out_dir);

  VectorField sum(u.c[0].n());
  const double unorm = l2_norm(u);
  json part_reports = json::array();
  bool labels_ok = true;
  double max_div = 0.0;
  for (unsigned m = 0; m < 8; ++m) {
    const Parity alpha = Parity::from_mask(m);
    const VectorField& p = parts[m];
    sum += p;
    const std::string file = "part_" + to_string(alpha) + ".bin";
    write_field((fs::path(a.out_dir) / file).string(), p);

    const TypeTuple expected = matched_part_tuple(alpha, beta);
    const auto measured = measure_tuple(p);
    const bool ok = measured && tuple_consistent(*measured, expected);
    labels_ok = labels_ok && ok;
    const double div = unorm > 0.0 ? l2_norm(divergence(p)) / unorm : 0.0;
    max_div = std::max(max_div, div);
    part_reports.push_back({{"alpha", to_string(alpha)},
                            {"file", file},
                            {"expected", to_string(expected)},
                            {"measured", label_json(measured)},
                            {"labels_match", ok},
                            {"norm_rel", unorm > 0.0 ? l2_norm(p) / unorm : 0.0},
                            {"divergence_rel", div}});
  }
  bool pairs_ok = true;
  for (unsigned i = 0; i < 8; ++i)
    for (unsigned j = 0; j < 8; ++j)
      pairs_ok = pairs_ok && matched_check(matched_part_tuple(Parity::from_mask(i), beta),
                                           matched_part_tuple(Parity::from_mask(j), beta));
  const double recon = unorm > 0.0 ? l2_norm(sum - u) / unorm : 0.0;

  const json config = {{"beta", a.beta}, {"div_tol", a.div_tol}};
  json report = envelope("decompose", config, hash_field_file(a.in));
  report["parts"] = std::move(part_reports);
  report["reconstruction_rel"] = recon;
  report["max_divergence_rel"] = max_div;
  report["pairs_matched"] = pairs_ok;
  const bool verified = recon <= 1e-13 && max_div <= 1e-11 && labels_ok && pairs_ok;
  report["verified"] = verified;
  emit(report, (fs::path(a.out_dir) / "report.json").string());
  return verdict(verified);
}

int run_solve(const SolveArgs& a) {
  SolverConfig cfg;
  if (!a.config.empty()) cfg = solver_config_from_json(load_json_file(a.config));
  const VectorField u0 = read_field(a.in);
  if (u0.c[0].n() != cfg.n) {
    std::cerr << "note: grid size taken from input (" << u0.c[0].n() << ")\n";
    cfg.n = u0.c[0].n();
  }
  const PicardResult res = picard_solve(u0, cfg);
  ensure_dir(a.out_dir);

  const auto& traj = res.trajectory;
  json times = json::array(), energies = json::array(), divs = json::array(), labels = json::array(),
       files = json::array();
  for (std::size_t k = 0; k < traj.states().size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof name, "state_%04zu.bin", k);
    write_field((fs::path(a.out_dir) / name).string(), traj.states()[k]);
    const StateDiagnostics d =
        k < traj.diagnostics().size() ? traj.diagnostics()[k] : diagnose(traj.states()[k], cfg.parity_tol);
    times.push_back(traj.times()[k]);
    energies.push_back(d.energy);
    divs.push_back(d.divergence);
    labels.push_back(component_labels(d.labels));
    files.push_back(name);
  }
  json history = json::array();
  for (const auto& r : res.history)
    history.push_back({{"iter", r.iter},
                       {"diff", finite(r.diff)},
                       {"ratio", r.ratio ? finite(*r.ratio) : json(nullptr)},
                       {"max_divergence", r.max_divergence},
                       {"labels_end", label_json(r.labels_end)}});

  json report = envelope("solve", to_json(cfg), hash_field_file(a.in));
  report["times"] = std::move(times);
  report["files"] = std::move(files);
  report["energies"] = std::move(energies);
  report["divergence_rel"] = std::move(divs);
  report["labels"] = std::move(labels);
  report["initial_kind"] = label_json(measure_tuple(u0, cfg.parity_tol));
  report["history"] = std::move(history);
  report["converged"] = res.converged;
  report["verified"] = res.converged;
  emit(report, (fs::path(a.out_dir) / "report.json").string());
  return verdict(res.converged);
}

int run_rigidity(const RigidityArgs& a) {
  RigidityConfig cfg;
  if (!a.config.empty()) cfg = rigidity_config_from_json(load_json_file(a.config));
  if (a.n > 0) cfg.n = a.n;
  if (a.seeds > 0) {
    cfg.seeds.clear();
    for (int i = 1; i <= a.seeds; ++i) cfg.seeds.push_back(static_cast<std::uint64_t>(i));
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bool complex = a.mode == "complex";
  const RigidityReport rep = complex ? rigidity_scan_complex(cfg) : rigidity_scan_real(cfg);

  std::set<TypeTuple> expected;
  if (complex) {
    for (Parity beta : all_parities()) expected.insert(solenoidal_tuple(Parity{}, beta));
  } else {
    expected.insert(solenoidal_tuple(Parity{}));
  }
  const std::set<TypeTuple> got(rep.preserved_by_type.begin(), rep.preserved_by_type.end());
  bool consistent = true;

  json per_kind = json::array();
  for (const auto& k : rep.per_kind) {
    json measured = json::array(), norms = json::array();
    for (const auto& m : k.measured) measured.push_back(label_json(m));
    for (double v : k.b_norm_rel) norms.push_back(finite(v));
    consistent = consistent && k.numeric_consistent;
    per_kind.push_back({{"kind", to_string(k.kind)},
                        {"b_label", label_json(k.b_label)},
                        {"type_preserved", k.type_preserved},
                        {"b_norm_rel", norms},
                        {"measured", measured},
                        {"beltrami_escape", k.beltrami_escape},
                        {"preserved", k.preserved},
                        {"numeric_consistent", k.numeric_consistent},
                        {"error", k.error.empty() ? json(nullptr) : json(k.error)}});
  }
  auto list = [](const std::vector<TypeTuple>& v) {
    json out = json::array();
    for (const auto& t : v) out.push_back(to_string(t));
    return out;
  };
  json exp = json::array();
  for (const auto& t : expected) exp.push_back(to_string(t));

  json config = to_json(cfg);
  config["mode"] = a.mode;
  json report = envelope("rigidity", config, hash_json(config));
  report["per_kind"] = std::move(per_kind);
  report["preserved_by_type"] = list(rep.preserved_by_type);
  report["beltrami_escapes"] = list(rep.beltrami_escapes);
  report["preserved_kinds"] = list(rep.preserved_kinds);
  report["expected_preserved"] = std::move(exp);
  report["numeric_consistent"] = consistent;
  const bool verified = got == expected;
  report["verified"] = verified;
  emit(report, a.out);
  return verdict(verified);
}

int run_beltrami(const BeltramiArgs& a) {
  require_grid_size(a.n);
  const BeltramiProfile profile;
  const VectorField u = beltrami_field(profile, a.n);
  const double tol = 1e-8;
  json residuals = json::array();
  bool ok = true;
  for (double t : {0.0, a.t / 2, a.t}) {
    const double r = beltrami_residual(u, t);
    ok = ok && r <= tol;
    residuals.push_back({{"t", t}, {"residual", r}});
  }
  const auto measured = measure_tuple(u);
  const bool kind_ok = measured && tuple_consistent(*measured, beltrami_kind());
  const double div = relative_divergence(u);

  json modes = json::array();
  for (const auto& [p, q] : profile.modes) modes.push_back({p, q});
  const json config = {{"n", a.n}, {"t", a.t}, {"tol", tol}, {"modes", modes}, {"coeffs", profile.coeffs},
                       {"amplitude", profile.amplitude}};
  json report = envelope("beltrami", config, hash_json(config));
  report["residuals"] = std::move(residuals);
  report["divergence_rel"] = div;
  report["kind"] = to_string(beltrami_kind());
  report["measured"] = label_json(measured);
  const bool verified = ok && kind_ok && div <= 1e-12;
  report["verified"] = verified;
  emit(report, a.out);
  return verdict(verified);
}

int run_example41(const Example41Args& a) {
  require_grid_size(a.n);
  const Example41 ex = example41_pair(a.n, a.seed);
  const auto lu = measure_tuple(ex.u);
  const auto lv = measure_tuple(ex.v);
  const double du = relative_divergence(ex.u);
  const double dv = relative_divergence(ex.v);
  const VectorField c = C_op(ex.u, ex.v);
  json c_labels = json::array();
  int unlabelled = 0;
  for (int l = 0; l < 3; ++l) {
    const auto m = measure_parity(c.c[static_cast<std::size_t>(l)]);
    if (!m.label) ++unlabelled;
    c_labels.push_back(m.label ? json(to_string(*m.label)) : json(nullptr));
  }
  const bool type_matched = lu && lv && matched_check(*lu, *lv);

  const json config = {{"n", a.n}, {"seed", a.seed}};
  json report = envelope("example41", config, hash_json(config));
  report["u_labels"] = label_json(lu);
  report["v_labels"] = label_json(lv);
  report["u_divergence_rel"] = du;
  report["v_divergence_rel"] = dv;
  report["type_matched"] = type_matched;
  report["c_labels"] = std::move(c_labels);
  report["c_unlabelled_components"] = unlabelled;
  const bool verified = lu && lv && du <= 1e-12 && dv <= 1e-12 && unlabelled >= 1;
  report["verified"] = verified;
  emit(report, a.out);
  return verdict(verified);
}

int run_halfspace(const HalfspaceArgs& a) {
  SolverConfig cfg;
  if (!a.config.empty()) cfg = solver_config_from_json(load_json_file(a.config));
  const auto kind = parse_extension(a.extend);
  if (!kind) throw UsageError("unknown extension " + a.extend);
  const RawField raw = read_raw(a.in);
  if (!raw.half) throw UsageError(a.in + " is not half-domain data");
  const HalfField h = from_raw(raw);
  if (h.n != cfg.n) {
    std::cerr << "note: grid size taken from input (" << h.n << ")\n";
    cfg.n = h.n;
  }
  const HalfspaceReport rep = halfspace_run(h, *kind, cfg, a.split_tol);

  json steps = json::array();
  for (std::size_t k = 0; k < rep.times.size(); ++k)
    steps.push_back({{"t", rep.times[k]},
                     {"lower", rep.splits[k].lower},
                     {"upper", rep.splits[k].upper},
                     {"planes", rep.splits[k].planes},
                     {"imbalance", finite(rep.imbalance[k])},
                     {"labels", label_json(rep.labels[k])}});
  json history = json::array();
  for (const auto& r : rep.history)
    history.push_back({{"iter", r.iter}, {"diff", finite(r.diff)}, {"ratio", r.ratio ? finite(*r.ratio) : json(nullptr)}});

  bool verified = false;
  switch (*kind) {
    case ExtensionKind::symmetric:
      verified = rep.split_equal && rep.labels_preserved && rep.converged;
      break;
    case ExtensionKind::zero:
      verified = rep.outside_energy_first > 0.0;
      break;
    case ExtensionKind::antisymmetric:
      verified = rep.converged;
      break;
  }

  json config = to_json(cfg);
  config["extend"] = to_string(*kind);
  config["split_tol"] = a.split_tol;
  json report = envelope("halfspace", config, hash_field_file(a.in));
  report["steps"] = std::move(steps);
  report["initial_kind"] = label_json(rep.initial_kind);
  report["b_label"] = label_json(rep.b_label);
  report["max_imbalance"] = finite(rep.max_imbalance);
  report["outside_energy_first"] = rep.outside_energy_first;
  report["split_equal"] = rep.split_equal;
  report["labels_preserved"] = rep.labels_preserved;
  report["omsy"] = rep.omsy;
  report["history"] = std::move(history);
  report["converged"] = rep.converged;
  report["verified"] = verified;
  emit(report, a.out);
  return verdict(verified);
}

int run_selftest() {
  bool ok = true;
  for (const auto& c : run_symtype_selftest()) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
    if (!c.passed) std::cout << ": " << c.detail;
    std::cout << "\n";
    ok = ok && c.passed;
  }
  return verdict(ok);
}

int run_generate(const GenerateArgs& a) {
  require_grid_size(a.n);
  VectorField u;
  if (a.beltrami) {
    BeltramiProfile p;
    p.amplitude = a.amplitude;
    u = beltrami_field(p, a.n);
  } else {
    TypeTuple kind;
    try {
      kind = parse_tuple(a.kind);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    u = random_symmetric_solenoidal(kind, a.n, a.seed);
    u *= a.amplitude;
  }
  if (a.half) {
    write_raw(a.out, to_raw(restrict_half(u)));
  } else {
    write_field(a.out, u);
  }
  return kOk;
}

}  // namespace cli
