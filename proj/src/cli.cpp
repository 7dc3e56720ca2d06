#include "hyperham/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hyperham/builder.hpp"
#include "hyperham/oracle.hpp"
#include "hyperham/sweep.hpp"
#include "hyperham/traps.hpp"

namespace hyperham {

namespace {

/// Thrown inside a command to stop with a given exit code.
struct Exit {
  int code;
  std::string message;
};

FaultSet load_faults(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Exit{kExitUsage, "cannot open " + path};
  try {
    return parse_fault_file(in);
  } catch (const ParseError& e) {
    throw Exit{kExitUsage, path + ": " + e.what()};
  } catch (const Error& e) {
    throw Exit{kExitUsage, path + ": " + e.what()};
  }
}

Vertex parse_label(const std::string& text, int n, const char* flag) {
  try {
    return parse_binary(text, n);
  } catch (const Error& e) {
    throw Exit{kExitUsage, std::string(flag) + ": " + e.what()};
  }
}

/// Writes to --out when given, else to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Exit{kExitUsage, "cannot write " + path};
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void write_dot(const std::string& path, const FaultSet& faults, const Route* route) {
  if (path.empty()) return;
  std::ofstream dot(path);
  if (!dot) throw Exit{kExitUsage, "cannot write " + path};
  const int n = faults.n();
  dot << "graph Q" << n << " {\n";
  for (const Edge& e : faults.edges()) {
    dot << "  \"" << to_binary(e.low, n) << "\" -- \"" << to_binary(e.high(), n) << "\" [color=red];\n";
  }
  if (route) {
    const auto& vs = route->vertices;
    auto line = [&](Vertex a, Vertex b) {
      dot << "  \"" << to_binary(a, n) << "\" -- \"" << to_binary(b, n) << "\" [color=blue];\n";
    };
    for (std::size_t i = 1; i < vs.size(); ++i) line(vs[i - 1], vs[i]);
    if (route->closed && vs.size() > 2) line(vs.back(), vs.front());
  }
  dot << "}\n";
}

std::optional<Route> oracle_route(const FaultSet& faults, const SearchConstraints& c) {
  try {
    return oracle_find(faults, c);
  } catch (const SearchTimeout& e) {
    throw Exit{kExitBudget, e.what()};
  }
}

struct Common {
  std::string faults_path;
  std::string out_path;
  std::string dot_path;
  bool trace = false;
};

void emit_route(const Common& opt, const FaultSet& faults, const Route& route, const BuildTrace* trace,
                std::ostream& out, std::ostream& err) {
  Sink sink(opt.out_path, out);
  write_certificate(sink.stream(), faults, route);
  if (opt.trace && trace) err << trace->format(faults.n());
  write_dot(opt.dot_path, faults, &route);
}

int cmd_classify(const Common& opt, std::ostream& out) {
  const FaultSet faults = load_faults(opt.faults_path);
  if (faults.n() < 3) throw Exit{kExitUsage, "classify needs n >= 3"};
  const Diagnosis d = diagnose(faults);
  Sink sink(opt.out_path, out);
  sink.stream() << format_diagnosis(d);
  write_dot(opt.dot_path, faults, nullptr);
  if (!d.hamiltonian.yes) return kExitImpossible;
  if (!d.laceable.yes) return kExitNotLaceable;
  return kExitOk;
}

int cmd_build_cycle(const Common& opt, std::ostream& out, std::ostream& err) {
  const FaultSet faults = load_faults(opt.faults_path);
  BuildTrace trace;
  Route route;
  if (faults.n() < 3 && !faults.empty()) {
    SearchConstraints c;
    c.closed = true;
    auto found = oracle_route(faults, c);
    if (!found) throw Exit{kExitImpossible, "no Hamiltonian cycle"};
    route = std::move(*found);
  } else {
    try {
      route = build_hc(faults, &trace);
    } catch (const NotHamiltonian& e) {
      throw Exit{kExitImpossible, e.what()};
    }
  }
  emit_route(opt, faults, route, &trace, out, err);
  return kExitOk;
}

int cmd_build_path(const Common& opt, const std::string& from, const std::string& to, bool one_fault,
                   std::ostream& out, std::ostream& err) {
  const FaultSet faults = load_faults(opt.faults_path);
  const int n = faults.n();
  const Vertex a = parse_label(from, n, "--from");
  const Vertex b = parse_label(to, n, "--to");
  if (a == b) throw Exit{kExitUsage, "--from and --to must differ"};
  if (parity(a) == parity(b)) throw Exit{kExitImpossible, "impossible: endpoints have the same parity"};

  BuildTrace trace;
  std::optional<Route> route;
  auto by_oracle = [&]() {
    SearchConstraints c;
    c.endpoints = {{a, b}};
    c.required_faulty_traversals = one_fault ? 1 : 0;
    route = oracle_route(faults, c);
    if (!route) throw Exit{kExitImpossible, "impossible: exhaustive search found no path"};
  };
  const bool trap = n >= 3 && !trap_free(faults);

  if (n <= 3) {
    by_oracle();
  } else if (!one_fault) {
    const auto feas = hp_feasibility(faults, a, b);
    if (feas.status == Feasibility::Impossible) throw Exit{kExitImpossible, "impossible: " + feas.reason};
    if (feas.status == Feasibility::Constructible) {
      route = build_hp(faults, a, b, &trace);
    } else if (n <= kMaxOracleDim) {
      by_oracle();
    } else {
      throw Exit{kExitUndetermined, "undetermined: " + feas.reason};
    }
  } else {
    if (faults.empty()) throw Exit{kExitImpossible, "impossible: no faulty edge to traverse"};
    if (!trap && one_fault_precondition(faults, a, b)) {
      route = build_hp_one_fault(faults, a, b, &trace);
    } else if (n <= kMaxOracleDim) {
      by_oracle();
    } else {
      throw Exit{kExitUndetermined, "undetermined: one-fault path outside the constructive cases"};
    }
  }
  emit_route(opt, faults, *route, &trace, out, err);
  return kExitOk;
}

struct VerifyFlags {
  std::string cert_path;
  bool closed = false;
  std::string from, to, exclude;
  std::optional<int> max_faulty, faulty_exactly;
};

int cmd_verify(const Common& opt, const VerifyFlags& v, std::ostream& out) {
  const FaultSet faults = load_faults(opt.faults_path);
  std::ifstream in(v.cert_path);
  if (!in) throw Exit{kExitUsage, "cannot open " + v.cert_path};
  Certificate cert;
  try {
    cert = parse_certificate(in);
  } catch (const Error& e) {
    throw Exit{kExitUsage, v.cert_path + ": " + e.what()};
  }
  const int n = faults.n();
  RouteConstraints c;
  c.closed = v.closed || cert.route.closed;
  if (!v.from.empty() || !v.to.empty()) {
    if (v.from.empty() || v.to.empty()) throw Exit{kExitUsage, "--from and --to go together"};
    c.endpoints = {{parse_label(v.from, n, "--from"), parse_label(v.to, n, "--to")}};
  }
  if (!v.exclude.empty()) c.excluded_vertex = parse_label(v.exclude, n, "--exclude");
  c.max_faulty = v.max_faulty;
  c.faulty_exactly = v.faulty_exactly;
  RouteVerdict verdict = verify_route(faults, cert.route, c);
  if (cert.declared_faulty_traversals != verdict.faulty_traversals) {
    verdict.ok = false;
    verdict.violations.push_back("header declares " + std::to_string(cert.declared_faulty_traversals) +
                                 " faulty traversals, route has " + std::to_string(verdict.faulty_traversals));
  }
  Sink sink(opt.out_path, out);
  if (verdict.ok) {
    sink.stream() << "pass faulty_traversals=" << verdict.faulty_traversals << '\n';
    return kExitOk;
  }
  sink.stream() << "fail\n";
  for (const auto& s : verdict.violations) sink.stream() << "violation: " << s << '\n';
  return kExitVerifyFailed;
}

struct SweepFlags {
  int n = 3;
  std::string mode = "exhaustive";
  std::uint64_t seed = 1;
  int jobs = 1;
  std::size_t samples = 10000;
  std::size_t oracle_checks = 200;
  std::size_t sample_pairs = 0;
  bool all_matchings = false;
  bool machine = false;
};

int cmd_sweep(const Common& opt, const SweepFlags& f, std::ostream& out) {
  SweepOptions o;
  o.n = f.n;
  o.mode = f.mode == "sampled" ? SweepMode::Sampled : SweepMode::Exhaustive;
  o.seed = f.seed;
  o.jobs = f.jobs;
  o.samples = f.samples;
  o.oracle_checks = f.oracle_checks;
  o.sample_pairs = f.sample_pairs;
  o.all_matchings = f.all_matchings;
  SweepReport r;
  try {
    r = run_sweep(o);
  } catch (const Error& e) {
    throw Exit{kExitUsage, e.what()};
  }
  Sink sink(opt.out_path, out);
  sink.stream() << (f.machine ? r.format_machine() : r.format());
  return r.counterexamples.empty() ? kExitOk : kExitVerifyFailed;
}

FaultConstraint parse_require(const std::string& s) {
  if (s == "none") return FaultConstraint::None;
  if (s == "no-trap") return FaultConstraint::NoTrap;
  if (s == "scdhw") return FaultConstraint::HasScdhw;
  return FaultConstraint::HasDtbce;
}

int cmd_gen(const Common& opt, int n, std::size_t size, const std::string& require, std::uint64_t seed,
            std::ostream& out) {
  FaultSet f(CubeDim(1));
  try {
    f = random_disjoint_faults(CubeDim(n), size, parse_require(require), seed);
  } catch (const ConstraintUnsatisfiable& e) {
    throw Exit{kExitImpossible, e.what()};
  } catch (const Error& e) {
    throw Exit{kExitUsage, e.what()};
  }
  Sink sink(opt.out_path, out);
  sink.stream() << format_fault_file(f);
  return kExitOk;
}

int cmd_bench(const Common& opt, int n, std::vector<std::size_t> sizes, int repeat, std::uint64_t seed,
              std::ostream& out) {
  const CubeDim dim(n);
  if (sizes.empty()) sizes = {0, std::size_t{1} << (n >= 4 ? n - 4 : 0), std::size_t{1} << (n - 2)};
  Sink sink(opt.out_path, out);
  for (std::size_t size : sizes) {
    FaultSet f = random_disjoint_faults(dim, size, FaultConstraint::NoTrap, seed);
    double best = 1e300, total = 0;
    for (int r = 0; r < repeat; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const Route route = build_hc(f);  // verified before it returns
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      best = std::min(best, ms);
      total += ms;
    }
    sink.stream() << "n=" << n << " faults=" << size << " repeat=" << repeat << " best_ms=" << best
                  << " mean_ms=" << total / repeat << " verified=yes\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamiltonian cycles and paths in hypercubes with disjoint faulty edges", "hyperham"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool with_faults) {
    if (with_faults) sub->add_option("faults", common.faults_path, "fault file")->required();
    sub->add_option("--out", common.out_path, "write output to a file");
  };

  auto* classify = app.add_subcommand("classify", "diagnose Hamiltonicity and laceability");
  add_common(classify, true);
  classify->add_option("--dot", common.dot_path, "write the faulty edges as a DOT graph");

  auto* cycle = app.add_subcommand("build-cycle", "build a fault-free Hamiltonian cycle");
  add_common(cycle, true);
  cycle->add_flag("--trace", common.trace, "print the recursion trace to stderr");
  cycle->add_option("--dot", common.dot_path, "write faults and route as a DOT graph");

  std::string from, to;
  bool one_fault = false;
  auto* path = app.add_subcommand("build-path", "build a Hamiltonian path between two vertices");
  add_common(path, true);
  path->add_option("--from", from, "start label")->required();
  path->add_option("--to", to, "end label")->required();
  path->add_flag("--one-fault", one_fault, "traverse exactly one faulty edge");
  path->add_flag("--trace", common.trace, "print the recursion trace to stderr");
  path->add_option("--dot", common.dot_path, "write faults and route as a DOT graph");

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "check a route certificate");
  add_common(verify, true);
  verify->add_option("certificate", vf.cert_path, "certificate file")->required();
  verify->add_flag("--closed", vf.closed, "require a cycle");
  verify->add_option("--from", vf.from, "required start label");
  verify->add_option("--to", vf.to, "required end label");
  verify->add_option("--exclude", vf.exclude, "vertex the route must skip");
  verify->add_option("--max-faulty", vf.max_faulty, "maximum faulty edges traversed")->check(CLI::NonNegativeNumber);
  verify->add_option("--faulty-exactly", vf.faulty_exactly, "exact faulty edges traversed")
      ->check(CLI::NonNegativeNumber);

  SweepFlags sf;
  auto* sweep = app.add_subcommand("sweep", "check the classification over many fault sets");
  add_common(sweep, false);
  sweep->add_option("--n", sf.n, "cube dimension")->required()->check(CLI::Range(1, kMaxSweepDim));
  sweep->add_option("--mode", sf.mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  sweep->add_option("--seed", sf.seed, "random seed");
  sweep->add_option("--jobs", sf.jobs, "worker threads")->check(CLI::Range(1, 1024));
  sweep->add_option("--samples", sf.samples, "sampled mode: number of fault sets");
  sweep->add_option("--oracle-checks", sf.oracle_checks, "sampled mode: samples cross-checked by search");
  sweep->add_option("--sample-pairs", sf.sample_pairs, "exhaustive mode: endpoint pairs per fault set (0 = all)");
  sweep->add_flag("--all-matchings", sf.all_matchings, "visit every matching, not one per orbit (n <= 3)");
  sweep->add_flag("--machine", sf.machine, "print class=<name> count=<k> lines");

  int gen_n = 0;
  std::size_t gen_size = 0;
  std::string require = "none";
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "generate a random fault file");
  add_common(gen, false);
  gen->add_option("--n", gen_n, "cube dimension")->required()->check(CLI::Range(1, kMaxDim));
  gen->add_option("--size", gen_size, "number of faulty edges")->required();
  gen->add_option("--require", require, "none, no-trap, scdhw or dtbce")
      ->check(CLI::IsMember({"none", "no-trap", "scdhw", "dtbce"}));
  gen->add_option("--seed", seed, "random seed");

  int bench_n = 0;
  std::vector<std::size_t> sizes;
  int repeat = 3;
  auto* bench = app.add_subcommand("bench", "time build-cycle on random trap-free fault sets");
  add_common(bench, false);
  bench->add_option("--n", bench_n, "cube dimension")->required()->check(CLI::Range(4, kMaxDim));
  bench->add_option("--sizes", sizes, "fault-set sizes")->delimiter(',');
  bench->add_option("--repeat", repeat, "runs per size")->check(CLI::Range(1, 1000));
  bench->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(common, out);
    if (*cycle) return cmd_build_cycle(common, out, err);
    if (*path) return cmd_build_path(common, from, to, one_fault, out, err);
    if (*verify) return cmd_verify(common, vf, out);
    if (*sweep) return cmd_sweep(common, sf, out);
    if (*gen) return cmd_gen(common, gen_n, gen_size, require, seed, out);
    if (*bench) return cmd_bench(common, bench_n, sizes, repeat, seed, out);
  } catch (const Exit& e) {
    err << (e.code == kExitUsage ? "error: " : "") << e.message << '\n';
    return e.code;
  } catch (const SearchTimeout& e) {
    err << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hyperham
