// borel-rees: command-line front end for the library.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "borel_rees/catalog.hpp"
#include "borel_rees/io.hpp"
#include "borel_rees/orders.hpp"
#include "borel_rees/verifier.hpp"

#ifndef BOREL_REES_DATA_DIR
#define BOREL_REES_DATA_DIR "data/reference"
#endif

namespace fs = std::filesystem;
using namespace borel_rees;

namespace {

struct Config {
  std::string spec_path;
  std::string budget = "2";
  std::string order;
  std::string basis;
  std::string out_dir;
  std::string multidegree;
  std::size_t jobs = 1;
  int a = 0, b = 0, c = 0;
  int x_degree = 6;
  bool oracle = false;
  bool dot = false;
  bool quiet = false;
  bool check = false;
  std::string example;
  std::string data_dir = BOREL_REES_DATA_DIR;
};

std::vector<Exponent> parse_budget(const std::string& text, std::size_t r) {
  std::vector<Exponent> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<Exponent>(v));
    } catch (const std::exception&) {
      throw Error("budget entry '" + item + "' is not a non-negative integer");
    }
  }
  if (out.size() == 1 && r > 1) out.assign(r, out[0]);
  if (out.size() != r) {
    throw Error("budget has " + std::to_string(out.size()) + " entries but there are " +
                std::to_string(r) + " ideals");
  }
  return out;
}

void write_output(const Config& cfg, const std::string& file, const std::string& text) {
  if (cfg.out_dir.empty()) {
    std::cout << text;
    return;
  }
  fs::create_directories(cfg.out_dir);
  std::ofstream out(fs::path(cfg.out_dir) / file);
  if (!out) throw Error("cannot write " + (fs::path(cfg.out_dir) / file).string());
  out << text;
}

// g1|g2|g3|ht from --basis, else from --order, else by the number of ideals.
std::string basis_name(const Config& cfg, const Presentation& pres) {
  if (!cfg.basis.empty()) return cfg.basis;
  if (cfg.order == "rlex") return "g1";
  if (cfg.order == "mrlex") return "g2";
  if (cfg.order == "ht") return "ht";
  if (!cfg.order.empty()) throw Error("unknown order '" + cfg.order + "'");
  return pres.num_ideals() == 2 ? "ht" : "g1";
}

std::function<void(std::size_t, std::size_t)> progress(const Config& cfg) {
  if (cfg.quiet) return {};
  return [](std::size_t done, std::size_t total) {
    std::cerr << "progress: " << done << "/" << total << " multidegrees\n";
  };
}

int cmd_closure(const Config& cfg) {
  Presentation pres = make_presentation(load_spec(cfg.spec_path));
  std::ostringstream os;
  for (std::size_t i = 0; i < pres.num_ideals(); ++i) {
    const auto& I = pres.ideal(i);
    std::optional<TwoQuadricView> view;
    if (I.degree() == 2) {
      try {
        view = region_partition(I);
      } catch (const Error&) {
      }
    }
    os << "ideal " << i + 1 << ": degree " << I.degree() << ", "
       << I.borel_generators().size() << " Borel generators, "
       << I.minimal_generators().size() << " minimal generators";
    if (view) os << ", |B_M| = " << view->B_M.size() << ", |B_N| = " << view->B_N.size();
    os << "\n";
    for (const Monomial& g : I.minimal_generators()) {
      os << "  " << format_exponents(g) << "  " << format_monomial(g);
      if (view) os << "  " << (view->region_of(g) == Region::M ? "B_M" : "B_N");
      os << "\n";
    }
  }
  write_output(cfg, "closure.txt", os.str());
  return 0;
}

int cmd_fiber_graph(const Config& cfg) {
  Presentation pres = make_presentation(load_spec(cfg.spec_path));
  if (cfg.multidegree.empty()) throw Error("--multidegree is required");
  MultiDegree mu = parse_multidegree(cfg.multidegree, pres.ambient_vars(), pres.num_ideals());
  auto basis = build_named_basis(pres, basis_name(cfg, pres));
  auto fiber = pres.enumerate_fiber(mu);
  if (fiber.empty()) {
    std::cout << "fiber at " << format_multidegree(mu) << ": empty\n";
    return 0;
  }
  ReductionSystem<PresMonomial> sys(basis);
  auto g = build_fiber_graph(fiber, sys);
  GraphAnalysis a = analyze(g);
  auto fmt = [&](const PresMonomial& u) { return format_pres(pres, u); };
  std::cout << "fiber at " << format_multidegree(mu) << ": " << g.vertices.size()
            << " vertices, " << g.edges.size() << " edges\n";
  std::cout << "sinks: " << a.sinks.size() << "\n";
  for (std::size_t s : a.sinks) std::cout << "  " << fmt(g.vertices[s]) << "\n";
  std::cout << "cycles: " << (a.has_cycle ? "yes" : "no") << "\n";
  std::string dot = to_dot(g, basis, fmt, format_multidegree(mu));
  if (!cfg.out_dir.empty()) {
    write_output(cfg, "fiber.dot", dot);
  } else if (cfg.dot) {
    std::cout << dot;
  }
  return a.unique_sink_acyclic() ? 0 : 2;
}

int cmd_verify(const Config& cfg) {
  Presentation pres = make_presentation(load_spec(cfg.spec_path));
  auto budget = parse_budget(cfg.budget, pres.num_ideals());
  std::string name = basis_name(cfg, pres);
  VerificationReport report;
  if (name == "fiber-type") {
    // Fiber part: G1 for one ideal, the head-and-tail basis for two.
    auto fiber_gb = build_named_basis(pres, pres.num_ideals() == 2 ? "ht" : "g1");
    auto basis = build_fiber_type_basis(pres, fiber_gb);
    auto span = rees_kernel_span(pres, cfg.x_degree, budget);
    auto res = check_membership(span.pairs, ReductionSystem<MixedMonomial>(basis),
                                default_step_limit(span.largest_fiber));
    report.basis = name;
    report.basis_size = basis.size();
    report.t_budget = budget;
    report.largest_fiber = span.largest_fiber;
    report.oracle_binomials_checked = res.checked;
    for (const auto& f : res.failures) {
      report.oracle_failures.push_back(format_mixed(pres, f.lhs) + " - " + format_mixed(pres, f.rhs) +
                                       ": " + f.reason);
    }
  } else {
    auto basis = build_named_basis(pres, name);
    VerifyOptions opts;
    opts.jobs = cfg.jobs;
    opts.progress = progress(cfg);
    report = verify_gb(pres, basis, budget, opts);
    report.basis = name;
    if (cfg.oracle) {
      auto span = toric_kernel_span(pres, budget);
      auto res = check_membership(span.pairs, ReductionSystem<PresMonomial>(basis),
                                  default_step_limit(span.largest_fiber));
      report.oracle_binomials_checked = res.checked;
      for (const auto& f : res.failures) {
        report.oracle_failures.push_back(format_pres(pres, f.lhs) + " - " +
                                         format_pres(pres, f.rhs) + ": " + f.reason);
      }
    }
  }
  write_output(cfg, "report.json", report_to_json(pres, report).dump(2) + "\n");
  return report.certified() ? 0 : 2;
}

int cmd_kernel_oracle(const Config& cfg) {
  Config c = cfg;
  c.oracle = true;
  Presentation pres = make_presentation(load_spec(cfg.spec_path));
  if (basis_name(cfg, pres) == "fiber-type") return cmd_verify(c);
  auto budget = parse_budget(cfg.budget, pres.num_ideals());
  auto basis = build_named_basis(pres, basis_name(cfg, pres));
  auto span = toric_kernel_span(pres, budget);
  auto res = check_membership(span.pairs, ReductionSystem<PresMonomial>(basis),
                              default_step_limit(span.largest_fiber));
  Json j = spec_to_json(pres);
  j["basis"] = basis_name(cfg, pres);
  j["t_budget"] = budget;
  j["kernel_pairs"] = res.checked;
  Json failures = Json::array();
  for (const auto& f : res.failures) {
    failures.push_back({{"lhs", format_pres(pres, f.lhs)},
                        {"rhs", format_pres(pres, f.rhs)},
                        {"reason", f.reason}});
  }
  j["failures"] = failures;
  j["verdict"] = res.passed() ? "certified-up-to-bound" : "refuted";
  write_output(cfg, "kernel.json", j.dump(2) + "\n");
  return res.passed() ? 0 : 2;
}

int cmd_detect(const Config& cfg) {
  Presentation pres = make_presentation(load_spec(cfg.spec_path));
  auto budget = parse_budget(cfg.budget, pres.num_ideals());
  auto witnesses = detect_obstructions(pres, budget, cfg.jobs);
  Json j = spec_to_json(pres);
  j["t_budget"] = budget;
  Json ws = Json::array();
  for (const auto& w : witnesses) ws.push_back(witness_to_json(pres, w));
  j["obstructions"] = ws;
  write_output(cfg, "obstructions.json", j.dump(2) + "\n");
  return witnesses.empty() ? 0 : 2;
}

int cmd_koszul(const Config& cfg) {
  Presentation pres = make_presentation(load_spec(cfg.spec_path));
  auto budget = parse_budget(cfg.budget, pres.num_ideals());
  KoszulReport rep = koszul_report(pres, budget, cfg.jobs);
  write_output(cfg, "koszul.json", koszul_to_json(pres, rep).dump(2) + "\n");
  return exit_code(rep.verdict);
}

int cmd_paper_examples(const Config& cfg) {
  if (cfg.example.empty() || cfg.example == "list") {
    for (const auto& n : catalog::names()) std::cout << n << "\n";
    return 0;
  }
  catalog::Params p{cfg.a, cfg.b, cfg.c};
  std::vector<std::string> targets;
  if (cfg.example == "all") {
    targets = catalog::names();
  } else {
    targets = {cfg.example};
  }
  int status = 0;
  for (const auto& name : targets) {
    std::string text = catalog::run(name, p, cfg.jobs);
    std::cout << text;
    fs::path expected = fs::path(cfg.data_dir) / (catalog::expectation_stem(name, p) + ".expected");
    std::ifstream in(expected);
    if (!in) {
      std::cerr << name << ": no stored expectation at " << expected.string() << "\n";
      if (cfg.check) status = 1;
      continue;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    if (buf.str() == text) {
      std::cerr << name << ": matches " << expected.string() << "\n";
    } else {
      std::cerr << name << ": DIFFERS from " << expected.string() << "\n";
      status = 1;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly stable ideals, multi-Rees presentations and fiber-graph verification"};
  app.require_subcommand(1);
  Config cfg;

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--spec", cfg.spec_path, "ideal spec JSON file")->required()->check(CLI::ExistingFile);
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget, "t-degree budget, e.g. 2,1");
    sub->add_option("--order", cfg.order, "rlex|mrlex|ht");
    sub->add_option("--basis", cfg.basis, "g1|g2|g3|ht|fiber-type");
    sub->add_option("--out", cfg.out_dir, "write output files to this directory");
    sub->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)");
    sub->add_flag("--quiet", cfg.quiet, "no progress on standard error");
  };

  auto* closure = app.add_subcommand("closure", "minimal generators and region partition");
  add_spec(closure);
  closure->add_option("--out", cfg.out_dir);

  auto* fiber = app.add_subcommand("fiber-graph", "fiber graph at one multidegree");
  add_spec(fiber);
  add_common(fiber);
  fiber->add_option("--multidegree", cfg.multidegree, "e.g. x2*x3*x4^2*x5*x6*t1^2*t2")->required();
  fiber->add_flag("--dot", cfg.dot, "print the DOT graph to standard output");

  auto* verify = app.add_subcommand("verify", "bounded Groebner basis check over all fibers");
  add_spec(verify);
  add_common(verify);
  verify->add_flag("--oracle", cfg.oracle, "also reduce every toric kernel pair");
  verify->add_option("--x-degree", cfg.x_degree, "x-degree bound for --basis fiber-type");

  auto* oracle = app.add_subcommand("kernel-oracle", "brute-force kernel membership check");
  add_spec(oracle);
  add_common(oracle);
  oracle->add_option("--x-degree", cfg.x_degree, "x-degree bound for --basis fiber-type");

  auto* detect = app.add_subcommand("detect-cubics", "fibers disconnected under quadratic moves");
  add_spec(detect);
  add_common(detect);

  auto* koszul = app.add_subcommand("koszul-report", "gate, obstructions and bounded GB evidence");
  add_spec(koszul);
  add_common(koszul);

  auto* examples = app.add_subcommand("paper-examples", "run a named reference example");
  examples->add_option("name", cfg.example, "example name, 'all' or 'list'");
  examples->add_option("--a", cfg.a);
  examples->add_option("--b", cfg.b);
  examples->add_option("--c", cfg.c);
  examples->add_option("--jobs", cfg.jobs);
  examples->add_option("--data-dir", cfg.data_dir, "directory of stored expectations");
  examples->add_flag("--check", cfg.check, "fail when an expectation file is missing");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*closure) return cmd_closure(cfg);
    if (*fiber) return cmd_fiber_graph(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*oracle) return cmd_kernel_oracle(cfg);
    if (*detect) return cmd_detect(cfg);
    if (*koszul) return cmd_koszul(cfg);
    if (*examples) return cmd_paper_examples(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
