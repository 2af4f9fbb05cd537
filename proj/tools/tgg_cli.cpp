#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tgg/io.hpp"
#include "tgg/kernels.hpp"

using namespace tgg;
using nlohmann::json;

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitConfig = 2;
constexpr int kExitFailed = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint32_t q = 2;
  std::size_t e = 2;
  std::string gram_path;
  std::uint64_t seed = 1;
  std::uint64_t samples = 100;
  std::string format;
  std::string out;
  int jobs = 0;
};

// Validated instance: field, hyperplane and polarity for V = GF(q)^(2e+1).
struct Instance {
  FieldPtr field;
  std::size_t e;
  Subspace h;
  Polarity sigma;
};

Instance make_instance(const RunConfig& cfg, std::size_t min_e) {
  if (cfg.e < min_e) throw ConfigError("e must be >= " + std::to_string(min_e));
  FieldPtr field;
  try {
    field = Field::from_order(cfg.q);
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(std::string("--q: ") + ex.what());
  }
  auto h = Subspace::standard_hyperplane(field, 2 * cfg.e + 1);
  if (cfg.gram_path.empty()) return {field, cfg.e, h, Polarity(h)};
  std::ifstream in(cfg.gram_path);
  if (!in) throw ConfigError("cannot read gram file " + cfg.gram_path);
  try {
    return {field, cfg.e, h, Polarity(h, io::matrix_from_json(field, json::parse(in)))};
  } catch (const std::exception& ex) {
    throw ConfigError(std::string("--gram: ") + ex.what());
  }
}

json instance_json(const RunConfig& cfg) {
  json j{{"q", cfg.q}, {"e", cfg.e}};
  if (!cfg.gram_path.empty()) j["gram"] = cfg.gram_path;
  return j;
}

void emit(const RunConfig& cfg, const std::string& content) {
  if (cfg.out.empty()) {
    std::cout << content;
  } else {
    io::write_atomic(cfg.out, content);
  }
}

// ---- build ----

std::string format_graph(const Graph& g, const std::string& format) {
  if (format == "graph6") return io::to_graph6(g) + "\n";
  if (format == "dimacs-edges") return io::to_dimacs(g);
  if (format == "json") return io::graph_to_json(g).dump() + "\n";
  throw ConfigError("format " + format + " is not available for graphs");
}

std::string format_design(const Design& d, const std::string& format) {
  if (format == "json") return io::design_to_json(d).dump() + "\n";
  if (format == "incidence-csv") return io::incidence_csv(d);
  throw ConfigError("format " + format + " is not available for designs");
}

std::string graph_summary(const Graph& g) {
  const auto degree = g.regular_degree();
  return "vertices=" + std::to_string(g.vertex_count()) +
         " degree=" + (degree ? std::to_string(*degree) : std::string("irregular")) +
         " edges=" + std::to_string(g.edge_count());
}

std::string design_summary(const Design& d) {
  return "points=" + std::to_string(d.point_count()) + " blocks=" + std::to_string(d.block_count()) +
         " block_size=" + std::to_string(d.block(0).size());
}

int cmd_build(const std::string& kind, RunConfig cfg) {
  const bool graph = kind == "grassmann" || kind == "twisted";
  if (cfg.format.empty()) cfg.format = graph ? "graph6" : "json";
  const auto in = make_instance(cfg, kind == "twisted" || kind == "jt-design" ? 2 : 1);
  std::string content, summary;
  if (kind == "grassmann") {
    auto g = grassmann_graph(in.field, 2 * in.e + 1, in.e);
    content = format_graph(g, cfg.format);
    summary = graph_summary(g);
  } else if (kind == "twisted") {
    auto g = twisted_grassmann(in.field, in.e, in.h);
    content = format_graph(g, cfg.format);
    summary = graph_summary(g);
  } else {
    auto d = kind == "pg-design" ? pg_design(in.field, in.e) : jt_design(in.field, in.e, in.sigma);
    content = format_design(d, cfg.format);
    summary = design_summary(d);
  }
  emit(cfg, content);
  // keep stdout parseable when the artifact itself goes there
  (cfg.out.empty() ? std::cerr : std::cout) << summary << "\n";
  return 0;
}

// ---- verify ----

struct CheckResult {
  bool pass = false;
  json details;
};

std::vector<std::uint64_t> support(const std::map<std::size_t, std::uint64_t>& spectrum) {
  std::vector<std::uint64_t> out;
  for (auto [size, count] : spectrum) out.push_back(size);
  return out;
}

CheckResult check_thm1(const Instance& in, const RunConfig& cfg) {
  auto twisted = twisted_grassmann(in.field, in.e, in.h);
  auto jt = jt_design(in.field, in.e, in.sigma);
  auto threshold = point_count(in.e, in.field->order());
  auto cert = f_certificate(twisted, jt, in.sigma);
  const bool iso = check_isomorphism(twisted, block_graph(jt, threshold), cert);
  std::vector<Block> blocks;
  for (const auto& l : twisted.labels()) blocks.push_back(f_map(*l.subspace, in.sigma, *jt.points()));
  const std::uint64_t n = twisted.vertex_count();
  const bool exhaustive = n * (n - 1) / 2 <= 1'000'000;
  auto eq = exhaustive ? equivalence_all_pairs(twisted.labels(), blocks, in.e, in.field->order())
                       : equivalence_sampled(twisted.labels(), blocks, in.e, in.field->order(), 100000, cfg.seed);
  json witnesses = json::array();
  for (auto [a, b] : eq.witnesses) witnesses.push_back({a, b});
  return {iso && eq.violations == 0,
          {{"isomorphism", iso},
           {"pairs", eq.pairs},
           {"pair_mode", exhaustive ? "all" : "sampled"},
           {"violations", eq.violations},
           {"witnesses", witnesses}}};
}

CheckResult check_drg(const Instance& in, const RunConfig&) {
  const std::uint64_t q = in.field->order();
  auto expected = grassmann_intersection_array(2 * in.e + 1, in.e, q);
  auto result = intersection_array(twisted_grassmann(in.field, in.e, in.h));
  if (auto* bad = std::get_if<NotDRG>(&result)) return {false, {{"witness", io::not_drg_to_json(*bad)}}};
  const auto& a = std::get<IntersectionArray>(result);
  std::vector<std::uint64_t> flat(a.b);
  flat.insert(flat.end(), a.c.begin(), a.c.end());
  return {a == expected, {{"array", flat}, {"expected", io::intersection_array_to_json(expected)}}};
}

CheckResult check_design(const Instance& in, const RunConfig&) {
  const std::uint64_t q = in.field->order(), e = in.e;
  const DesignParameters expected{gaussian_binomial(2 * e + 1, 1, q), gaussian_binomial(2 * e + 1, e + 1, q),
                                  gaussian_binomial(2 * e, e, q), gaussian_binomial(e + 1, 1, q),
                                  gaussian_binomial(2 * e - 1, e - 1, q)};
  auto result = check_2design(jt_design(in.field, in.e, in.sigma));
  if (auto* bad = std::get_if<NotDesign>(&result)) return {false, {{"reason", bad->reason}}};
  const auto& p = std::get<DesignParameters>(result);
  return {p == expected, {{"parameters", io::parameters_to_json(p)}, {"expected", io::parameters_to_json(expected)}}};
}

CheckResult check_spectrum(const Instance& in, const RunConfig&) {
  auto jt = intersection_spectrum(jt_design(in.field, in.e, in.sigma));
  auto pg = intersection_spectrum(pg_design(in.field, in.e));
  json counts = json::object();
  for (auto [size, count] : jt) counts[std::to_string(size)] = count;
  return {support(jt) == support(pg), {{"support", support(jt)}, {"pg_support", support(pg)}, {"counts", counts}}};
}

CheckResult check_aut_sample(const Instance& in, const RunConfig& cfg) {
  auto twisted = twisted_grassmann(in.field, in.e, in.h);
  auto jt = jt_design(in.field, in.e, in.sigma);
  auto cert = f_certificate(twisted, jt, in.sigma);
  std::mt19937_64 rng(cfg.seed);
  std::uint64_t failures = 0;
  json witnesses = json::array();
  for (std::uint64_t s = 0; s < cfg.samples; ++s) {
    auto phi = random_stabilizer_element(in.field, in.e, rng);
    auto aut = is_design_automorphism(jt, lift(phi, in.sigma, *jt.points()));
    auto rel = check_lift_relation(jt, twisted, cert, phi, in.sigma);
    if (aut && rel) continue;
    ++failures;
    if (witnesses.size() < 5) {
      json w{{"map", io::semilinear_to_json(phi)}};
      if (aut.offending_block) w["block"] = *aut.offending_block;
      if (rel.vertex) w["vertex"] = *rel.vertex;
      witnesses.push_back(w);
    }
  }
  return {failures == 0, {{"samples", cfg.samples}, {"failures", failures}, {"witnesses", witnesses}}};
}

CheckResult check_aut_exhaustive(const Instance& in, const RunConfig&) {
  if (in.field->order() != 2 || in.e != 2) throw ConfigError("aut-exhaustive supports only --q 2 --e 2");
  auto jt = jt_design(in.field, in.e, in.sigma);
  auto report = exhaustive_lift_check(jt, in.sigma, [](std::uint64_t done, std::uint64_t total) {
    std::cerr << "\raut-exhaustive " << done << "/" << total << (done == total ? "\n" : "") << std::flush;
  });
  const auto order = stabilizer_order(2, 2, 1);
  return {report.failures == 0 && report.total == order && report.distinct == order,
          {{"total", report.total},
           {"automorphisms", report.automorphisms},
           {"distinct", report.distinct},
           {"identity_count", report.identity_count},
           {"stabilizer_order", order},
           {"failure_indices", report.failure_indices}}};
}

CheckResult check_prank(const Instance& in, const RunConfig&) {
  const auto p = in.field->characteristic();
  const auto jt = p_rank(jt_design(in.field, in.e, in.sigma), p);
  const auto pg = p_rank(pg_design(in.field, in.e), p);
  return {jt == pg, {{"p", p}, {"jt", jt}, {"pg", pg}}};
}

using CheckFn = CheckResult (*)(const Instance&, const RunConfig&);

const std::vector<std::pair<std::string, CheckFn>>& checks() {
  static const std::vector<std::pair<std::string, CheckFn>> table{
      {"thm1", check_thm1},         {"drg", check_drg},
      {"design", check_design},     {"spectrum", check_spectrum},
      {"aut-sample", check_aut_sample}, {"aut-exhaustive", check_aut_exhaustive},
      {"prank", check_prank}};
  return table;
}

json run_check(const std::string& name, CheckFn fn, const Instance& in, const RunConfig& cfg) {
  std::cerr << "running " << name << "\n";
  const auto start = std::chrono::steady_clock::now();
  auto result = fn(in, cfg);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {{"schema", 1},         {"check", name},          {"instance", instance_json(cfg)},
          {"seed", cfg.seed},    {"pass", result.pass},    {"details", result.details},
          {"elapsed", elapsed}};
}

int cmd_verify(const std::string& check, const RunConfig& cfg) {
  const auto in = make_instance(cfg, 2);
  json report;
  if (check == "all") {
    const auto start = std::chrono::steady_clock::now();
    json parts = json::array();
    bool pass = true;
    for (const auto& [name, fn] : checks()) {
      if (name == "aut-exhaustive" && (cfg.q != 2 || cfg.e != 2)) continue;
      parts.push_back(run_check(name, fn, in, cfg));
      pass = pass && parts.back()["pass"].get<bool>();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report = {{"schema", 1},      {"check", "all"}, {"instance", instance_json(cfg)}, {"seed", cfg.seed},
              {"pass", pass},     {"details", parts}, {"elapsed", elapsed}};
  } else {
    for (const auto& [name, fn] : checks())
      if (name == check) report = run_check(name, fn, in, cfg);
  }
  const auto text = report.dump(2) + "\n";
  if (!cfg.out.empty()) io::write_atomic(cfg.out, text);
  std::cout << text;
  return report["pass"].get<bool>() ? 0 : kExitFailed;
}

// ---- export ----

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int cmd_export(const std::string& input, const RunConfig& cfg) {
  if (cfg.format.empty()) throw ConfigError("--format is required for export");
  const auto text = read_file(input);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& ex) {
      throw ConfigError(input + ": " + ex.what());
    }
    if (j.contains("blocks")) {
      emit(cfg, format_design(io::design_from_json(j), cfg.format));
    } else if (j.contains("edges")) {
      emit(cfg, format_graph(io::graph_from_json(j), cfg.format));
    } else {
      throw ConfigError(input + ": neither a graph nor a design");
    }
    return 0;
  }
  Graph g = [&] {
    try {
      return io::from_graph6(text);
    } catch (const std::invalid_argument& ex) {
      throw ConfigError(input + ": " + ex.what());
    }
  }();
  emit(cfg, format_graph(g, cfg.format));
  return 0;
}

void add_instance_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--q", cfg.q, "field order, a prime power up to 65536");
  cmd->add_option("--e", cfg.e, "V has dimension 2e+1");
  cmd->add_option("--gram", cfg.gram_path, "JSON file with the 2e x 2e symmetric Gram matrix of the polarity");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Grassmann graphs and Jungnickel-Tonchev designs"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--jobs", cfg.jobs, "worker threads (default: all cores)");

  std::string kind, check, input;
  const std::vector<std::string> formats{"graph6", "dimacs-edges", "json", "incidence-csv"};

  auto* build = app.add_subcommand("build", "construct a graph or design and write it out");
  build->add_option("kind", kind, "object to build")
      ->required()
      ->check(CLI::IsMember({"grassmann", "twisted", "pg-design", "jt-design"}));
  add_instance_flags(build, cfg);
  build->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
  build->add_option("--out", cfg.out, "output path (default: standard output)");

  auto* verify = app.add_subcommand("verify", "run a verification and print a JSON report");
  verify->add_option("check", check, "check to run")
      ->required()
      ->check(CLI::IsMember({"thm1", "drg", "design", "spectrum", "aut-sample", "aut-exhaustive", "prank", "all"}));
  add_instance_flags(verify, cfg);
  verify->add_option("--seed", cfg.seed, "seed for all sampling");
  verify->add_option("--samples", cfg.samples, "number of random maps for aut-sample");
  verify->add_option("--out", cfg.out, "also write the report here");

  auto* exp = app.add_subcommand("export", "convert a graph (graph6 or JSON) or design (JSON) file");
  exp->add_option("input", input, "input file")->required();
  exp->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
  exp->add_option("--out", cfg.out, "output path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    kernels::set_thread_count(cfg.jobs);
    if (*build) return cmd_build(kind, cfg);
    if (*verify) return cmd_verify(check, cfg);
    return cmd_export(input, cfg);
  } catch (const ConfigError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return kExitInternal;
  }
}
