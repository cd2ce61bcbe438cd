#include "kconn/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "kconn/bounds.hpp"
#include "kconn/connectivity.hpp"
#include "kconn/counterexample.hpp"
#include "kconn/decomposition.hpp"
#include "kconn/graph.hpp"

namespace kconn::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

const char* flag(bool b) { return b ? "true" : "false"; }

struct Options {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t f = 0;
  std::string color = "red";
  std::string peel_color = "blue";
  std::string in;
  std::string out;
  std::string cert;
  std::string decomp;
  std::string mode;
  double budget_seconds = 600.0;
  std::uint64_t seed = 1;
};

Deadline deadline_after(double seconds) {
  return std::chrono::steady_clock::now() +
         std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
}

SimpleGraph load_view(const Options& o) { return monochromatic_view(parse_coloring(read_file(o.in)), parse_color(o.color)); }

int cmd_gen(const Options& o, std::ostream& out) {
  auto inst = generate(o.k);
  if (!o.out.empty()) {
    write_file(o.out, serialize_coloring(inst.coloring));
    write_file(std::filesystem::path(o.out).replace_extension(".klabels").string(), serialize_labels(inst.labels));
  }
  out << "generated k=" << inst.k << " on " << inst.n << " vertices; target order " << inst.target() << "\n";
  out << "RESULT ok n=" << inst.n << " tau=" << inst.tau << "\n";
  return kExitOk;
}

int cmd_verify_counterexample(const Options& o, std::ostream& out) {
  auto inst = generate(o.k);
  EdgeColoring coloring = o.in.empty() ? inst.coloring : parse_coloring(read_file(o.in));
  if (coloring.n() != inst.n)
    throw std::invalid_argument("coloring has " + std::to_string(coloring.n()) + " vertices, expected " +
                                std::to_string(inst.n));
  const std::size_t target = inst.target();
  const SimpleGraph red = monochromatic_view(coloring, Color::Red);
  const SimpleGraph blue = monochromatic_view(coloring, Color::Blue);

  if (o.mode == "exact") {
    const auto deadline = deadline_after(o.budget_seconds);
    auto red_max = max_k_connected_subgraph(red, o.k, deadline);
    auto blue_max = red_max ? max_k_connected_subgraph(blue, o.k, deadline) : std::nullopt;
    if (!red_max || !blue_max) {
      out << "RESULT inconclusive budget_seconds=" << o.budget_seconds << "\n";
      return kExitRefuted;
    }
    const std::size_t core = k_core(blue, o.k).size();
    out << "red: largest " << o.k << "-connected subgraph has " << red_max->order << " vertices\n";
    out << "blue: " << o.k << "-core has " << core << " vertices, largest " << o.k << "-connected subgraph "
        << blue_max->order << "\n";
    const bool ok = red_max->order < target && core < target && blue_max->order < target;
    out << "RESULT " << (ok ? "verified" : "refuted") << " red_bound=" << red_max->order << " blue_bound=" << core
        << " blue_max=" << blue_max->order << " target=" << target << "\n";
    return ok ? kExitOk : kExitRefuted;
  }

  const Decomposition d = red_certificate(inst);
  const Verdict v = verify_decomposition(red, d, true);
  for (const auto& violation : v.violations) out << "red certificate: " << describe(violation) << "\n";
  const std::size_t red_bound = largest_piece(d);
  out << "red certificate: l=" << d.length() << " f=" << d.f << " strong=" << flag(v.ok())
      << " max|A_i|+|C_i|=" << red_bound << "\n";

  const auto peel = verify_peeling(coloring, Color::Blue, blue_certificate(inst));
  bool blue_ok = false;
  std::size_t blue_bound = inst.n;
  if (const auto* okp = std::get_if<PeelingOk>(&peel)) {
    blue_ok = true;
    blue_bound = okp->max_order_bound;
    out << "blue certificate: peeling of length " << inst.n - blue_bound << " accepted\n";
  } else {
    const auto& fail = std::get<PeelingFail>(peel);
    out << "blue certificate: position " << fail.index << " has residual degree " << fail.residual_degree << "\n";
  }
  const bool ok = v.ok() && blue_ok && red_bound < target && blue_bound < target;
  out << "RESULT " << (ok ? "verified" : "refuted") << " red_bound=" << red_bound << " blue_bound=" << blue_bound
      << " target=" << target << "\n";
  return ok ? kExitOk : kExitRefuted;
}

int cmd_connectivity(const Options& o, std::ostream& out) {
  const SimpleGraph g = load_view(o);
  if (is_k_connected(g, o.k)) {
    out << "RESULT k_connected k=" << o.k << " order=" << g.order() << "\n";
    return kExitOk;
  }
  auto cut = find_small_cut(g, o.k);
  if (cut) {
    out << "separator: " << cut->separator.to_string() << "\n";
    out << "smallest side: " << cut->side_a.to_string() << "\n";
    out << "RESULT not_k_connected k=" << o.k << " cut_size=" << cut->size << "\n";
  } else {
    out << "RESULT not_k_connected k=" << o.k << " cut_size=none order=" << g.order() << "\n";
  }
  return kExitOk;
}

int cmd_max_kconn(const Options& o, std::ostream& out) {
  const SimpleGraph g = load_view(o);
  auto report = max_k_connected_subgraph(g, o.k, deadline_after(o.budget_seconds));
  if (!report) {
    out << "RESULT inconclusive budget_seconds=" << o.budget_seconds << "\n";
    return kExitRefuted;
  }
  out << "witness: " << report->witness.to_string() << "\n";
  out << "RESULT ok order=" << report->order << " k=" << o.k << "\n";
  return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const SimpleGraph g = load_view(o);
  auto outcome = greedy_decompose(g, o.k, o.f);
  if (const auto* found = std::get_if<FoundSubgraph>(&outcome)) {
    out << "k-connected subgraph: " << found->vertices.to_string() << "\n";
    out << "RESULT found order=" << found->vertices.size() << "\n";
    return kExitOk;
  }
  const auto& d = std::get<Decomposition>(outcome);
  const std::string text = serialize_decomposition(d);
  if (o.out.empty())
    out << text;
  else
    write_file(o.out, text);
  out << "RESULT decomposed l=" << d.length() << " strong=" << flag(implies_no_large_subgraph(g, d)) << "\n";
  return kExitOk;
}

int cmd_check_decomp(const Options& o, std::ostream& out) {
  const SimpleGraph g = load_view(o);
  const Decomposition d = parse_decomposition(read_file(o.decomp));
  const bool want_strong = o.mode != "plain";
  const Verdict plain = verify_decomposition(g, d, false);
  const Verdict full = verify_decomposition(g, d, true);
  const Verdict& shown = want_strong ? full : plain;
  for (const auto& violation : shown.violations) out << describe(violation) << "\n";
  if (!shown.ok()) {
    out << "RESULT invalid violations=" << shown.violations.size() << "\n";
    return kExitRefuted;
  }
  out << "RESULT ok l=" << d.length() << " strong=" << flag(full.ok());
  if (full.ok()) out << " bound=" << largest_piece(d);
  out << "\n";
  return kExitOk;
}

int cmd_check_peel(const Options& o, std::ostream& out) {
  const EdgeColoring c = parse_coloring(read_file(o.in));
  const PeelingCertificate cert = parse_peeling(read_file(o.cert));
  auto verdict = verify_peeling(c, parse_color(o.peel_color), cert);
  if (const auto* ok = std::get_if<PeelingOk>(&verdict)) {
    out << "RESULT ok bound=" << ok->max_order_bound << " k=" << cert.k << "\n";
    return kExitOk;
  }
  const auto& fail = std::get<PeelingFail>(verdict);
  out << "RESULT fail index=" << fail.index << " degree=" << fail.residual_degree << "\n";
  return kExitRefuted;
}

int cmd_classify(const Options& o, std::ostream& out) {
  auto report = classify(static_cast<std::int64_t>(o.n), static_cast<std::int64_t>(o.k));
  out << "citation: " << report.citation << "\n";
  out << "RESULT " << to_string(report.regime) << "\n";
  return kExitOk;
}

int oracle_subgraph(const Options& o, std::ostream& out) {
  if (!o.in.empty()) {
    const SimpleGraph g = load_view(o);
    const auto solver = max_k_connected_subgraph(g, o.k);
    const auto oracle = oracle_max_k_connected(g, o.k);
    const bool agree = solver.order == oracle.order;
    out << "RESULT " << (agree ? "agree" : "mismatch") << " solver=" << solver.order << " oracle=" << oracle.order
        << "\n";
    return agree ? kExitOk : kExitRefuted;
  }
  const std::size_t n = o.n == 0 ? 10 : o.n;
  const std::size_t trials = 200;
  std::mt19937_64 rng(o.seed);
  std::bernoulli_distribution coin(0.5);
  std::size_t mismatches = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    SimpleGraph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    if (max_k_connected_subgraph(g, o.k).order != oracle_max_k_connected(g, o.k).order) ++mismatches;
  }
  out << "RESULT " << (mismatches == 0 ? "agree" : "mismatch") << " trials=" << trials
      << " mismatches=" << mismatches << " n=" << n << " k=" << o.k << " seed=" << o.seed << "\n";
  return mismatches == 0 ? kExitOk : kExitRefuted;
}

int oracle_colorings(const Options& o, std::ostream& out) {
  const std::size_t n = o.n;
  if (n < 2 || n > 6) throw std::invalid_argument("--mode colorings needs 2 <= n <= 6");
  if (n + 2 < 2 * o.k) throw std::invalid_argument("n - 2k + 2 must be non-negative");
  const std::size_t target = n + 2 - 2 * o.k;
  const std::size_t pairs = n * (n - 1) / 2;
  std::size_t worst = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    EdgeColoring c(n, Color::Red);
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v, ++bit)
        if (mask >> bit & 1) c.set(u, v, Color::Blue);
    const std::size_t best = std::max(max_k_connected_subgraph(monochromatic_view(c, Color::Red), o.k).order,
                                      max_k_connected_subgraph(monochromatic_view(c, Color::Blue), o.k).order);
    worst = std::min(worst, best);
  }
  const bool ok = worst >= target;
  out << "RESULT " << (ok ? "verified" : "refuted") << " min_max_order=" << worst << " target=" << target
      << " colorings=" << (std::uint64_t{1} << pairs) << "\n";
  return ok ? kExitOk : kExitRefuted;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-connected monochromatic subgraphs in 2-edge-colored complete graphs", "kconn"};
  app.require_subcommand(1);
  Options o;

  auto k_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--k", o.k, "connectivity parameter k")->check(CLI::PositiveNumber);
    if (required) opt->required();
  };
  auto color_opt = [&](CLI::App* sub) {
    sub->add_option("--color", o.color, "red | blue")->check(CLI::IsMember({"red", "blue"}));
  };

  auto* gen = app.add_subcommand("gen", "write the counterexample coloring for k");
  k_opt(gen, true);
  gen->add_option("--out", o.out, "kcoloring output path (labels go to <stem>.klabels)");

  auto* verify = app.add_subcommand("verify-counterexample", "check the counterexample for k");
  k_opt(verify, true);
  verify->add_option("--mode", o.mode, "certificates | exact")
      ->check(CLI::IsMember({"certificates", "exact"}));
  verify->add_option("--in", o.in, "kcoloring to check instead of the generated one");
  verify->add_option("--budget-seconds", o.budget_seconds, "time box for exact mode");

  auto* conn = app.add_subcommand("connectivity", "k-connectivity of a monochromatic view");
  conn->add_option("--in", o.in, "kcoloring input")->required();
  color_opt(conn);
  k_opt(conn, true);

  auto* maxk = app.add_subcommand("max-kconn", "largest k-connected subgraph of a monochromatic view");
  maxk->add_option("--in", o.in, "kcoloring input")->required();
  color_opt(maxk);
  k_opt(maxk, true);
  maxk->add_option("--budget-seconds", o.budget_seconds, "time box");

  auto* decompose = app.add_subcommand("decompose", "greedy (f,k)-decomposition of a monochromatic view");
  decompose->add_option("--in", o.in, "kcoloring input")->required();
  color_opt(decompose);
  k_opt(decompose, true);
  decompose->add_option("--f", o.f, "f")->required();
  decompose->add_option("--out", o.out, "kdecomp output path");

  auto* check_decomp = app.add_subcommand("check-decomp", "verify a kdecomp file");
  check_decomp->add_option("--in", o.in, "kcoloring input")->required();
  color_opt(check_decomp);
  check_decomp->add_option("--decomp", o.decomp, "kdecomp input")->required();
  check_decomp->add_option("--mode", o.mode, "plain | strong")->check(CLI::IsMember({"plain", "strong"}));

  auto* check_peel = app.add_subcommand("check-peel", "verify a kpeel file");
  check_peel->add_option("--in", o.in, "kcoloring input")->required();
  check_peel->add_option("--color", o.peel_color, "red | blue")->check(CLI::IsMember({"red", "blue"}));
  check_peel->add_option("--cert", o.cert, "kpeel input")->required();

  auto* classify_cmd = app.add_subcommand("classify", "regime of (n, k)");
  classify_cmd->add_option("--n", o.n, "n")->required()->check(CLI::PositiveNumber);
  k_opt(classify_cmd, true);

  auto* oracle = app.add_subcommand("oracle", "exhaustive cross-checks");
  oracle->add_option("--mode", o.mode, "subgraph | colorings")
      ->required()
      ->check(CLI::IsMember({"subgraph", "colorings"}));
  oracle->add_option("--n", o.n, "vertex count");
  k_opt(oracle, true);
  oracle->add_option("--in", o.in, "kcoloring input (subgraph mode)");
  color_opt(oracle);
  oracle->add_option("--seed", o.seed, "seed for random graphs (subgraph mode)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (verify->parsed()) return cmd_verify_counterexample(o, out);
    if (conn->parsed()) return cmd_connectivity(o, out);
    if (maxk->parsed()) return cmd_max_kconn(o, out);
    if (decompose->parsed()) return cmd_decompose(o, out);
    if (check_decomp->parsed()) return cmd_check_decomp(o, out);
    if (check_peel->parsed()) return cmd_check_peel(o, out);
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (oracle->parsed()) return o.mode == "colorings" ? oracle_colorings(o, out) : oracle_subgraph(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    out << "RESULT invalid\n";
    return kExitRefuted;
  }
  return kExitUsage;
}

}  // namespace kconn::cli
