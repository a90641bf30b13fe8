// Command-line front end for the pdgenus library.
//
// Exit codes: 0 success / verification passed, 1 verification found a
// counterexample, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdgenus/pdgenus.hpp"

namespace {

using namespace pdgenus;

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;

std::string join_ints(const std::vector<int>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
  return s + ")";
}

std::string vertex_text(const SignedGraph& g) {
  std::string s;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    s += (v ? " " : "") + g.label(v) + (g.negative(v) ? "-" : "+");
  }
  return s;
}

int cmd_poly(const std::string& rotation, bool orientable, const std::string& format, const Limits& limits) {
  const Bouquet b = parse_rotation(rotation);
  const GenusPolynomial p =
      orientable ? partial_dual_orientable_polynomial(b, limits) : partial_dual_euler_polynomial(b, limits);
  if (format == "json") {
    std::cout << p.to_json().dump() << '\n';
  } else if (format == "csv") {
    std::cout << "word,kind,polynomial\n\"" << b.to_string() << "\"," << to_string(p.kind()) << ',' << p << '\n';
  } else {
    std::cout << p << '\n';
  }
  return kOk;
}

int cmd_igraph(const std::string& rotation, const std::string& format) {
  const Bouquet b = parse_rotation(rotation);
  const SignedGraph g = signed_intersection_graph(b);
  if (format == "json") {
    std::cout << g.to_json().dump() << '\n';
  } else if (format == "dot") {
    std::cout << g.to_dot();
  } else if (format == "csv") {
    std::cout << "u,v\n";
    for (const auto& [u, v] : g.edge_list()) std::cout << u << ',' << v << '\n';
  } else {
    std::cout << "vertices: " << vertex_text(g) << '\n' << "edges:";
    for (const auto& [u, v] : g.edge_list()) std::cout << ' ' << u << '-' << v;
    std::cout << '\n';
  }
  return kOk;
}

int cmd_classify(const std::string& rotation, const std::string& format, const Limits& limits) {
  const Bouquet b = parse_rotation(rotation);
  const SignedGraph g = signed_intersection_graph(b);
  const SurfaceSummary s = summarize_surface(b);
  const InterlaceSequences seq = interlace_sequences(b);
  const OneTermClassification c = classify_one_term(g);
  const GenusPolynomial p = partial_dual_euler_polynomial(b, limits);
  nlohmann::json j = {
      {"word", b.to_string()},
      {"edges", s.edges},
      {"boundaries", s.boundaries},
      {"euler_genus", s.euler_genus},
      {"orientable", s.orientable},
      {"prime", is_prime(b)},
      {"positive", is_positive(g)},
      {"bipartite", is_bipartite(g)},
      {"constant_term", predict_constant_term(g)},
      {"one_term", {{"one_term", c.one_term}, {"k", c.components}, {"k2", c.negative_isolated}, {"b", c.exponent}}},
      {"signed_sequence", seq.signed_sequence},
      {"cyclic_sequence", seq.cyclic_sequence},
      {"polynomial", p.to_string()},
  };
  if (format == "json") {
    std::cout << j.dump() << '\n';
    return kOk;
  }
  std::cout << std::boolalpha << "word: " << b << '\n'
            << "edges: " << s.edges << ", boundaries: " << s.boundaries << ", euler genus: " << s.euler_genus << '\n'
            << "orientable: " << s.orientable << '\n'
            << "prime: " << is_prime(b) << '\n'
            << "positive: " << is_positive(g) << ", bipartite: " << is_bipartite(g) << '\n'
            << "constant term predicted: " << predict_constant_term(g) << '\n'
            << "one term: " << c.one_term;
  if (c.one_term) std::cout << " (k=" << c.components << ", k2=" << c.negative_isolated << ", b=" << c.exponent << ")";
  std::cout << '\n'
            << "signed interlace sequence: " << join_ints(seq.signed_sequence) << '\n'
            << "cyclic interlace sequence: " << join_ints(seq.cyclic_sequence) << '\n'
            << "partial-dual Euler genus polynomial: " << p << '\n';
  return kOk;
}

int cmd_ip(const std::string& path, const std::string& format, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed graph JSON: ") + ex.what());
  }
  const SignedGraph g = SignedGraph::from_json(j);
  const GenusPolynomial p = intersection_polynomial(g, limits);
  if (format == "json") {
    std::cout << p.to_json().dump() << '\n';
  } else {
    std::cout << p << '\n';
  }
  return kOk;
}

int cmd_mutants(const std::string& rotation, const std::string& format, const Limits& limits) {
  const Bouquet b = parse_rotation(rotation);
  std::vector<Bouquet> orbit;
  bool complete = true;
  try {
    orbit = mutation_orbit(b, limits);
  } catch (const OrbitCapExceeded& ex) {
    orbit = ex.partial_orbit();
    complete = false;
    std::cerr << "warning: " << ex.what() << "; orbit is partial\n";
  }
  if (format == "json") {
    nlohmann::json words = nlohmann::json::array();
    for (const auto& x : orbit) words.push_back(x.to_string());
    std::cout << nlohmann::json{{"complete", complete}, {"orbit", words}}.dump() << '\n';
  } else {
    for (const auto& x : orbit) std::cout << x << '\n';
  }
  return complete ? kOk : kUsage;
}

int cmd_enumerate(std::size_t n, bool raw, const std::string& format, const Limits& limits) {
  const std::vector<Bouquet> all = all_bouquets(n, !raw, limits);
  if (format == "json") {
    nlohmann::json words = nlohmann::json::array();
    for (const auto& b : all) words.push_back(b.to_string());
    std::cout << words.dump() << '\n';
  } else if (format == "csv") {
    std::cout << "word\n";
    for (const auto& b : all) std::cout << '"' << b << "\"\n";
  } else {
    for (const auto& b : all) std::cout << b << '\n';
  }
  return kOk;
}

int cmd_census(std::size_t n, const std::string& out, const std::string& format, const Limits& limits) {
  const std::size_t written = census(n, out, format == "csv" ? CatalogFormat::csv : CatalogFormat::jsonl, limits);
  std::cout << written << " records written to " << out << '\n';
  return kOk;
}

int cmd_verify(const std::string& theorem, std::size_t n, const std::string& format, const Limits& limits) {
  const VerificationReport r = verify(parse_theorem(theorem), n, VerifyCaps{}, limits);
  if (format == "json") {
    std::cout << r.to_json().dump() << '\n';
  } else {
    std::cout << to_string(r.theorem) << " n=" << r.n << ": " << (r.passed() ? "PASS" : "FAIL") << " ("
              << r.instances << " instances, " << r.counterexamples.size() << " counterexamples, "
              << r.elapsed_seconds << " s)\n";
    for (const auto& c : r.counterexamples) {
      std::cout << "  " << c.word << ": expected " << c.expected << ", got " << c.actual << '\n';
    }
  }
  return r.passed() ? kOk : kCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial-dual genus polynomials of bouquets"};
  app.require_subcommand(1);

  std::string format = "text";
  Limits limits;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "dot"}))
      ->capture_default_str();
  app.add_option("--max-edges", limits.max_edges, "Edge cap for 2^n subset tabulation")->capture_default_str();
  app.add_option("--max-orbit", limits.max_orbit_states, "State cap for mutation orbits")->capture_default_str();
  app.add_option("--max-realize", limits.max_realize_vertices, "Vertex cap for realization search")
      ->capture_default_str();

  std::string rotation, path, theorem, output;
  bool orientable = false;
  bool raw = false;
  std::size_t n = 0;

  auto* poly = app.add_subcommand("poly", "Partial-dual genus polynomial of a signed rotation");
  poly->add_option("rotation", rotation, "Signed rotation, e.g. \"(1, 2, -1, 2)\"")->required();
  poly->add_flag("--orientable", orientable, "Orientable genus polynomial");

  auto* igraph = app.add_subcommand("igraph", "Signed intersection graph");
  igraph->add_option("rotation", rotation)->required();

  auto* classify = app.add_subcommand("classify", "Surface data, sequences and structural predicates");
  classify->add_option("rotation", rotation)->required();

  auto* ip = app.add_subcommand("ip", "Intersection polynomial of a signed graph given as JSON");
  ip->add_option("graph", path, "Graph JSON file")->required();

  auto* mutants = app.add_subcommand("mutants", "Mutation orbit of a signed rotation");
  mutants->add_option("rotation", rotation)->required();

  auto* enumerate = app.add_subcommand("enumerate", "All bouquets with n edges up to equivalence");
  enumerate->add_option("-n", n, "Number of edges")->required();
  enumerate->add_flag("--raw", raw, "Every labelled word, no deduplication");

  auto* census_cmd = app.add_subcommand("census", "Write the catalog of bouquets with n edges");
  census_cmd->add_option("-n", n, "Number of edges")->required();
  census_cmd->add_option("-o", output, "Output file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check a theorem");
  verify_cmd->add_option("theorem", theorem, "main1 | mutantEquiv | constantTerm | oneTerm | btForm | joinLaw")
      ->required();
  verify_cmd->add_option("-n", n, "Size bound")->required();

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*poly) return cmd_poly(rotation, orientable, format, limits);
    if (*igraph) return cmd_igraph(rotation, format);
    if (*classify) return cmd_classify(rotation, format, limits);
    if (*ip) return cmd_ip(path, format, limits);
    if (*mutants) return cmd_mutants(rotation, format, limits);
    if (*enumerate) return cmd_enumerate(n, raw, format, limits);
    if (*census_cmd) return cmd_census(n, output, format, limits);
    if (*verify_cmd) return cmd_verify(theorem, n, format, limits);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
