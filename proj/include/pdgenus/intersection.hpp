#pragma once

// Signed intersection graphs of bouquets, interlace sequences and the
// structural predicates used by the classification results.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pdgenus/config.hpp"
#include "pdgenus/core.hpp"
#include "pdgenus/error.hpp"

namespace pdgenus {

// Simple graph with a +/- sign on every vertex and unique vertex labels.
// Adjacency rows are bitmasks, so at most 64 vertices.
class SignedGraph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  std::size_t vertex_count() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  std::size_t add_vertex(std::string label, bool negative = false) {
    if (labels_.size() == kMaxVertices) throw CapExceeded("signed graphs are limited to 64 vertices");
    if (label.empty() || !std::all_of(label.begin(), label.end(), is_label_char)) {
      throw ParseError("invalid vertex label '" + label + "'");
    }
    if (find(label)) throw ParseError("duplicate vertex label '" + label + "'");
    labels_.push_back(std::move(label));
    negative_.push_back(negative);
    adj_.push_back(0);
    return labels_.size() - 1;
  }

  void add_edge(std::size_t u, std::size_t v) {
    if (u >= vertex_count() || v >= vertex_count()) throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("signed graphs have no self-loops");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  void add_edge(const std::string& u, const std::string& v) { add_edge(index(u), index(v)); }

  const std::string& label(std::size_t v) const { return labels_.at(v); }
  bool negative(std::size_t v) const { return negative_.at(v); }
  std::uint64_t neighbours(std::size_t v) const { return adj_.at(v); }
  bool adjacent(std::size_t u, std::size_t v) const { return ((adj_.at(u) >> v) & 1U) != 0; }
  std::size_t degree(std::size_t v) const { return static_cast<std::size_t>(std::popcount(adj_.at(v))); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (std::size_t v = 0; v < vertex_count(); ++v) twice += degree(v);
    return twice / 2;
  }

  std::optional<std::size_t> find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::size_t index(const std::string& label) const {
    if (auto v = find(label)) return *v;
    throw PreconditionError("unknown vertex '" + label + "'");
  }

  std::uint64_t all_mask() const {
    return vertex_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vertex_count()) - 1;
  }

  // Subgraph induced by `mask`, vertex order preserved.
  SignedGraph induced(std::uint64_t mask) const {
    SignedGraph g;
    std::vector<std::size_t> map(vertex_count(), kNone);
    for (std::size_t v = 0; v < vertex_count(); ++v) {
      if ((mask >> v) & 1U) map[v] = g.add_vertex(labels_[v], negative_[v]);
    }
    for (std::size_t u = 0; u < vertex_count(); ++u) {
      for (std::size_t v = u + 1; v < vertex_count(); ++v) {
        if (map[u] != kNone && map[v] != kNone && adjacent(u, v)) g.add_edge(map[u], map[v]);
      }
    }
    return g;
  }

  SignedGraph without(std::size_t v) const { return induced(all_mask() & ~bit(v)); }

  // Edges as label pairs, each pair ordered by vertex index.
  std::vector<std::pair<std::string, std::string>> edge_list() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t u = 0; u < vertex_count(); ++u) {
      for (std::size_t v = u + 1; v < vertex_count(); ++v) {
        if (adjacent(u, v)) out.emplace_back(labels_[u], labels_[v]);
      }
    }
    return out;
  }

  // {"vertices":[{"label","sign"}],"edges":[["u","v"]]}
  nlohmann::json to_json() const {
    nlohmann::json vs = nlohmann::json::array();
    for (std::size_t v = 0; v < vertex_count(); ++v) {
      vs.push_back({{"label", labels_[v]}, {"sign", negative_[v] ? "-" : "+"}});
    }
    nlohmann::json es = nlohmann::json::array();
    for (const auto& [u, v] : edge_list()) es.push_back({u, v});
    return {{"vertices", vs}, {"edges", es}};
  }

  static SignedGraph from_json(const nlohmann::json& j) {
    try {
      SignedGraph g;
      for (const auto& v : j.at("vertices")) {
        const std::string sign = v.at("sign").get<std::string>();
        if (sign != "+" && sign != "-") throw ParseError("vertex sign must be \"+\" or \"-\"");
        g.add_vertex(v.at("label").get<std::string>(), sign == "-");
      }
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edges must be label pairs");
        g.add_edge(g.index(e[0].get<std::string>()), g.index(e[1].get<std::string>()));
      }
      return g;
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(std::string("malformed graph JSON: ") + ex.what());
    } catch (const PreconditionError& ex) {
      throw ParseError(std::string("malformed graph JSON: ") + ex.what());
    }
  }

  // Graphviz; the sign is appended to each vertex name.
  std::string to_dot() const {
    std::ostringstream os;
    os << "graph SI {\n";
    for (std::size_t v = 0; v < vertex_count(); ++v) {
      os << "  \"" << labels_[v] << "\" [label=\"" << labels_[v] << (negative_[v] ? "-" : "+") << "\"];\n";
    }
    for (const auto& [u, v] : edge_list()) os << "  \"" << u << "\" -- \"" << v << "\";\n";
    os << "}\n";
    return os.str();
  }

  // Labeled equality: same labels, signs and adjacency, in any vertex order.
  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    std::vector<std::size_t> to_b(a.vertex_count());
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
      auto w = b.find(a.labels_[v]);
      if (!w || b.negative_[*w] != a.negative_[v]) return false;
      to_b[v] = *w;
    }
    for (std::size_t u = 0; u < a.vertex_count(); ++u) {
      for (std::size_t v = u + 1; v < a.vertex_count(); ++v) {
        if (a.adjacent(u, v) != b.adjacent(to_b[u], to_b[v])) return false;
      }
    }
    return true;
  }

  // Order-independent text key for labeled equality (hashing, grouping).
  std::string key() const {
    std::vector<std::size_t> order(vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return labels_[x] < labels_[y]; });
    std::string k;
    for (std::size_t v : order) k += labels_[v] + (negative_[v] ? "-" : "+") + ";";
    k += '|';
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) k += adjacent(order[i], order[j]) ? '1' : '0';
    }
    return k;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  static std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << v; }

  std::vector<std::string> labels_;
  std::vector<bool> negative_;
  std::vector<std::uint64_t> adj_;
};

using SignedIntersectionGraph = SignedGraph;

// Exactly one end of f lies strictly between the two ends of e.
inline bool interlaced(const Bouquet& b, const std::string& e, const std::string& f) {
  const EdgeEnds& x = b.edge(b.edge_index(e));
  const EdgeEnds& y = b.edge(b.edge_index(f));
  const bool first_inside = x.first < y.first && y.first < x.second;
  const bool second_inside = x.first < y.second && y.second < x.second;
  return first_inside != second_inside;
}

// Vertices in first-occurrence order, so vertex i is edge i of the bouquet.
inline SignedIntersectionGraph signed_intersection_graph(const Bouquet& b) {
  if (b.edge_count() > SignedGraph::kMaxVertices) throw CapExceeded("too many edges for a signed graph");
  SignedGraph g;
  for (const auto& e : b.edges()) g.add_vertex(e.label, e.twisted);
  // Sweep: an edge closing at q interlaces exactly the edges opened inside
  // (first, q) and not yet closed.
  std::vector<std::size_t> open;
  for (std::size_t p = 0; p < b.size(); ++p) {
    const std::size_t e = b.edge_at(p);
    if (b.edge(e).first == p) {
      open.push_back(e);
      continue;
    }
    auto it = std::find(open.begin(), open.end(), e);
    for (auto later = it + 1; later != open.end(); ++later) g.add_edge(e, *later);
    open.erase(it);
  }
  return g;
}

struct InterlaceSequences {
  std::vector<int> signed_sequence;  // sorted ascending
  std::vector<int> cyclic_sequence;  // one entry per word position
};

// beta(e) = degree of e in I(B), negated for twisted e.
inline InterlaceSequences interlace_sequences(const Bouquet& b) {
  const SignedGraph g = signed_intersection_graph(b);
  std::vector<int> beta(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const int d = static_cast<int>(g.degree(v));
    beta[v] = g.negative(v) ? -d : d;
  }
  InterlaceSequences s;
  s.signed_sequence = beta;
  std::sort(s.signed_sequence.begin(), s.signed_sequence.end());
  for (std::size_t p = 0; p < b.size(); ++p) s.cyclic_sequence.push_back(beta[b.edge_at(p)]);
  return s;
}

inline bool is_positive(const SignedGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.negative(v)) return false;
  }
  return true;
}

// Connected components as ascending vertex lists, ordered by least vertex.
inline std::vector<std::vector<std::size_t>> components(const SignedGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::uint64_t unseen = g.all_mask();
  while (unseen != 0) {
    std::uint64_t comp = unseen & (~unseen + 1);
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      const auto v = static_cast<std::size_t>(std::countr_zero(frontier));
      frontier &= frontier - 1;
      const std::uint64_t fresh = g.neighbours(v) & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    unseen &= ~comp;
    std::vector<std::size_t> vs;
    for (std::uint64_t m = comp; m != 0; m &= m - 1) vs.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    out.push_back(std::move(vs));
  }
  return out;
}

inline std::uint64_t vertex_mask(const std::vector<std::size_t>& vs) {
  std::uint64_t m = 0;
  for (std::size_t v : vs) m |= std::uint64_t{1} << v;
  return m;
}

inline bool is_connected(const SignedGraph& g) { return components(g).size() <= 1; }

inline bool is_bipartite(const SignedGraph& g) {
  std::vector<int> colour(g.vertex_count(), -1);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::uint64_t m = g.neighbours(u); m != 0; m &= m - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(m));
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          stack.push_back(v);
        } else if (colour[v] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Join-irreducible: nonempty with connected intersection graph.
inline bool is_prime(const Bouquet& b) {
  return !b.empty() && is_connected(signed_intersection_graph(b));
}

struct OneTermClassification {
  bool one_term = false;
  std::size_t components = 0;         // k
  std::size_t negative_isolated = 0;  // k2
  std::size_t exponent = 0;           // b = v - k + k2, meaningful when one_term
};

// One-term iff every component is a complete graph of odd order and every
// non-isolated vertex is positive.
inline OneTermClassification classify_one_term(const SignedGraph& g) {
  OneTermClassification c;
  c.one_term = true;
  const auto comps = components(g);
  c.components = comps.size();
  for (const auto& comp : comps) {
    if (comp.size() == 1) {
      if (g.negative(comp.front())) ++c.negative_isolated;
      continue;
    }
    if (comp.size() % 2 == 0) c.one_term = false;
    for (std::size_t v : comp) {
      if (g.negative(v) || g.degree(v) != comp.size() - 1) c.one_term = false;
    }
  }
  c.exponent = g.vertex_count() - c.components + c.negative_isolated;
  return c;
}

// Nonzero constant term iff positive and bipartite.
inline bool predict_constant_term(const SignedGraph& g) { return is_positive(g) && is_bipartite(g); }

// Brute-force search for a sign- and adjacency-preserving relabeling.
inline bool isomorphic(const SignedGraph& a, const SignedGraph& b, const Limits& limits = default_limits()) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (n > limits.max_isomorphism_vertices) {
    throw CapExceeded("isomorphism search is limited to " + std::to_string(limits.max_isomorphism_vertices) +
                      " vertices");
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u) {
      ok = a.negative(u) == b.negative(perm[u]);
      for (std::size_t v = u + 1; v < n && ok; ++v) ok = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Free-standing positive graph families, vertices labelled 1..n.

inline SignedGraph positive_path(std::size_t n) {
  SignedGraph g;
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) g.add_edge(i - 1, i);
  return g;
}

// Hub "1" joined to leaves 2..n+1.
inline SignedGraph positive_star(std::size_t leaves) {
  SignedGraph g;
  for (std::size_t i = 1; i <= leaves + 1; ++i) g.add_vertex(std::to_string(i));
  for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

inline SignedGraph positive_complete(std::size_t n) {
  SignedGraph g;
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

// `negatives` negative then `positives` positive isolated vertices.
inline SignedGraph isolated_vertices(std::size_t negatives, std::size_t positives) {
  SignedGraph g;
  for (std::size_t i = 1; i <= negatives + positives; ++i) g.add_vertex(std::to_string(i), i <= negatives);
  return g;
}

}  // namespace pdgenus
