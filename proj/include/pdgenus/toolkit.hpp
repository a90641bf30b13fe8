#pragma once

// Exhaustive enumeration, theorem verification and the bouquet catalog.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "pdgenus/config.hpp"
#include "pdgenus/core.hpp"
#include "pdgenus/error.hpp"
#include "pdgenus/genuspoly.hpp"
#include "pdgenus/intersection.hpp"
#include "pdgenus/mutation.hpp"
#include "pdgenus/polynomial.hpp"
#include "pdgenus/surface.hpp"

namespace pdgenus {

// Calls `visit` on every bouquet with n edges labelled 1..n in first-occurrence
// order: (2n-1)!! chord pairings times 2^n twist patterns. A twisted edge
// carries its minus on the second occurrence.
inline void for_each_bouquet(std::size_t n, const std::function<void(const Bouquet&)>& visit,
                             const Limits& limits = default_limits()) {
  if (n > limits.max_enumerate_edges) {
    throw CapExceeded("enumeration is limited to " + std::to_string(limits.max_enumerate_edges) + " edges");
  }
  const std::size_t len = 2 * n;
  std::vector<int> slot(len, -1);
  std::vector<std::size_t> second(n);

  std::function<void(std::size_t, int)> pair_up = [&](std::size_t pos, int next) {
    while (pos < len && slot[pos] >= 0) ++pos;
    if (pos == len) {
      for (std::uint64_t twist = 0; twist < (std::uint64_t{1} << n); ++twist) {
        std::vector<HalfEdge> word(len);
        for (std::size_t p = 0; p < len; ++p) {
          const auto e = static_cast<std::size_t>(slot[p]);
          word[p] = {std::to_string(e + 1), second[e] == p && ((twist >> e) & 1U) != 0};
        }
        visit(Bouquet(std::move(word)));
      }
      return;
    }
    slot[pos] = next;
    for (std::size_t q = pos + 1; q < len; ++q) {
      if (slot[q] >= 0) continue;
      slot[q] = next;
      second[static_cast<std::size_t>(next)] = q;
      pair_up(pos + 1, next + 1);
      slot[q] = -1;
    }
    slot[pos] = -1;
  };
  pair_up(0, 0);
}

// All bouquets with n edges. With `up_to_equivalence` one canonical
// representative per class (cyclic shift, reversal, sign placement; labels
// fixed), sorted by rotation text.
inline std::vector<Bouquet> all_bouquets(std::size_t n, bool up_to_equivalence,
                                         const Limits& limits = default_limits()) {
  std::vector<Bouquet> out;
  if (!up_to_equivalence) {
    for_each_bouquet(n, [&](const Bouquet& b) { out.push_back(b); }, limits);
    return out;
  }
  std::map<std::string, Bouquet> classes;
  for_each_bouquet(
      n,
      [&](const Bouquet& b) {
        Bouquet c = canonical_form(b, {false, true});
        std::string key = c.to_string();
        classes.try_emplace(std::move(key), std::move(c));
      },
      limits);
  out.reserve(classes.size());
  for (auto& [k, b] : classes) out.push_back(std::move(b));
  return out;
}

// Uniform chord pairing and twist pattern on labels prefix+1..prefix+n.
template <typename Rng>
Bouquet random_bouquet(Rng& rng, std::size_t n, const std::string& prefix = "") {
  std::vector<std::size_t> slots(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) slots[i] = i / 2;
  std::shuffle(slots.begin(), slots.end(), rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<char> twisted(n), minus_on_first(n), seen(n, 0);
  for (std::size_t e = 0; e < n; ++e) {
    twisted[e] = coin(rng) ? 1 : 0;
    minus_on_first[e] = coin(rng) ? 1 : 0;
  }
  std::vector<HalfEdge> word;
  for (std::size_t e : slots) {
    const bool first = seen[e] == 0;
    seen[e] = 1;
    word.push_back({prefix + std::to_string(e + 1), twisted[e] != 0 && (first == (minus_on_first[e] != 0))});
  }
  return Bouquet(std::move(word));
}

enum class Theorem { main1, mutant_equiv, constant_term, one_term, bt_form, join_law };

inline const char* to_string(Theorem t) {
  switch (t) {
    case Theorem::main1: return "main1";
    case Theorem::mutant_equiv: return "mutantEquiv";
    case Theorem::constant_term: return "constantTerm";
    case Theorem::one_term: return "oneTerm";
    case Theorem::bt_form: return "btForm";
    default: return "joinLaw";
  }
}

inline Theorem parse_theorem(const std::string& s) {
  for (Theorem t : {Theorem::main1, Theorem::mutant_equiv, Theorem::constant_term, Theorem::one_term,
                    Theorem::bt_form, Theorem::join_law}) {
    if (s == to_string(t)) return t;
  }
  throw ParseError("unknown theorem '" + s + "'");
}

struct VerifyCaps {
  std::size_t main1 = 4;
  std::size_t mutant_equiv = 4;
  std::size_t constant_term = 5;
  std::size_t one_term = 5;
  std::size_t bt_form = 8;
  std::size_t join_law = 16;
  std::size_t join_pairs = 200;
  std::uint64_t seed = 20210;

  std::size_t cap(Theorem t) const {
    switch (t) {
      case Theorem::main1: return main1;
      case Theorem::mutant_equiv: return mutant_equiv;
      case Theorem::constant_term: return constant_term;
      case Theorem::one_term: return one_term;
      case Theorem::bt_form: return bt_form;
      default: return join_law;
    }
  }
};

struct Counterexample {
  std::string word;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  Theorem theorem = Theorem::main1;
  std::size_t n = 0;
  std::size_t instances = 0;
  std::vector<Counterexample> counterexamples;
  double elapsed_seconds = 0;

  bool passed() const { return counterexamples.empty(); }

  nlohmann::json to_json() const {
    nlohmann::json ces = nlohmann::json::array();
    for (const auto& c : counterexamples) {
      ces.push_back({{"word", c.word}, {"expected", c.expected}, {"actual", c.actual}});
    }
    return {{"theorem", to_string(theorem)}, {"n", n},           {"instances", instances},
            {"pass", passed()},              {"counterexamples", ces}, {"elapsed_seconds", elapsed_seconds}};
  }
};

namespace detail {

inline bool is_b_family_member(const Bouquet& prime_factor) {
  const std::size_t t = prime_factor.edge_count();
  if (t == 1 && !is_orientable(prime_factor)) return true;
  return t % 2 == 1 && isomorphic(prime_factor, complete_bouquet(t));
}

// Bouquet-level statement: B is a join of copies of B_1bar, B_1, B_3, B_5, ...
// The prime factors of a bouquet are the sub-bouquets on the components of
// its intersection graph.
inline bool is_join_of_b_family(const Bouquet& b) {
  if (b.empty()) return false;
  const SignedGraph g = signed_intersection_graph(b);
  for (const auto& comp : components(g)) {
    EdgeSubset part(b.edge_count(), vertex_mask(comp));
    if (!is_b_family_member(induced_sub_bouquet(b, part))) return false;
  }
  return true;
}

inline void verify_main1(std::size_t n, VerificationReport& r, const Limits& limits) {
  for (std::size_t k = 0; k <= n; ++k) {
    std::unordered_map<std::string, std::pair<std::string, GenusPolynomial>> first;
    for (const Bouquet& b : all_bouquets(k, true, limits)) {
      ++r.instances;
      GenusPolynomial p = partial_dual_euler_polynomial(b, limits);
      auto [it, fresh] = first.try_emplace(signed_intersection_graph(b).key(), b.to_string(), p);
      if (!fresh && !(it->second.second == p)) {
        r.counterexamples.push_back({b.to_string(), it->second.second.to_string() + " (as " + it->second.first + ")",
                                     p.to_string()});
      }
    }
  }
}

inline void verify_mutant_equiv(std::size_t n, VerificationReport& r, const Limits& limits) {
  for (std::size_t k = 0; k <= n; ++k) {
    const std::vector<Bouquet> classes = all_bouquets(k, true, limits);
    std::unordered_map<std::string, std::size_t> index;
    std::vector<std::string> si_key;
    for (const Bouquet& b : classes) {
      index.emplace(b.to_string(), index.size());
      si_key.push_back(signed_intersection_graph(b).key());
    }
    std::vector<std::size_t> orbit(classes.size(), static_cast<std::size_t>(-1));
    std::size_t orbits = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (orbit[i] != static_cast<std::size_t>(-1)) continue;
      const std::size_t id = orbits++;
      for (const Bouquet& s : mutation_orbit(classes[i], limits)) {
        const SignedGraph g = signed_intersection_graph(s);
        if (g.key() != si_key[i]) {
          r.counterexamples.push_back({s.to_string(), "signed intersection graph of " + classes[i].to_string(),
                                       "mutation changed the signed intersection graph"});
        }
        auto it = index.find(s.to_string());
        if (it != index.end()) orbit[it->second] = id;
      }
    }
    // Same SI graph <=> same orbit.
    std::unordered_map<std::string, std::size_t> orbit_of_key;
    std::unordered_map<std::size_t, std::string> key_of_orbit;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      ++r.instances;
      auto [a, fresh_a] = orbit_of_key.try_emplace(si_key[i], orbit[i]);
      if (!fresh_a && a->second != orbit[i]) {
        r.counterexamples.push_back({classes[i].to_string(), "mutation orbit " + std::to_string(a->second),
                                     "orbit " + std::to_string(orbit[i]) + " with the same signed intersection graph"});
      }
      auto [b, fresh_b] = key_of_orbit.try_emplace(orbit[i], si_key[i]);
      if (!fresh_b && b->second != si_key[i]) {
        r.counterexamples.push_back({classes[i].to_string(), "signed intersection graph " + b->second,
                                     "graph " + si_key[i] + " in the same orbit"});
      }
    }
  }
}

inline void verify_constant_term(std::size_t n, VerificationReport& r, const Limits& limits) {
  for (std::size_t k = 0; k <= n; ++k) {
    for (const Bouquet& b : all_bouquets(k, true, limits)) {
      ++r.instances;
      const bool predicted = predict_constant_term(signed_intersection_graph(b));
      const GenusPolynomial p = partial_dual_euler_polynomial(b, limits);
      if (predicted != (p.coefficient(0) != 0)) {
        r.counterexamples.push_back({b.to_string(), predicted ? "nonzero constant term" : "zero constant term",
                                     p.to_string()});
      }
    }
  }
}

inline void verify_one_term(std::size_t n, VerificationReport& r, const Limits& limits) {
  for (std::size_t k = 0; k <= n; ++k) {
    for (const Bouquet& b : all_bouquets(k, true, limits)) {
      ++r.instances;
      const OneTermClassification c = classify_one_term(signed_intersection_graph(b));
      const GenusPolynomial p = partial_dual_euler_polynomial(b, limits);
      const bool monomial = p.term_count() == 1 && p.coefficient_sum() == (BigInt(1) << k);
      if (c.one_term != monomial || (monomial && *p.lowest_exponent() != c.exponent)) {
        const std::string expected =
            c.one_term ? "2^" + std::to_string(k) + "z^" + std::to_string(c.exponent) : "more than one term";
        r.counterexamples.push_back({b.to_string(), expected, p.to_string()});
      }
      if (!b.empty() && is_join_of_b_family(b) != monomial) {
        r.counterexamples.push_back({b.to_string(),
                                     monomial ? "join of B_1bar, B_1, B_3, ..." : "not a join of B_1bar, B_1, B_3, ...",
                                     p.to_string()});
      }
    }
  }
}

inline void verify_bt_form(std::size_t n, VerificationReport& r, const Limits& limits) {
  for (std::size_t t = 1; t <= n; ++t) {
    ++r.instances;
    const Bouquet b = complete_bouquet(t);
    const GenusPolynomial direct = partial_dual_euler_polynomial(b, limits);
    const GenusPolynomial closed = bt_closed_form(t);
    if (!(direct == closed)) r.counterexamples.push_back({b.to_string(), closed.to_string(), direct.to_string()});
  }
}

inline void verify_join_law(std::size_t n, const VerifyCaps& caps, VerificationReport& r, const Limits& limits) {
  std::mt19937_64 rng(caps.seed);
  for (std::size_t i = 0; i < caps.join_pairs; ++i) {
    std::uniform_int_distribution<std::size_t> total(0, n);
    const std::size_t n_total = total(rng);
    std::uniform_int_distribution<std::size_t> split(0, n_total);
    const std::size_t n1 = split(rng);
    const Bouquet a = random_bouquet(rng, n1, "a");
    const Bouquet b = random_bouquet(rng, n_total - n1, "b");
    const Bouquet joined = join_concat(a, b);
    ++r.instances;
    const GenusPolynomial product = partial_dual_euler_polynomial(a, limits) * partial_dual_euler_polynomial(b, limits);
    const GenusPolynomial direct = partial_dual_euler_polynomial(joined, limits);
    if (!(product == direct)) r.counterexamples.push_back({joined.to_string(), product.to_string(), direct.to_string()});
  }
}

}  // namespace detail

inline VerificationReport verify(Theorem theorem, std::size_t n, const VerifyCaps& caps = {},
                                 const Limits& limits = default_limits()) {
  if (n > caps.cap(theorem)) {
    throw CapExceeded(std::string("verify ") + to_string(theorem) + " is limited to n <= " +
                      std::to_string(caps.cap(theorem)));
  }
  const auto started = std::chrono::steady_clock::now();
  VerificationReport r;
  r.theorem = theorem;
  r.n = n;
  switch (theorem) {
    case Theorem::main1: detail::verify_main1(n, r, limits); break;
    case Theorem::mutant_equiv: detail::verify_mutant_equiv(n, r, limits); break;
    case Theorem::constant_term: detail::verify_constant_term(n, r, limits); break;
    case Theorem::one_term: detail::verify_one_term(n, r, limits); break;
    case Theorem::bt_form: detail::verify_bt_form(n, r, limits); break;
    case Theorem::join_law: detail::verify_join_law(n, caps, r, limits); break;
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return r;
}

struct CensusRecord {
  std::string word;
  std::size_t n = 0;
  GenusPolynomial polynomial;
  SignedGraph si_graph;
  InterlaceSequences sequences;
  bool orientable = true;
  bool prime = false;
  bool bipartite = true;
  bool one_term = false;
  std::size_t orbit_id = 0;

  nlohmann::json to_json() const {
    return {{"word", word},
            {"n", n},
            {"polynomial", polynomial.to_json()},
            {"si_graph", si_graph.to_json()},
            {"sequences", {{"signed", sequences.signed_sequence}, {"cyclic", sequences.cyclic_sequence}}},
            {"flags", {{"orientable", orientable}, {"prime", prime}, {"bipartite", bipartite}, {"one_term", one_term}}},
            {"orbit_id", orbit_id}};
  }
};

// One record per equivalence class of bouquets with n edges, ordered by
// canonical word. Mutation orbits coincide with classes of equal labeled
// signed intersection graph, so orbit ids are assigned per graph in order of
// first appearance.
inline std::vector<CensusRecord> census_records(std::size_t n, const Limits& limits = default_limits()) {
  std::vector<CensusRecord> out;
  std::unordered_map<std::string, std::size_t> orbit_ids;
  for (const Bouquet& b : all_bouquets(n, true, limits)) {
    CensusRecord r;
    r.word = b.to_string();
    r.n = b.edge_count();
    r.polynomial = partial_dual_euler_polynomial(b, limits);
    r.si_graph = signed_intersection_graph(b);
    r.sequences = interlace_sequences(b);
    r.orientable = is_orientable(b);
    r.prime = is_connected(r.si_graph) && !b.empty();
    r.bipartite = is_bipartite(r.si_graph);
    r.one_term = classify_one_term(r.si_graph).one_term;
    r.orbit_id = orbit_ids.try_emplace(r.si_graph.key(), orbit_ids.size()).first->second;
    out.push_back(std::move(r));
  }
  return out;
}

enum class CatalogFormat { jsonl, csv };

inline void write_census(const std::vector<CensusRecord>& records, std::ostream& os,
                         CatalogFormat format = CatalogFormat::jsonl) {
  if (format == CatalogFormat::csv) {
    os << std::boolalpha << "word,n,polynomial,orientable,prime,bipartite,one_term,orbit_id\n";
    for (const auto& r : records) {
      os << '"' << r.word << "\"," << r.n << ',' << r.polynomial.to_string() << ',' << r.orientable << ','
         << r.prime << ',' << r.bipartite << ',' << r.one_term << ',' << r.orbit_id << '\n';
    }
    return;
  }
  for (const auto& r : records) os << r.to_json().dump() << '\n';
}

inline std::size_t census(std::size_t n, const std::string& path, CatalogFormat format = CatalogFormat::jsonl,
                          const Limits& limits = default_limits()) {
  const std::vector<CensusRecord> records = census_records(n, limits);
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_census(records, os, format);
  os.flush();
  if (!os) throw std::runtime_error("failed writing '" + path + "'");
  return records.size();
}

}  // namespace pdgenus
