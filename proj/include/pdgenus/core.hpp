#pragma once

// Bouquet data model: signed rotations, validation, canonical forms and
// induced sub-bouquets.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdgenus/error.hpp"

namespace pdgenus {

// One end of a loop as it appears around the vertex. A negative half-edge
// marks its edge as twisted.
struct HalfEdge {
  std::string label;
  bool negative = false;

  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

// The two word positions of an edge, first < second.
struct EdgeEnds {
  std::string label;
  std::size_t first = 0;
  std::size_t second = 0;
  bool twisted = false;
};

inline bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// A one-vertex ribbon graph given by its signed rotation. Immutable once
// built; every label occurs exactly twice and at most one of its two
// occurrences is negative.
class Bouquet {
 public:
  Bouquet() = default;

  explicit Bouquet(std::vector<HalfEdge> word) : word_(std::move(word)) { index(); }

  const std::vector<HalfEdge>& word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return word_.empty(); }

  // Edges in first-occurrence order. This order fixes EdgeSubset bits.
  const std::vector<EdgeEnds>& edges() const { return edges_; }
  const EdgeEnds& edge(std::size_t i) const { return edges_.at(i); }

  // Edge index occupying a word position.
  std::size_t edge_at(std::size_t position) const { return edge_at_.at(position); }
  const std::vector<std::size_t>& edge_at_positions() const { return edge_at_; }

  std::size_t partner(std::size_t position) const {
    const EdgeEnds& e = edges_[edge_at_.at(position)];
    return e.first == position ? e.second : e.first;
  }

  bool twisted(std::size_t edge) const { return edges_.at(edge).twisted; }

  std::optional<std::size_t> find(std::string_view label) const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].label == label) return i;
    }
    return std::nullopt;
  }

  std::size_t edge_index(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw PreconditionError("unknown edge label '" + std::string(label) + "'");
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back(e.label);
    return out;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (i != 0) s += ", ";
      if (word_[i].negative) s += '-';
      s += word_[i].label;
    }
    s += ')';
    return s;
  }

  // Word equality, i.e. identical presentation.
  friend bool operator==(const Bouquet& a, const Bouquet& b) { return a.word_ == b.word_; }

  friend std::ostream& operator<<(std::ostream& os, const Bouquet& b) { return os << b.to_string(); }

 private:
  void index() {
    std::map<std::string, std::size_t> seen;
    edge_at_.assign(word_.size(), 0);
    for (std::size_t p = 0; p < word_.size(); ++p) {
      const HalfEdge& h = word_[p];
      if (h.label.empty()) throw ParseError("empty edge label at position " + std::to_string(p));
      if (!std::all_of(h.label.begin(), h.label.end(), is_label_char)) {
        throw ParseError("invalid edge label '" + h.label + "'");
      }
      auto [it, inserted] = seen.try_emplace(h.label, edges_.size());
      if (inserted) {
        edges_.push_back({h.label, p, p, h.negative});
      } else {
        EdgeEnds& e = edges_[it->second];
        if (e.second != e.first) {
          throw ParseError("label '" + h.label + "' occurs more than twice");
        }
        if (e.twisted && h.negative) {
          throw ParseError("label '" + h.label + "' is negative at both ends");
        }
        e.second = p;
        e.twisted = e.twisted || h.negative;
      }
      edge_at_[p] = it->second;
    }
    for (const auto& e : edges_) {
      if (e.first == e.second) throw ParseError("label '" + e.label + "' occurs only once");
    }
  }

  std::vector<HalfEdge> word_;
  std::vector<EdgeEnds> edges_;
  std::vector<std::size_t> edge_at_;
};

// Parses "(a, c, -a, d, b, d, c, -b)". The empty rotation is "()".
inline Bouquet parse_rotation(std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw ParseError("rotation must be enclosed in parentheses: '" + std::string(text) + "'");
  }
  std::string_view body = text.substr(1, text.size() - 2);
  if (std::all_of(body.begin(), body.end(), is_space)) return Bouquet{};

  std::vector<HalfEdge> word;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    std::string_view tok = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
    while (!tok.empty() && is_space(tok.front())) tok.remove_prefix(1);
    while (!tok.empty() && is_space(tok.back())) tok.remove_suffix(1);
    HalfEdge h;
    if (!tok.empty() && tok.front() == '-') {
      h.negative = true;
      tok.remove_prefix(1);
      while (!tok.empty() && is_space(tok.front())) tok.remove_prefix(1);
    }
    if (tok.empty()) throw ParseError("empty token in rotation '" + std::string(text) + "'");
    if (!std::all_of(tok.begin(), tok.end(), is_label_char)) {
      throw ParseError("invalid token '" + std::string(tok) + "'");
    }
    h.label = std::string(tok);
    word.push_back(std::move(h));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Bouquet(std::move(word));
}

// Subset of the edges of a bouquet. Bit i is the i-th edge in first-occurrence
// order.
class EdgeSubset {
 public:
  static constexpr std::size_t kMaxWidth = 63;

  EdgeSubset() = default;
  EdgeSubset(std::size_t width, std::uint64_t bits) : width_(width), bits_(bits & mask(width)) {
    if (width > kMaxWidth) throw CapExceeded("edge subsets are limited to 63 edges");
  }

  static EdgeSubset none(std::size_t width) { return {width, 0}; }
  static EdgeSubset all(std::size_t width) { return {width, mask(width)}; }

  static EdgeSubset of(const Bouquet& b, const std::vector<std::string>& labels) {
    EdgeSubset s = none(b.edge_count());
    for (const auto& l : labels) s.insert(b.edge_index(l));
    return s;
  }

  std::size_t width() const { return width_; }
  std::uint64_t bits() const { return bits_; }
  std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool contains(std::size_t i) const { return i < width_ && ((bits_ >> i) & 1U) != 0; }

  void insert(std::size_t i) {
    if (i >= width_) throw PreconditionError("edge index outside subset width");
    bits_ |= std::uint64_t{1} << i;
  }

  EdgeSubset complement() const { return {width_, ~bits_}; }

  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

 private:
  static std::uint64_t mask(std::size_t width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  }

  std::size_t width_ = 0;
  std::uint64_t bits_ = 0;
};

// Restriction of the word to the half-edges of A, order preserved.
inline Bouquet induced_sub_bouquet(const Bouquet& b, const EdgeSubset& a) {
  if (a.width() != b.edge_count()) throw PreconditionError("edge subset width does not match bouquet");
  std::vector<HalfEdge> word;
  word.reserve(2 * a.count());
  for (std::size_t p = 0; p < b.size(); ++p) {
    if (a.contains(b.edge_at(p))) word.push_back(b.word()[p]);
  }
  return Bouquet(std::move(word));
}

struct CanonicalOptions {
  // Rename edges 1..n in first-occurrence order of the chosen presentation.
  bool relabel = false;
  // Include the mirror image in the equivalence group.
  bool reversal = true;
};

namespace detail {

// Presentation of a bouquet read from `start` in direction `step` (+1/-1)
// as token keys. Negative sorts before positive on equal label, and the
// minus of a twisted edge is placed on its second occurrence.
inline void presentation_keys(const Bouquet& b, const std::vector<int>& label_rank, std::size_t start,
                              int step, bool relabel, std::vector<int>& keys,
                              std::vector<int>& scratch) {
  const std::size_t len = b.size();
  keys.resize(len);
  scratch.assign(b.edge_count(), -1);
  int next = 0;
  std::size_t p = start;
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t e = b.edge_at(p);
    const bool second = scratch[e] >= 0;
    if (!second) scratch[e] = relabel ? next++ : label_rank[e];
    const bool neg = second && b.twisted(e);
    keys[i] = scratch[e] * 2 + (neg ? 0 : 1);
    p = step > 0 ? (p + 1) % len : (p + len - 1) % len;
  }
}

}  // namespace detail

// Lexicographically least presentation over cyclic shifts, optional reversal
// and sign normalization (relabeling edges when requested).
inline Bouquet canonical_form(const Bouquet& b, CanonicalOptions opt = {}) {
  if (b.empty()) return b;
  const std::size_t n = b.edge_count();
  std::vector<int> rank(n);
  {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return b.edge(x).label < b.edge(y).label; });
    for (std::size_t r = 0; r < n; ++r) rank[order[r]] = static_cast<int>(r);
  }

  std::vector<int> best, keys, scratch;
  for (int step : {1, -1}) {
    if (step < 0 && !opt.reversal) break;
    for (std::size_t s = 0; s < b.size(); ++s) {
      detail::presentation_keys(b, rank, s, step, opt.relabel, keys, scratch);
      if (best.empty() || keys < best) best.swap(keys);
    }
  }

  std::vector<std::string> by_rank(n);
  for (std::size_t i = 0; i < n; ++i) by_rank[rank[i]] = b.edge(i).label;
  std::vector<HalfEdge> word;
  word.reserve(b.size());
  for (int key : best) {
    const auto id = static_cast<std::size_t>(key / 2);
    word.push_back({opt.relabel ? std::to_string(id + 1) : by_rank[id], key % 2 == 0});
  }
  return Bouquet(std::move(word));
}

inline bool equivalent(const Bouquet& a, const Bouquet& b, bool reversal = true) {
  if (a.size() != b.size()) return false;
  CanonicalOptions opt{false, reversal};
  return canonical_form(a, opt) == canonical_form(b, opt);
}

// Same edge set and same cyclic interlacement up to the equivalence group,
// ignoring the names of the edges.
inline bool isomorphic(const Bouquet& a, const Bouquet& b) {
  if (a.size() != b.size()) return false;
  CanonicalOptions opt{true, true};
  return canonical_form(a, opt) == canonical_form(b, opt);
}

// Word with labels "1".."n" assigned by first occurrence in the given word.
inline Bouquet relabel_first_occurrence(const Bouquet& b) {
  std::vector<HalfEdge> word;
  word.reserve(b.size());
  for (std::size_t p = 0; p < b.size(); ++p) {
    word.push_back({std::to_string(b.edge_at(p) + 1), b.word()[p].negative});
  }
  return Bouquet(std::move(word));
}

}  // namespace pdgenus
