#pragma once

// Genus polynomials with nonnegative arbitrary-precision coefficients.

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "pdgenus/error.hpp"

namespace pdgenus {

using BigInt = boost::multiprecision::cpp_int;

enum class PolyKind { euler, orientable };

inline const char* to_string(PolyKind k) { return k == PolyKind::euler ? "euler" : "orientable"; }

class GenusPolynomial {
 public:
  using Terms = std::map<std::size_t, BigInt>;

  GenusPolynomial() = default;
  explicit GenusPolynomial(PolyKind kind) : kind_(kind) {}

  static GenusPolynomial constant(BigInt c, PolyKind kind = PolyKind::euler) {
    return monomial(std::move(c), 0, kind);
  }

  static GenusPolynomial monomial(BigInt c, std::size_t exponent, PolyKind kind = PolyKind::euler) {
    GenusPolynomial p(kind);
    p.add_term(exponent, std::move(c));
    return p;
  }

  PolyKind kind() const { return kind_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  BigInt coefficient(std::size_t exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt{0} : it->second;
  }

  std::optional<std::size_t> lowest_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  std::optional<std::size_t> highest_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  BigInt coefficient_sum() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  void add_term(std::size_t exponent, const BigInt& c) {
    if (c == 0) return;
    terms_[exponent] += c;
  }

  GenusPolynomial& operator+=(const GenusPolynomial& o) {
    require_same_kind(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  friend GenusPolynomial operator+(GenusPolynomial a, const GenusPolynomial& b) { return a += b; }

  // Coefficient convolution.
  friend GenusPolynomial operator*(const GenusPolynomial& a, const GenusPolynomial& b) {
    a.require_same_kind(b);
    GenusPolynomial out(a.kind_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
  }

  // c * z^k * p
  GenusPolynomial scaled(const BigInt& c, std::size_t k) const {
    GenusPolynomial out(kind_);
    for (const auto& [e, x] : terms_) out.add_term(e + k, x * c);
    return out;
  }

  // Orientable-genus form of an Euler polynomial whose exponents are all even.
  GenusPolynomial halved() const {
    if (kind_ != PolyKind::euler) throw PreconditionError("only Euler polynomials can be halved");
    GenusPolynomial out(PolyKind::orientable);
    for (const auto& [e, c] : terms_) {
      if (e % 2 != 0) throw PreconditionError("odd Euler exponent has no orientable counterpart");
      out.add_term(e / 2, c);
    }
    return out;
  }

  // Ascending exponents: "2+18z+36z^2+8z^3"; zero prints as "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += '+';
      if (e == 0 || c != 1) s += c.str();
      if (e >= 1) s += 'z';
      if (e >= 2) s += '^' + std::to_string(e);
    }
    return s;
  }

  nlohmann::json to_json() const {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [e, c] : terms_) coeffs[std::to_string(e)] = c.str();
    return {{"kind", pdgenus::to_string(kind_)}, {"coeffs", coeffs}};
  }

  static GenusPolynomial from_json(const nlohmann::json& j) {
    try {
      const std::string kind = j.at("kind").get<std::string>();
      GenusPolynomial p;
      if (kind == "euler") {
        p.kind_ = PolyKind::euler;
      } else if (kind == "orientable") {
        p.kind_ = PolyKind::orientable;
      } else {
        throw ParseError("unknown polynomial kind '" + kind + "'");
      }
      for (const auto& [e, c] : j.at("coeffs").items()) {
        p.add_term(std::stoull(e), BigInt(c.get<std::string>()));
      }
      return p;
    } catch (const ParseError&) {
      throw;
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(std::string("malformed polynomial JSON: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
      throw ParseError(std::string("malformed polynomial JSON: ") + ex.what());
    } catch (const std::runtime_error& ex) {
      throw ParseError(std::string("malformed polynomial JSON: ") + ex.what());
    }
  }

  friend bool operator==(const GenusPolynomial& a, const GenusPolynomial& b) {
    return a.kind_ == b.kind_ && a.terms_ == b.terms_;
  }

  friend std::ostream& operator<<(std::ostream& os, const GenusPolynomial& p) { return os << p.to_string(); }

 private:
  void require_same_kind(const GenusPolynomial& o) const {
    if (kind_ != o.kind_) throw PreconditionError("polynomial kinds differ");
  }

  PolyKind kind_ = PolyKind::euler;
  Terms terms_;
};

inline GenusPolynomial poly_multiply(const GenusPolynomial& p, const GenusPolynomial& q) { return p * q; }

}  // namespace pdgenus
