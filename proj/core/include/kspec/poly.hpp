#pragma once

// Exact homogeneous polynomials over Q: parsing, differentiation and the
// generic linear form used by the torsion/free splitting.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kspec {

using Rational = mpq_class;
using Exponent = std::vector<int>;

/// Terms are kept in descending lexicographic order of exponent vectors, so
/// x^2 comes before x*y which comes before y^2.
using TermMap = std::map<Exponent, Rational, std::greater<>>;

class HomogeneousPoly {
 public:
  HomogeneousPoly() = default;

  /// Validates and collects `terms`; throws std::invalid_argument if the
  /// exponent vectors have the wrong length or mixed total degree, or if
  /// the polynomial is zero (its degree would be undefined).
  HomogeneousPoly(int n, TermMap terms);

  /// The zero polynomial, carrying an explicit degree. Only produced by
  /// differentiation; never by the parser.
  static HomogeneousPoly zero(int n, int d);

  int num_vars() const { return n_; }
  int degree() const { return d_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  HomogeneousPoly derivative(int var) const;
  std::vector<HomogeneousPoly> partials() const;

  HomogeneousPoly operator*(const HomogeneousPoly& other) const;
  HomogeneousPoly operator+(const HomogeneousPoly& other) const;
  HomogeneousPoly scaled(const Rational& c) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  /// Rescales by a nonzero rational so that all coefficients are coprime
  /// integers with a positive leading coefficient. The Koszul and de Rham
  /// data of f only depend on f up to such a scalar.
  HomogeneousPoly primitive() const;

  /// Canonical text in the input grammar, e.g. "x^2*y^2 + z^4".
  std::string to_string(const std::vector<std::string>& vars) const;

  friend bool operator==(const HomogeneousPoly&, const HomogeneousPoly&) = default;

 private:
  int n_ = 0;
  int d_ = 0;
  TermMap terms_;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, NotHomogeneous, UnknownVariable };
  ParseError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Parses `text` over the ordered variable list `vars` (n >= 2).
HomogeneousPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

/// Splits "x,y,z" into names. Empty entries are rejected.
std::vector<std::string> split_vars(std::string_view list);

/// Parses "p", "-p" or "p/q" into a reduced rational.
Rational parse_rational(std::string_view text);

/// Deterministic coefficients in [1, 2^20] drawn from a 64-bit Mersenne
/// twister seeded with `seed`.
std::vector<std::int64_t> generic_linear_form(int n, std::uint64_t seed);

std::string rational_to_string(const Rational& q);

}  // namespace kspec
