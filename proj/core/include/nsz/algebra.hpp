#pragma once

// Multilinear algebra over Boolean variables. Monomials are products of
// literals x_v and (1 - x_v); every identity is taken modulo x^2 = x and
// x(1 - x) = 0, so a product containing both polarities of a variable is the
// distinguished ZERO monomial.

#include "nsz/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nsz {

using VarId = std::uint32_t;

/// Assignment to at most 64 variables, bit v holding x_v.
using PackedAssignment = std::uint64_t;
inline constexpr std::size_t kMaxPackedVars = 64;

class Monomial {
 public:
  /// The constant monomial 1.
  Monomial() = default;

  static Monomial zero();
  static Monomial literal(VarId var, bool positive);
  /// Canonicalizes: sorts, removes duplicates, collapses x*(1-x) to ZERO.
  static Monomial from_literals(std::vector<VarId> positives, std::vector<VarId> negatives);

  [[nodiscard]] bool is_zero() const noexcept { return zero_; }
  [[nodiscard]] bool is_one() const noexcept { return !zero_ && pos_.empty() && neg_.empty(); }
  [[nodiscard]] const std::vector<VarId>& positives() const noexcept { return pos_; }
  [[nodiscard]] const std::vector<VarId>& negatives() const noexcept { return neg_; }
  [[nodiscard]] std::size_t degree() const noexcept { return pos_.size() + neg_.size(); }
  [[nodiscard]] bool contains(VarId var, bool positive) const;
  [[nodiscard]] bool mentions(VarId var) const;

  /// True when every literal of *this occurs in `other`, or `other` is ZERO.
  [[nodiscard]] bool divides(const Monomial& other) const;
  /// `*this` with the literals of `divisor` removed; requires divisor.divides(*this).
  [[nodiscard]] Monomial quotient(const Monomial& divisor) const;

  /// Variables mentioned, ascending.
  [[nodiscard]] std::vector<VarId> variables() const;
  /// One past the largest variable index mentioned (0 for constants).
  [[nodiscard]] std::size_t span() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  bool zero_ = false;
  std::vector<VarId> pos_;
  std::vector<VarId> neg_;
};

/// Bit-mask form of a monomial over at most 64 variables.
struct PackedMonomial {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
  bool zero = false;

  [[nodiscard]] bool eval(PackedAssignment x) const noexcept {
    return !zero && (x & pos) == pos && (x & neg) == 0;
  }
  friend bool operator==(const PackedMonomial&, const PackedMonomial&) = default;
};

PackedMonomial pack(const Monomial& m);
Monomial unpack(const PackedMonomial& m);

class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<std::uint8_t> bits);
  static Assignment from_packed(PackedAssignment code, std::size_t var_count);
  static Assignment parse(std::string_view bits);

  [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
  [[nodiscard]] bool operator[](VarId v) const { return bits_.at(v) != 0; }
  [[nodiscard]] PackedAssignment packed() const;
  /// '0'/'1' characters in variable order.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

std::string format_bits(PackedAssignment code, std::size_t var_count);

/// 1 iff every positive literal is 1 and every negative literal is 0.
int mono_eval(const Monomial& m, const Assignment& x);
Monomial mono_mul(const Monomial& a, const Monomial& b);

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  static Polynomial constant(const Rational& c);
  static Polynomial term(const Monomial& m, const Rational& c = 1);

  /// Adds c*m; ZERO monomials and cancelled coefficients leave no entry.
  void add_term(const Monomial& m, const Rational& c);

  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

Rational poly_eval(const Polynomial& p, const Assignment& x);
Rational total_coefficient_size(const Polynomial& p);

/// Monomials whose sum is 1 - m on {0,1}^N:
/// 1 - l_1...l_k = sum_j (1 - l_j) l_1...l_{j-1}, literals in variable order.
std::vector<Monomial> expand_one_minus(const Monomial& m);

/// Text syntax "x3 !x7 x12": '!' marks negation, variables by index.
/// The constant monomial prints as "1" and ZERO as "0".
std::string format_monomial(const Monomial& m);
Monomial parse_monomial(std::string_view text);

}  // namespace nsz
