#include "nsz/algebra.hpp"

#include "nsz/errors.hpp"

#include <algorithm>
#include <sstream>

namespace nsz {

namespace {

void sort_unique(std::vector<VarId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool sorted_intersects(const std::vector<VarId>& a, const std::vector<VarId>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

}  // namespace

Monomial Monomial::zero() {
  Monomial m;
  m.zero_ = true;
  return m;
}

Monomial Monomial::literal(VarId var, bool positive) {
  Monomial m;
  (positive ? m.pos_ : m.neg_).push_back(var);
  return m;
}

Monomial Monomial::from_literals(std::vector<VarId> positives, std::vector<VarId> negatives) {
  sort_unique(positives);
  sort_unique(negatives);
  if (sorted_intersects(positives, negatives)) return zero();
  Monomial m;
  m.pos_ = std::move(positives);
  m.neg_ = std::move(negatives);
  return m;
}

bool Monomial::contains(VarId var, bool positive) const {
  const auto& v = positive ? pos_ : neg_;
  return std::binary_search(v.begin(), v.end(), var);
}

bool Monomial::mentions(VarId var) const { return contains(var, true) || contains(var, false); }

bool Monomial::divides(const Monomial& other) const {
  if (other.zero_) return true;
  if (zero_) return false;
  return std::includes(other.pos_.begin(), other.pos_.end(), pos_.begin(), pos_.end()) &&
         std::includes(other.neg_.begin(), other.neg_.end(), neg_.begin(), neg_.end());
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this) || zero_) throw StructuralError("quotient: divisor does not divide monomial");
  Monomial m;
  std::set_difference(pos_.begin(), pos_.end(), divisor.pos_.begin(), divisor.pos_.end(),
                      std::back_inserter(m.pos_));
  std::set_difference(neg_.begin(), neg_.end(), divisor.neg_.begin(), divisor.neg_.end(),
                      std::back_inserter(m.neg_));
  return m;
}

std::vector<VarId> Monomial::variables() const {
  std::vector<VarId> v;
  std::merge(pos_.begin(), pos_.end(), neg_.begin(), neg_.end(), std::back_inserter(v));
  return v;
}

std::size_t Monomial::span() const noexcept {
  std::size_t s = 0;
  if (!pos_.empty()) s = std::max<std::size_t>(s, pos_.back() + 1);
  if (!neg_.empty()) s = std::max<std::size_t>(s, neg_.back() + 1);
  return s;
}

PackedMonomial pack(const Monomial& m) {
  PackedMonomial p;
  if (m.is_zero()) {
    p.zero = true;
    return p;
  }
  if (m.span() > kMaxPackedVars) throw StructuralError("monomial mentions a variable beyond 64");
  for (VarId v : m.positives()) p.pos |= std::uint64_t{1} << v;
  for (VarId v : m.negatives()) p.neg |= std::uint64_t{1} << v;
  return p;
}

Monomial unpack(const PackedMonomial& m) {
  if (m.zero || (m.pos & m.neg) != 0) return Monomial::zero();
  std::vector<VarId> pos;
  std::vector<VarId> neg;
  for (VarId v = 0; v < 64; ++v) {
    if ((m.pos >> v) & 1U) pos.push_back(v);
    if ((m.neg >> v) & 1U) neg.push_back(v);
  }
  return Monomial::from_literals(std::move(pos), std::move(neg));
}

Assignment::Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) {
    if (b > 1) throw StructuralError("assignment entries must be 0 or 1");
  }
}

Assignment Assignment::from_packed(PackedAssignment code, std::size_t var_count) {
  if (var_count > kMaxPackedVars) throw StructuralError("packed assignments hold at most 64 variables");
  std::vector<std::uint8_t> bits(var_count);
  for (std::size_t v = 0; v < var_count; ++v) bits[v] = static_cast<std::uint8_t>((code >> v) & 1U);
  return Assignment(std::move(bits));
}

Assignment Assignment::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw FormatError("assignment must be a string of 0/1 characters");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Assignment(std::move(bits));
}

PackedAssignment Assignment::packed() const {
  if (bits_.size() > kMaxPackedVars) throw StructuralError("assignment too long to pack");
  PackedAssignment code = 0;
  for (std::size_t v = 0; v < bits_.size(); ++v) code |= static_cast<PackedAssignment>(bits_[v]) << v;
  return code;
}

std::string Assignment::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

std::string format_bits(PackedAssignment code, std::size_t var_count) {
  return Assignment::from_packed(code, var_count).to_string();
}

int mono_eval(const Monomial& m, const Assignment& x) {
  if (m.span() > x.size()) throw StructuralError("monomial mentions a variable outside the assignment");
  if (m.is_zero()) return 0;
  for (VarId v : m.positives()) {
    if (!x[v]) return 0;
  }
  for (VarId v : m.negatives()) {
    if (x[v]) return 0;
  }
  return 1;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  if (a.is_zero() || b.is_zero()) return Monomial::zero();
  std::vector<VarId> pos;
  std::vector<VarId> neg;
  std::set_union(a.positives().begin(), a.positives().end(), b.positives().begin(), b.positives().end(),
                 std::back_inserter(pos));
  std::set_union(a.negatives().begin(), a.negatives().end(), b.negatives().begin(), b.negatives().end(),
                 std::back_inserter(neg));
  if (sorted_intersects(pos, neg)) return Monomial::zero();
  return Monomial::from_literals(std::move(pos), std::move(neg));
}

Polynomial Polynomial::constant(const Rational& c) { return term(Monomial(), c); }

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.is_zero() || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  }
  return r;
}

Rational poly_eval(const Polynomial& p, const Assignment& x) {
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    if (mono_eval(m, x)) sum += c;
  }
  return sum;
}

Rational total_coefficient_size(const Polynomial& p) {
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) sum += abs(c);
  return sum;
}

std::vector<Monomial> expand_one_minus(const Monomial& m) {
  if (m.is_zero()) throw StructuralError("expand_one_minus: ZERO monomial");
  struct Lit {
    VarId var;
    bool positive;
  };
  std::vector<Lit> lits;
  for (VarId v : m.positives()) lits.push_back({v, true});
  for (VarId v : m.negatives()) lits.push_back({v, false});
  std::sort(lits.begin(), lits.end(), [](const Lit& a, const Lit& b) { return a.var < b.var; });

  std::vector<Monomial> out;
  Monomial prefix;
  for (const auto& lit : lits) {
    out.push_back(mono_mul(prefix, Monomial::literal(lit.var, !lit.positive)));
    prefix = mono_mul(prefix, Monomial::literal(lit.var, lit.positive));
  }
  return out;
}

std::string format_monomial(const Monomial& m) {
  if (m.is_zero()) return "0";
  if (m.is_one()) return "1";
  std::string out;
  auto p = m.positives().begin();
  auto n = m.negatives().begin();
  while (p != m.positives().end() || n != m.negatives().end()) {
    bool take_pos = n == m.negatives().end() || (p != m.positives().end() && *p < *n);
    if (!out.empty()) out += ' ';
    if (take_pos) {
      out += "x" + std::to_string(*p++);
    } else {
      out += "!x" + std::to_string(*n++);
    }
  }
  return out;
}

Monomial parse_monomial(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<std::string> toks;
  while (in >> tok) toks.push_back(tok);
  if (toks.size() == 1 && toks[0] == "0") return Monomial::zero();
  if (toks.size() == 1 && toks[0] == "1") return Monomial();
  if (toks.empty()) throw FormatError("empty monomial text (use \"1\" for the constant)");
  std::vector<VarId> pos;
  std::vector<VarId> neg;
  for (const auto& t : toks) {
    bool negative = !t.empty() && t[0] == '!';
    std::string_view body = std::string_view(t).substr(negative ? 1 : 0);
    if (body.size() < 2 || body[0] != 'x' ||
        !std::all_of(body.begin() + 1, body.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw FormatError("bad literal '" + t + "' in monomial");
    }
    auto v = static_cast<VarId>(std::stoul(std::string(body.substr(1))));
    (negative ? neg : pos).push_back(v);
  }
  auto m = Monomial::from_literals(pos, neg);
  if (m.is_zero()) throw FormatError("monomial text contains both polarities of a variable; write \"0\"");
  return m;
}

}  // namespace nsz
