#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace codered {

// Field elements are plain integers in [0, q). For prime fields the integer is
// the residue; for extension fields it is the base-p digit string of the
// polynomial coefficients, lowest degree first.
using Elem = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

// Finite field GF(p^m). Instances are interned and immutable: Field::get
// returns the same object for the same order, so two fields are equal exactly
// when their addresses are.
class Field {
 public:
  static const Field& get(std::uint32_t q);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint32_t q() const { return q_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  bool is_binary() const { return q_ == 2; }

  // Monic modulus, coefficients low to high. Prime fields report x.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool contains(Elem a) const { return a < q_; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
      Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_digits(a, b);
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (m_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
    return exp_[log_[a] + log_[b]];
  }
  // Throws DomainError for a = 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  // JSON object {"p":..,"m":..,"poly":[..]}.
  std::string spec_json() const;

 private:
  Field(std::uint32_t p, std::uint32_t m);
  Elem add_digits(Elem a, Elem b) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;  // doubled so log sums need no reduction
  std::vector<std::uint16_t> add_table_;  // odd-characteristic extensions only
};

// Decomposes q = p^m with p prime; returns false if q is not a prime power.
bool prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& m);

}  // namespace codered
