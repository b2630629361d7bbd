#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gf.hpp"

namespace codered {

// Set of coordinate indices in [0, n), bit-packed.
class Mask {
 public:
  Mask() = default;
  explicit Mask(std::size_t n) : n_(n), bits_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Mask& operator|=(const Mask& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
  }
  Mask complement() const;
  std::vector<std::size_t> indices() const;
  bool operator==(const Mask& o) const { return n_ == o.n_ && bits_ == o.bits_; }

  std::span<const std::uint64_t> words() const { return bits_; }
  std::span<std::uint64_t> words() { return bits_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Vector in F_q^n. Binary words are bit-packed; other fields store one
// uint16_t per coordinate.
class Word {
 public:
  Word() = default;
  Word(const Field& f, std::size_t n);
  static Word from_values(const Field& f, std::span<const Elem> values);

  const Field& field() const { return *field_; }
  std::size_t size() const { return n_; }
  bool binary() const { return field_->is_binary(); }

  Elem get(std::size_t i) const {
    if (binary()) return static_cast<Elem>((bits_[i >> 6] >> (i & 63)) & 1u);
    return vals_[i];
  }
  Elem operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, Elem v);
  std::vector<Elem> values() const;

  std::size_t weight() const;
  bool is_zero() const;
  // Index of the first nonzero coordinate, or size() if there is none.
  std::size_t first_nonzero() const;
  std::vector<std::size_t> support() const;
  Mask support_mask() const;

  // this += c * other
  void add_scaled(const Word& other, Elem c);
  Word& operator+=(const Word& other) {
    add_scaled(other, 1);
    return *this;
  }
  void scale(Elem c);

  // Projection that zeroes the coordinates in s, and its complement.
  Word projected_off(const Mask& s) const;
  Word projected_on(const Mask& s) const;
  std::size_t weight_off(const Mask& s) const;
  std::size_t weight_on(const Mask& s) const;

  bool operator==(const Word& o) const;
  // Lexicographic in coordinate order, comparing element encodings.
  bool lex_less(const Word& o) const;

  std::span<const std::uint64_t> bits() const { return bits_; }
  std::span<std::uint64_t> bits() { return bits_; }

 private:
  const Field* field_ = nullptr;
  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint16_t> vals_;
};

}  // namespace codered
