#include "word.hpp"

#include <algorithm>

#include "error.hpp"

namespace codered {
namespace {

void require_same_shape(const Word& a, const Word& b) {
  if (&a.field() != &b.field()) throw UsageError("words over different fields");
  if (a.size() != b.size()) throw UsageError("words of different lengths");
}

void require_mask(const Word& w, const Mask& s) {
  if (s.size() != w.size()) throw UsageError("coordinate set length does not match word length");
}

}  // namespace

Mask Mask::complement() const {
  Mask out(n_);
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = ~bits_[i];
  if (n_ % 64 != 0 && !out.bits_.empty()) out.bits_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  return out;
}

std::vector<std::size_t> Mask::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    for (std::uint64_t b = bits_[w]; b != 0; b &= b - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(b)));
    }
  }
  return out;
}

Word::Word(const Field& f, std::size_t n) : field_(&f), n_(n) {
  if (f.is_binary()) {
    bits_.assign((n + 63) / 64, 0);
  } else {
    vals_.assign(n, 0);
  }
}

Word Word::from_values(const Field& f, std::span<const Elem> values) {
  Word w(f, values.size());
  for (std::size_t i = 0; i < values.size(); ++i) w.set(i, values[i]);
  return w;
}

void Word::set(std::size_t i, Elem v) {
  if (i >= n_) throw UsageError("coordinate index out of range");
  if (!field_->contains(v)) throw UsageError("value " + std::to_string(v) + " is not a field element");
  if (binary()) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (v) {
      bits_[i >> 6] |= bit;
    } else {
      bits_[i >> 6] &= ~bit;
    }
  } else {
    vals_[i] = static_cast<std::uint16_t>(v);
  }
}

std::vector<Elem> Word::values() const {
  std::vector<Elem> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = get(i);
  return out;
}

std::size_t Word::weight() const {
  std::size_t c = 0;
  if (binary()) {
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  } else {
    for (auto v : vals_) c += v != 0;
  }
  return c;
}

bool Word::is_zero() const {
  if (binary()) {
    for (auto w : bits_)
      if (w) return false;
    return true;
  }
  for (auto v : vals_)
    if (v) return false;
  return true;
}

std::size_t Word::first_nonzero() const {
  if (binary()) {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      if (bits_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits_[w]));
    }
    return n_;
  }
  for (std::size_t i = 0; i < n_; ++i)
    if (vals_[i]) return i;
  return n_;
}

std::vector<std::size_t> Word::support() const { return support_mask().indices(); }

Mask Word::support_mask() const {
  Mask m(n_);
  if (binary()) {
    auto dst = m.words();
    for (std::size_t w = 0; w < bits_.size(); ++w) dst[w] = bits_[w];
  } else {
    for (std::size_t i = 0; i < n_; ++i)
      if (vals_[i]) m.set(i);
  }
  return m;
}

void Word::add_scaled(const Word& other, Elem c) {
  require_same_shape(*this, other);
  if (c == 0) return;
  if (binary()) {
    for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] ^= other.bits_[w];
    return;
  }
  const Field& f = *field_;
  if (c == 1) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (other.vals_[i]) vals_[i] = static_cast<std::uint16_t>(f.add(vals_[i], other.vals_[i]));
    }
  } else {
    for (std::size_t i = 0; i < n_; ++i) {
      if (other.vals_[i]) {
        vals_[i] = static_cast<std::uint16_t>(f.add(vals_[i], f.mul(c, other.vals_[i])));
      }
    }
  }
}

void Word::scale(Elem c) {
  if (!field_->contains(c)) throw UsageError("scalar is not a field element");
  if (binary()) {
    if (c == 0) std::fill(bits_.begin(), bits_.end(), 0);
    return;
  }
  for (auto& v : vals_) v = static_cast<std::uint16_t>(field_->mul(c, v));
}

Word Word::projected_off(const Mask& s) const {
  require_mask(*this, s);
  Word out = *this;
  if (binary()) {
    auto sw = s.words();
    for (std::size_t w = 0; w < bits_.size(); ++w) out.bits_[w] &= ~sw[w];
  } else {
    for (std::size_t i = 0; i < n_; ++i)
      if (s.test(i)) out.vals_[i] = 0;
  }
  return out;
}

Word Word::projected_on(const Mask& s) const {
  require_mask(*this, s);
  Word out = *this;
  if (binary()) {
    auto sw = s.words();
    for (std::size_t w = 0; w < bits_.size(); ++w) out.bits_[w] &= sw[w];
  } else {
    for (std::size_t i = 0; i < n_; ++i)
      if (!s.test(i)) out.vals_[i] = 0;
  }
  return out;
}

std::size_t Word::weight_off(const Mask& s) const {
  require_mask(*this, s);
  std::size_t c = 0;
  if (binary()) {
    auto sw = s.words();
    for (std::size_t w = 0; w < bits_.size(); ++w)
      c += static_cast<std::size_t>(std::popcount(bits_[w] & ~sw[w]));
  } else {
    for (std::size_t i = 0; i < n_; ++i) c += vals_[i] != 0 && !s.test(i);
  }
  return c;
}

std::size_t Word::weight_on(const Mask& s) const {
  require_mask(*this, s);
  std::size_t c = 0;
  if (binary()) {
    auto sw = s.words();
    for (std::size_t w = 0; w < bits_.size(); ++w)
      c += static_cast<std::size_t>(std::popcount(bits_[w] & sw[w]));
  } else {
    for (std::size_t i = 0; i < n_; ++i) c += vals_[i] != 0 && s.test(i);
  }
  return c;
}

bool Word::operator==(const Word& o) const {
  return field_ == o.field_ && n_ == o.n_ && bits_ == o.bits_ && vals_ == o.vals_;
}

bool Word::lex_less(const Word& o) const {
  require_same_shape(*this, o);
  if (binary()) {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      const std::uint64_t diff = bits_[w] ^ o.bits_[w];
      if (diff) return (o.bits_[w] >> std::countr_zero(diff)) & 1u;
    }
    return false;
  }
  return vals_ < o.vals_;
}

}  // namespace codered
