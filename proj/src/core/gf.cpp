#include "gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "error.hpp"

namespace codered {
namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients low to high

Poly digits(Elem a, std::uint32_t p, std::uint32_t m) {
  Poly d(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

Elem undigits(const Poly& d, std::uint32_t p) {
  Elem a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e != 0; e >>= 1) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a monic-or-not nonzero divisor b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t f = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - f) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t low = 0; low < count; ++low) {
      Poly g = digits(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  Poly r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  Poly out = poly_mod(r, f, p);
  out.resize(f.size() - 1, 0);
  return out;
}

}  // namespace

bool prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& m) {
  if (q < 2) return false;
  std::uint32_t s = 2;
  while (s * s <= q && q % s != 0) ++s;
  if (q % s != 0) s = q;
  p = s;
  m = 0;
  while (q % s == 0) {
    q /= s;
    ++m;
  }
  return q == 1;
}

const Field& Field::get(std::uint32_t q) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::unique_ptr<Field>> cache;
  std::uint32_t p = 0, m = 0;
  if (q > kMaxFieldOrder || !prime_power(q, p, m)) {
    throw UsageError("field order " + std::to_string(q) +
                     " is not a prime power in [2, 65536]");
  }
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[q];
  if (!slot) slot.reset(new Field(p, m));
  return *slot;
}

Field::Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m), q_(1) {
  for (std::uint32_t i = 0; i < m; ++i) q_ *= p;

  neg_.resize(q_);
  inv_.assign(q_, 0);

  if (m == 1) {
    modulus_ = {0, 1};
    for (Elem a = 0; a < q_; ++a) neg_[a] = a == 0 ? 0 : p - a;
    for (Elem a = 1; a < q_; ++a) inv_[a] = inv_mod(a, p);
    return;
  }

  // Monic irreducible whose low coefficients encode to the smallest integer.
  for (Elem low = 0;; ++low) {
    Poly f = digits(low, p, m);
    f.push_back(1);
    if (is_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }

  for (Elem a = 0; a < q_; ++a) {
    Poly d = digits(a, p, m);
    for (auto& c : d) c = c == 0 ? 0 : p - c;
    neg_[a] = undigits(d, p);
  }
  if (p != 2 && q_ <= 1024) {
    add_table_.resize(std::size_t{q_} * q_);
    for (Elem a = 0; a < q_; ++a) {
      Poly da = digits(a, p, m);
      for (Elem b = 0; b < q_; ++b) {
        Poly db = digits(b, p, m);
        for (std::uint32_t i = 0; i < m; ++i) db[i] = (da[i] + db[i]) % p;
        add_table_[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(undigits(db, p));
      }
    }
  }

  // The modulus need not be primitive, so search for a generator of the
  // multiplicative group.
  const std::uint32_t order = q_ - 1;
  for (Elem g = 2;; ++g) {
    Poly gp = digits(g, p, m);
    std::vector<Elem> powers;
    powers.reserve(order);
    Poly cur = digits(1, p, m);
    bool full = true;
    for (std::uint32_t i = 0; i < order; ++i) {
      const Elem e = undigits(cur, p);
      if (i > 0 && e == 1) {
        full = false;
        break;
      }
      powers.push_back(e);
      cur = poly_mulmod(cur, gp, modulus_, p);
    }
    if (!full) continue;
    log_.assign(q_, 0);
    exp_.resize(2 * std::size_t{order});
    for (std::uint32_t i = 0; i < order; ++i) {
      log_[powers[i]] = i;
      exp_[i] = exp_[i + order] = powers[i];
    }
    break;
  }
  for (Elem a = 1; a < q_; ++a) inv_[a] = exp_[(order - log_[a]) % order];
}

Elem Field::add_digits(Elem a, Elem b) const {
  if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
  Elem r = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Elem Field::inv(Elem a) const {
  if (a == 0 || a >= q_) throw DomainError("zero has no multiplicative inverse");
  return inv_[a];
}

std::string Field::spec_json() const {
  std::ostringstream out;
  out << "{\"p\":" << p_ << ",\"m\":" << m_ << ",\"poly\":[";
  for (std::size_t i = 0; i < modulus_.size(); ++i) out << (i ? "," : "") << modulus_[i];
  out << "]}";
  return out.str();
}

}  // namespace codered
