#pragma once

#include <initializer_list>
#include <vector>

#include "linalg.hpp"

namespace fixtures {

inline codered::Word word(std::uint32_t q, std::initializer_list<codered::Elem> values) {
  std::vector<codered::Elem> v(values);
  return codered::Word::from_values(codered::Field::get(q), v);
}

inline codered::Matrix matrix(std::uint32_t q, std::initializer_list<std::initializer_list<codered::Elem>> rows) {
  std::vector<codered::Word> out;
  for (auto r : rows) out.push_back(word(q, r));
  return codered::Matrix(std::move(out));
}

inline std::vector<codered::Elem> values(const codered::Word& w) { return w.values(); }

}  // namespace fixtures
