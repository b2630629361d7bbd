#pragma once

#include <optional>

#include "linalg.hpp"

namespace codered {

// Basis of the subcode {c in C(B) : c_i = 0 for all i in S}. Returns nullopt
// when the subcode is trivial.
std::optional<CodeBasis> special_subcode(const CodeBasis& b, const Mask& s);

struct PrimitivityResult {
  bool primitive = false;
  // Nonzero codeword with support strictly inside Supp(c) when not primitive.
  std::optional<Word> witness;
};

// c must be a nonzero codeword of C(B).
PrimitivityResult is_primitive(const CodeBasis& b, const Word& c);

// Primitive codeword whose support is contained in Supp(c).
Word make_primitive(const CodeBasis& b, const Word& c);

// Invertible k x k matrix A such that A*B is proper with first row p.
// p must be a primitive codeword of C(B).
Matrix insert_primitive(const CodeBasis& b, const Word& p);

}  // namespace codered
