#ifndef LIEALG_IO_HPP
#define LIEALG_IO_HPP

#include <string>

#include "liealg/lie_algebra.hpp"

namespace liealg {

/// Text grammar:
///   line 1: `dim <n>`; line 2: `field Q` or `field GF(<p>)`;
///   bracket lines: `[i,j] = <term> (+ <term>)*`,
///   term := <coeff>*<k> | <k>, coeff := integer | integer/integer (Q only);
///   1 <= i < j <= n; unlisted brackets are zero; `#` comments.
/// A leading `{` selects the JSON mirror instead.
/// Throws ParseError (position) or ValidationError (Jacobi triple).
LieAlgebra parse_algebra(const std::string& text);

/// Inverse of parse_algebra: parse(serialize(L)) == L bit-for-bit.
std::string serialize_algebra(const LieAlgebra& L);

/// JSON mirror: {"dim":n, "field":"GF(3)", "brackets":[[i,j,[[k,"c"],...]],...]}
std::string serialize_algebra_json(const LieAlgebra& L);

LieAlgebra load_algebra_file(const std::string& path);

}  // namespace liealg

#endif
