#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "bolalg/envelope.hpp"
#include "bolalg/module.hpp"

namespace bolalg {

/// Line-oriented text formats. '#' starts a comment, blank lines are
/// ignored, indices are 1-based, unspecified entries are zero.
///
///   bolalg 1 | liealg 1
///   dim <n>
///   field Q
///   bin <i> <j> = q1 ... qn        (bolalg: e_i·e_j; liealg: [e_i,e_j])
///   ter <i> <j> <k> = q1 ... qn    (bolalg only)
///
///   bolmod 1
///   algdim <n>
///   moddim <m>
///   Lact <i> = row ; row ; ...     (m rows of m rationals)
///   Ract <i> = ...                 (optional; defaults to -Lact)
///   vbb|bvb|bbv <i> <j> = ...
///
///   bolmap 1
///   shape <rows> <cols>
///   row <i> = q1 ... q_cols
///
/// Malformed input raises ParseError carrying the line number.
using AnyAlgebra = std::variant<BolAlgebra, LieAlgebra>;

AnyAlgebra parse_algebra(std::string_view text);
BolAlgebra parse_bol_algebra(std::string_view text);
LieAlgebra parse_lie_algebra(std::string_view text);
BolModule parse_module(std::string_view text);
Matrix parse_map(std::string_view text);

/// Sparse writers; the output parses back to an equal value.
std::string format_algebra(const BolAlgebra& algebra);
std::string format_algebra(const LieAlgebra& algebra);
std::string format_module(const BolModule& module);
std::string format_map(const Matrix& map);
/// Lie algebra file followed by a comment block naming the wedge coordinates.
std::string format_envelope(const EnvelopingAlgebra& envelope);

/// "1,-2/3,0" -> vector. Throws ParseError (line 0) on malformed input.
Vector parse_vector(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace bolalg
