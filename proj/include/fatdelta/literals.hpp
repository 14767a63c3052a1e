#pragma once

#include "fatdelta/word.hpp"

#include <string>
#include <string_view>

namespace fatdelta {

// Text forms:
//   map       m->n:[i0,...,im]
//   object    edge string over {-,=}, or a fibre list (g0,...,gn); "()" is empty
//   letter    d3 s1 v2 b2.0
//   word      <object> | l1;l2;...
//   morphism  {"dom": "<edges>", "cod": "<edges>", "top": [...], "bot": [...]}
// Syntax errors throw Error with the offending position.

MonotoneMap parse_map(std::string_view text);
FatObject parse_object(std::string_view text);
Letter parse_letter(std::string_view text);
Word parse_word(std::string_view text);
FatMorphism parse_morphism(std::string_view json_text);

/// Edge string, or "()" for the empty object.
std::string format_object(const FatObject& o);
/// Compact one-line JSON.
std::string format_morphism(const FatMorphism& f);

} // namespace fatdelta
