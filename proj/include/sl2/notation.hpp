#pragma once

#include "sl2/class_set.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace sl2 {

/// ASCII bracket notation for class sets.
///
///   atom   := I | -I | G | G+ | C4+ | C4- | C2[SS] | C3[RAT] | C4[RAT]
///           | C3 LB RAT , RAT RB
///   LB     := <[  [  ]  (        RB := ]>  ]  [  )
///   set    := unary ( ( | & \ ) unary )*
///   unary  := - unary | ~ unary | primary ^c*
///   primary:= atom | { set? } | { set , set ... } | ( set )
///
/// C3 angles are in pi-units. At the ends 0, 1, 2 the closed brackets
/// adjoin parabolic classes and the angle brackets adjoin the hyperbolic
/// families: "[0" adds C2[++], "<[0" also C4+; "1]" adds C2[-+], "1]>"
/// also C4-; "[1" adds C2[--], "<[1" also C4-; "2]" adds C2[+-], "2]>"
/// also C4+. "-" negates, "~" inverts, "^c" complements.
ClassSet parse_notation(std::string_view text);

/// Deterministic rendering that prefers bracket forms and "{X}^c" when
/// the complement is shorter. parse_notation(format_notation(x)) == x.
std::string format_notation(const ClassSet& x);

/// A single class: "I", "-I", "C2[+-]", "C3[2/3]", "C4[-2]", with optional
/// leading "-" (negate) or "~" (invert).
ClassId parse_class_id(std::string_view text);

/// Factor list "X * Y * ...", each factor a single class optionally
/// followed by "^n" (n >= 1 repetitions).
std::vector<ClassId> parse_product(std::string_view text);

nlohmann::ordered_json to_json(const ClassSet& x);
ClassSet class_set_from_json(const nlohmann::ordered_json& j);

}  // namespace sl2
