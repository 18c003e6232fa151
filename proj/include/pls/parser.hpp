#pragma once

#include <string_view>

#include "pls/sentence.hpp"

namespace pls {

// Parse a sentence from its concrete syntax.
//
//   atoms        [a-z][a-z0-9_]*          constants   top, bot
//   negation     ~s
//   binary, loosest-binding last:
//     &                     left associative
//     \/                    left associative
//     |  @   (same level)   left associative
//     ->                    right associative
//     <->                   left associative
//
// '\/', '->', '<->' and '@' are rewritten during parsing (see sentence.hpp);
// the result never contains them as nodes.  Throws ParseError with the byte
// offset of the offending token.
Sentence parse(std::string_view input);

}  // namespace pls
