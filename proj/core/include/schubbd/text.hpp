#pragma once

#include <string>

#include "schubbd/clan.hpp"
#include "schubbd/signed_permutation.hpp"

namespace schubbd {

// One-line notation as comma-separated signed integers, e.g. "-2,-3,-4,1".
SignedPermutation parse_signed_perm(const std::string& text, int rank,
                                    LieType type);
std::string format_signed_perm(const SignedPermutation& w);

// Clan text format: comma-separated "+", "-" or decimal pair labels,
// e.g. "-,1,2,-,-,-,1,2,-".
Clan parse_clan(const std::string& text);

// Reference-table rendering, e.g. "(1,-,-,2,-,1,-,-,2)".
std::string format_clan_parens(const Clan& clan);

// Word rendering in the style of the reference tables: "[2, 1, 3, 2, 4]".
Word parse_word(const std::string& text, int rank);
std::string format_word_brackets(const Word& word);
std::string format_word_plain(const Word& word);  // "2,1,3,2,4"

}  // namespace schubbd
