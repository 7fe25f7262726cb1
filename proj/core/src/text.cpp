#include "schubbd/text.hpp"

#include <sstream>
#include <vector>

namespace schubbd {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    // trim blanks
    const auto b = token.find_first_not_of(" \t");
    const auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos)
      out.emplace_back();
    else
      out.push_back(token.substr(b, e - b + 1));
  }
  return out;
}

int parse_int(const std::string& token) {
  size_t used = 0;
  int value;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + token + "'");
  }
  if (used != token.size()) throw ParseError("trailing junk in '" + token + "'");
  return value;
}

}  // namespace

SignedPermutation parse_signed_perm(const std::string& text, int rank,
                                    LieType type) {
  std::vector<int> images;
  for (const auto& token : split_commas(text)) images.push_back(parse_int(token));
  if (static_cast<int>(images.size()) != rank)
    throw ParseError("expected " + std::to_string(rank) + " entries");
  return SignedPermutation::make(std::move(images), type);
}

std::string format_signed_perm(const SignedPermutation& w) {
  std::ostringstream os;
  for (int i = 1; i <= w.rank(); ++i) {
    if (i > 1) os << ',';
    os << w(i);
  }
  return os.str();
}

Clan parse_clan(const std::string& text) {
  if (text.find_first_not_of(" \t") == std::string::npos)
    throw ParseError("empty clan");
  std::vector<ClanChar> chars;
  for (const auto& token : split_commas(text)) {
    if (token == "+")
      chars.push_back(ClanChar::plus());
    else if (token == "-")
      chars.push_back(ClanChar::minus());
    else {
      const int id = parse_int(token);
      if (id < 1) throw ParseError("pair labels must be positive");
      chars.push_back(ClanChar::number(id));
    }
  }
  return Clan::normalize(std::move(chars));
}

std::string format_clan_parens(const Clan& clan) {
  return "(" + clan.to_string() + ")";
}

Word parse_word(const std::string& text, int rank) {
  Word word;
  std::string body = text;
  if (!body.empty() && body.front() == '[' && body.back() == ']')
    body = body.substr(1, body.size() - 2);
  if (body.empty()) return word;
  for (const auto& token : split_commas(body)) {
    const int letter = parse_int(token);
    if (letter < 1 || letter > rank)
      throw ParseError("letter out of range: " + token);
    word.letters.push_back(letter);
  }
  return word;
}

std::string format_word_brackets(const Word& word) {
  std::ostringstream os;
  os << '[';
  for (size_t k = 0; k < word.letters.size(); ++k) {
    if (k > 0) os << ", ";
    os << word.letters[k];
  }
  os << ']';
  return os.str();
}

std::string format_word_plain(const Word& word) {
  std::ostringstream os;
  for (size_t k = 0; k < word.letters.size(); ++k) {
    if (k > 0) os << ',';
    os << word.letters[k];
  }
  return os.str();
}

}  // namespace schubbd
