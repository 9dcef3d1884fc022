#include "ge/braid.hpp"

#include <cctype>
#include <random>
#include <sstream>

#include "ge/errors.hpp"
#include "ge/rng.hpp"

namespace ge {

namespace {

void check_letter(int strands, int letter) {
  if (letter == 0) throw ValidationError("braid letter 0 is not a generator");
  const int idx = letter > 0 ? letter : -letter;
  if (idx > strands - 1)
    throw RangeError("generator index " + std::to_string(idx) + " exceeds " +
                     std::to_string(strands - 1) + " on " + std::to_string(strands) +
                     " strands");
}

} // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw ValidationError("braid words need at least 2 strands");
  for (int letter : letters_) check_letter(strands_, letter);
}

BraidWord BraidWord::operator*(const BraidWord &rhs) const {
  if (strands_ != rhs.strands_)
    throw ValidationError("cannot concatenate words on different strand counts");
  std::vector<int> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int &letter : out) letter = -letter;
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::power(int e) const {
  const BraidWord base = e >= 0 ? *this : inverse();
  std::vector<int> out;
  for (int i = 0; i < (e >= 0 ? e : -e); ++i)
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord parse_word(const std::string &text, int strands) {
  if (strands < 2) throw ValidationError("braid words need at least 2 strands");
  std::istringstream in(text);
  std::vector<int> letters;
  std::string token;
  int position = 0;
  while (in >> token) {
    ++position;
    const std::string where = "token " + std::to_string(position) + " ('" + token + "')";
    std::size_t i = 0;
    int sign = 1;
    if (token[i] == '+' || token[i] == '-') {
      if (token[i] == '-') sign = -1;
      ++i;
    }
    std::size_t digits = 0;
    long index = 0;
    while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) {
      index = index * 10 + (token[i] - '0');
      if (index > strands) index = strands; // clamp; range check below reports it
      ++i;
      ++digits;
    }
    if (digits == 0) throw ParseError(where + ": expected a generator index");
    long repeat = 1;
    if (i < token.size()) {
      if (token[i] != '^') throw ParseError(where + ": unexpected character '" + token[i] + "'");
      ++i;
      std::size_t exp_digits = 0;
      repeat = 0;
      while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) {
        repeat = repeat * 10 + (token[i] - '0');
        if (repeat > 1'000'000) throw RangeError(where + ": exponent too large");
        ++i;
        ++exp_digits;
      }
      if (exp_digits == 0 || i != token.size())
        throw ParseError(where + ": malformed exponent");
      if (repeat < 1) throw ParseError(where + ": exponent must be at least 1");
    }
    if (index < 1) throw ParseError(where + ": generator index must be at least 1");
    if (index > strands - 1)
      throw RangeError(where + ": generator index out of range [1, " +
                       std::to_string(strands - 1) + "]");
    for (long r = 0; r < repeat; ++r) letters.push_back(sign * static_cast<int>(index));
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_word(const BraidWord &w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.letters()[i]);
  }
  return out;
}

Int writhe(const BraidWord &w) {
  Int sum = 0;
  for (int letter : w.letters()) sum = checked_add(sum, letter > 0 ? 1 : -1);
  return sum;
}

Permutation permutation(const BraidWord &w) {
  // Fold left over letters; composition applies the rightmost letter first.
  Permutation acc = Permutation::identity(w.strands());
  for (int letter : w.letters()) {
    const int k = letter > 0 ? letter : -letter;
    acc = acc * Permutation::transposition(w.strands(), k, k + 1);
  }
  return acc;
}

BraidWord free_reduce(const BraidWord &w) {
  std::vector<int> stack;
  for (int letter : w.letters()) {
    if (!stack.empty() && stack.back() == -letter)
      stack.pop_back();
    else
      stack.push_back(letter);
  }
  return BraidWord(w.strands(), std::move(stack));
}

BraidWord random_word(int strands, std::size_t length, std::uint64_t seed) {
  if (strands < 2) throw ValidationError("braid words need at least 2 strands");
  std::mt19937_64 rng(seed);
  const std::uint64_t alphabet = 2u * static_cast<std::uint64_t>(strands - 1);
  std::vector<int> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    const std::uint64_t r = uniform_below(rng, alphabet);
    const int index = static_cast<int>(r % static_cast<std::uint64_t>(strands - 1)) + 1;
    letters.push_back(r < static_cast<std::uint64_t>(strands - 1) ? index : -index);
  }
  return BraidWord(strands, std::move(letters));
}

} // namespace ge
