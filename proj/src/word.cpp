#include "mcshane/word.hpp"

#include "mcshane/scalar.hpp"

#include <algorithm>

namespace mcshane {

char to_char(Letter l) {
  switch (l) {
    case Letter::A: return 'A';
    case Letter::a: return 'a';
    case Letter::B: return 'B';
    case Letter::b: return 'b';
  }
  return '?';
}

Word Word::parse(std::string_view text) {
  Word w;
  for (char ch : text) {
    switch (ch) {
      case 'A': w.push_back(Letter::A); break;
      case 'a': w.push_back(Letter::a); break;
      case 'B': w.push_back(Letter::B); break;
      case 'b': w.push_back(Letter::b); break;
      default: throw DomainError(std::string("bad letter '") + ch + "' in word");
    }
  }
  return w;
}

Word Word::letter(Letter l) {
  Word w;
  w.letters_.push_back(l);
  return w;
}

Word& Word::push_back(Letter l) {
  if (!letters_.empty() && letters_.back() == mcshane::inverse(l)) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
  return *this;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(mcshane::inverse(*it));
  return w;
}

Word Word::flip_b() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (Letter l : letters_)
    w.letters_.push_back((l == Letter::B || l == Letter::b) ? mcshane::inverse(l) : l);
  return w;
}

Word operator*(const Word& x, const Word& y) {
  Word w = x;
  for (Letter l : y.letters_) w.push_back(l);
  return w;
}

bool operator<(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return std::lexicographical_compare(x.letters_.begin(), x.letters_.end(), y.letters_.begin(),
                                      y.letters_.end());
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(to_char(l));
  return s;
}

CyclicDecomposition cyclically_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t i = 0;
  std::size_t j = ls.size();
  while (j - i >= 2 && ls[i] == inverse(ls[j - 1])) {
    ++i;
    --j;
  }
  CyclicDecomposition out;
  for (std::size_t k = 0; k < i; ++k) out.conjugator.push_back(ls[k]);
  for (std::size_t k = i; k < j; ++k) out.core.push_back(ls[k]);
  return out;
}

Word commutator(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

}  // namespace mcshane
