#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mcshane {

/// Generators of the free group on A, B. Lowercase letters are inverses.
/// The enum order A < a < B < b is the lexicographic order of words.
enum class Letter : std::uint8_t { A = 0, a = 1, B = 2, b = 3 };

constexpr Letter inverse(Letter l) { return static_cast<Letter>(static_cast<std::uint8_t>(l) ^ 1u); }
char to_char(Letter l);

/// Freely reduced word over {A, a, B, b}.
class Word {
 public:
  Word() = default;
  /// Parses e.g. "ABab"; the result is freely reduced.
  static Word parse(std::string_view text);
  static Word letter(Letter l);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Appends with free cancellation.
  Word& push_back(Letter l);
  void pop_back() { letters_.pop_back(); }
  Word inverse() const;
  /// Replaces every B^(+-1) by B^(-+1).
  Word flip_b() const;

  friend Word operator*(const Word& x, const Word& y);
  friend bool operator==(const Word& x, const Word& y) = default;
  /// Shortlex order: shorter first, then lexicographic.
  friend bool operator<(const Word& x, const Word& y);

  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

/// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicDecomposition {
  Word conjugator;
  Word core;
};
CyclicDecomposition cyclically_reduce(const Word& w);

/// Commutator x y x^-1 y^-1.
Word commutator(const Word& x, const Word& y);

}  // namespace mcshane
