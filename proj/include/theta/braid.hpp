#pragma once

// Braid groups B_n: words, permutation braids, Garside left normal forms and
// the Artin action on the free group (used as an independent equality oracle).

#include <cstdint>
#include <string>
#include <vector>

namespace theta::braid {

/// One Artin generator s_index (index in 1..n-1) or its inverse.
struct Letter {
  int index = 1;
  bool inverse = false;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A free word in the Artin generators of B_n.
class BraidWord {
 public:
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<Letter> letters);

  /// Builds a word from signed indices: +i is s_i, -i is s_i^{-1}.
  static BraidWord from_signed(int strands, const std::vector<int>& indices);
  /// Positive reduced word of the half-twist Δ.
  static BraidWord half_twist(int strands);
  static BraidWord generator(int strands, int index, bool inverse = false);

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void append(Letter letter);
  BraidWord inverse() const;
  BraidWord power(long exponent) const;

  friend BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

/// Formats a word as whitespace-separated `s<i>` / `S<i>` tokens.
std::string to_string(const BraidWord& w);

/// A permutation of {0..n-1}; images()[j] is the image of j.
/// Composition follows functions: (p * q)(j) = p(q(j)).
class Permutation {
 public:
  explicit Permutation(int size);  // identity
  explicit Permutation(std::vector<int> images);
  /// From 1-based one-line notation.
  static Permutation from_one_line(const std::vector<int>& one_line);
  static Permutation transposition(int size, int index);  // swaps index-1, index
  static Permutation reversal(int size);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& images() const { return images_; }
  std::vector<int> one_line() const;

  Permutation inverse() const;
  bool is_identity() const;
  bool is_reversal() const;
  int inversions() const;

  /// Bit i-1 set iff s_i is a right descent: the braid factors as X·s_i.
  std::uint64_t finishing_set() const;
  /// Bit i-1 set iff s_i is a left descent: the braid factors as s_i·X.
  std::uint64_t starting_set() const;

  /// Positive reduced word whose permutation is *this.
  BraidWord reduced_word() const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Δ^infimum · A_1 ⋯ A_k with each A_i a proper permutation braid and every
/// adjacent pair left-weighted.
struct CanonicalForm {
  int strands = 2;
  long infimum = 0;
  std::vector<Permutation> factors;

  bool is_central_power() const { return factors.empty() && infimum % 2 == 0; }
  /// Expands the form back into a braid word.
  BraidWord to_word() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Text form "Δ^p · [..] · [..]" with factors in 1-based one-line notation.
std::string to_string(const CanonicalForm& form);

Permutation permutation_of(const BraidWord& w);
CanonicalForm left_normal_form(const BraidWord& w);

/// Throws std::invalid_argument on strand-count mismatch.
bool equals(const BraidWord& u, const BraidWord& v);
bool equals_mod_center(const BraidWord& u, const BraidWord& v);

/// The Δ-conjugation automorphism s_i -> s_{n-i}.
BraidWord flip(const BraidWord& w);

/// Normal form reduced modulo the full twist Δ²: two braids have equal keys
/// iff they agree in B_n / Z(B_n) (n >= 3).
CanonicalForm center_class_key(const BraidWord& w);

// ---------------------------------------------------------------------------
// Artin action on the free group F_n.

/// Freely reduced word in x_1..x_n; letter +j is x_j, -j is x_j^{-1}.
using FreeWord = std::vector<int>;

struct FreeGroupEndomorphism {
  std::vector<FreeWord> images;  // images[j-1] is the image of x_j

  friend bool operator==(const FreeGroupEndomorphism&,
                         const FreeGroupEndomorphism&) = default;
};

/// Endomorphism of F_n induced by w. Two words are equal in B_n iff their
/// actions agree.
FreeGroupEndomorphism artin_action(const BraidWord& w);

}  // namespace theta::braid
