#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidtk/errors.hpp"

namespace braidtk {

/// A word in the Artin generators of the braid group on `strands` strands.
/// Letters are nonzero integers g with 1 <= |g| <= strands-1; the sign is the
/// crossing sign and |g| the generator index (1-based, matching sigma_1..sigma_{n-1}).
/// Words are plain sequences: construction never reduces.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<int> letters = {});

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const BraidWord& other) const = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// The band generator sigma_{i,j} = (sigma_i ... sigma_{j-2}) sigma_{j-1} (sigma_i ... sigma_{j-2})^{-1}.
struct BandGenerator {
  int i;
  int j;

  bool operator==(const BandGenerator&) const = default;
};

/// A bijection of {1..n}, stored as the images of 1..n.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i - 1]; }
  int cycle_count() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

BraidWord expand_band(const BandGenerator& b, int strands);

int algebraic_length(const BraidWord& b);

Permutation underlying_permutation(const BraidWord& b);
int component_count(const BraidWord& b);

BraidWord free_reduce(const BraidWord& b);
BraidWord cyclic_reduce(const BraidWord& b);

/// w * b * w^{-1}, concatenated without reduction.
BraidWord conjugate(const BraidWord& b, const BraidWord& w);

BraidWord inverse(const BraidWord& b);
BraidWord concat(const BraidWord& a, const BraidWord& b);

/// Append sigma_n on n+1 strands.
BraidWord positive_stabilize(const BraidWord& b);
/// Append sigma_n^{-1} on n+1 strands (changes the transverse class, keeps the link type).
BraidWord negative_stabilize(const BraidWord& b);

/// Searches all cyclic rotations of the word as given for the form u * sigma_{n-1}
/// with u free of letters +-(n-1); returns u on n-1 strands for the first rotation
/// offset that matches, or nullopt.
std::optional<BraidWord> positive_destabilize(const BraidWord& b);

/// Least cyclic rotation of the cyclically reduced word. Words with equal canonical
/// form are conjugate (the converse may fail; see markov.hpp for how this is used).
std::vector<int> canonical_cyclic_letters(const BraidWord& b);
std::string canonical_key(const BraidWord& b);

/// Text format "Bn: g1 g2 ..." with band shorthand b(i,j) expanded on parse.
BraidWord parse_braid(const std::string& text);
std::string format_braid(const BraidWord& b);

}  // namespace braidtk
