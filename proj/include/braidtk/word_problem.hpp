#pragma once

#include <string>
#include <vector>

#include "braidtk/braid.hpp"

namespace braidtk {

/// Reduced word in the free group on x_1..x_n; symbol +k is x_k, -k is x_k^{-1}.
using FreeWord = std::vector<int>;

/// Image of the basis element x_k under the automorphism of F_n induced by b.
/// Letters act in word order: sigma_i maps x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i.
/// Faithful, so comparing images of all generators decides the word problem.
FreeWord artin_image(const BraidWord& b, int k, std::size_t size_cap = 1u << 20);

/// true iff b1 and b2 represent the same element of B_n.
bool braid_words_equal(const BraidWord& b1, const BraidWord& b2);

/// Concatenated reduced images of all generators; equal fingerprints iff equal
/// group elements. Used to deduplicate search states.
std::string artin_fingerprint(const BraidWord& b);

}  // namespace braidtk
