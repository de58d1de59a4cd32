#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "braidtk/braid.hpp"
#include "braidtk/laurent.hpp"

namespace braidtk {

/// HOMFLY-PT polynomial of braid closures, in the convention
///   v^{-1} P(L+) - v P(L-) = z P(L0),   P(unknot) = 1,
/// so P(split k-component unlink) = ((v^{-1} - v)/z)^{k-1}.
///
/// The skein tree switches/smooths the first crossing that violates a
/// descending order on a fixed base-point sequence (components ordered by
/// their least strand position, traversed from the top of the braid).
/// Smoothing a braid crossing deletes the letter, so every node stays a
/// braid word; descending closures are unlinks. Results are memoized per
/// computer instance, keyed by the canonical cyclic word form, so one
/// instance is cheap to reuse across many related words. Instances are not
/// thread-safe; use one per thread for concurrent inputs.
class HomflyComputer {
 public:
  explicit HomflyComputer(std::uint64_t node_cap = 1'000'000) : node_cap_(node_cap) {}

  Laurent2 compute(const BraidWord& b);

  std::uint64_t nodes_visited() const { return nodes_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  Laurent2 compute_rec(int strands, std::vector<int> word);
  const Laurent2& unlink_poly(int components);

  std::uint64_t node_cap_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<std::string, Laurent2> memo_;
  std::vector<Laurent2> delta_powers_;  // delta_powers_[k] = ((v^{-1}-v)/z)^k
};

/// One-shot convenience wrapper; fresh memo per invocation.
Laurent2 homfly(const BraidWord& b, std::uint64_t node_cap = 1'000'000);

/// (d_minus, d_plus): minimal and maximal v-exponents of P.
std::pair<int, int> homfly_v_degrees(const Laurent2& p);

}  // namespace braidtk
