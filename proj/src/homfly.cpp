#include "braidtk/homfly.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace braidtk {

namespace {

std::vector<int> cyclic_reduce_letters(std::vector<int> w) {
  std::vector<int> r;
  r.reserve(w.size());
  for (int g : w) {
    if (!r.empty() && r.back() == -g) r.pop_back();
    else r.push_back(g);
  }
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return std::vector<int>(r.begin() + lo, r.begin() + hi);
}

// Collapse strand positions never involved in a crossing. Each such position is
// a split unknot factor; the caller multiplies by delta per dropped strand.
// Returns the number of dropped strands and rewrites (word, strands).
int collapse_unused(std::vector<int>& word, int& strands) {
  std::vector<bool> used(strands + 2, false);
  for (int g : word) {
    used[std::abs(g)] = true;
    used[std::abs(g) + 1] = true;
  }
  std::vector<int> rank(strands + 1, 0);
  int kept = 0;
  for (int p = 1; p <= strands; ++p) {
    if (used[p]) rank[p] = ++kept;
  }
  const int dropped = strands - kept;
  if (dropped == 0) return 0;
  for (int& g : word) {
    const int j = std::abs(g);
    g = g > 0 ? rank[j] : -rank[j];
  }
  strands = std::max(kept, 1);
  return dropped;
}

std::vector<int> least_rotation(const std::vector<int>& w) {
  const std::size_t len = w.size();
  if (len == 0) return {};
  std::vector<int> best, rot(len);
  for (std::size_t r = 0; r < len; ++r) {
    for (std::size_t k = 0; k < len; ++k) rot[k] = w[(r + k) % len];
    if (best.empty() || rot < best) best = rot;
  }
  return best;
}

std::string encode_key(int strands, const std::vector<int>& word) {
  std::string key;
  key.reserve(word.size() + 1);
  key.push_back(static_cast<char>(strands));
  for (int g : word) key.push_back(static_cast<char>(g + 64));
  return key;
}

int cycle_count_of_word(int strands, const std::vector<int>& word) {
  std::vector<int> img(strands);
  std::iota(img.begin(), img.end(), 1);
  for (int g : word) {
    const int j = std::abs(g);
    for (int& v : img) {
      if (v == j) v = j + 1;
      else if (v == j + 1) v = j;
    }
  }
  std::vector<bool> seen(strands + 1, false);
  int cycles = 0;
  for (int i = 1; i <= strands; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = img[j - 1]) seen[j] = true;
  }
  return cycles;
}

// Walk the closure diagram in base-point order and return the letter index of
// the first crossing whose first visit is on the understrand, or -1 when the
// diagram is descending. Components are ordered by least strand position and
// entered at the top of the braid.
int first_bad_crossing(int strands, const std::vector<int>& word) {
  const std::size_t m = word.size();
  std::vector<int> img(strands);
  std::iota(img.begin(), img.end(), 1);
  for (int g : word) {
    const int j = std::abs(g);
    for (int& v : img) {
      if (v == j) v = j + 1;
      else if (v == j + 1) v = j;
    }
  }
  std::vector<bool> started(strands + 1, false);
  std::vector<bool> visited(m, false);
  for (int base = 1; base <= strands; ++base) {
    if (started[base]) continue;
    int pos = base;
    do {
      started[pos] = true;
      for (std::size_t t = 0; t < m; ++t) {
        const int g = word[t];
        const int j = std::abs(g);
        if (pos == j || pos == j + 1) {
          const bool over = (pos == j) == (g > 0);
          if (!visited[t]) {
            visited[t] = true;
            if (!over) return static_cast<int>(t);
          }
          pos = pos == j ? j + 1 : j;
        }
      }
      // closure arc: bottom position wraps to the same top position
    } while (pos != base);
  }
  return -1;
}

}  // namespace

const Laurent2& HomflyComputer::unlink_poly(int components) {
  if (delta_powers_.empty()) {
    delta_powers_.push_back(Laurent2::constant(1));
    Laurent2 delta;
    delta.add_term(-1, -1, 1);
    delta.add_term(1, -1, -1);
    delta_powers_.push_back(std::move(delta));
  }
  const std::size_t want = static_cast<std::size_t>(components - 1);
  while (delta_powers_.size() <= want) {
    delta_powers_.push_back(delta_powers_.back() * delta_powers_[1]);
  }
  return delta_powers_[want];
}

Laurent2 HomflyComputer::compute(const BraidWord& b) {
  return compute_rec(b.strands(), b.letters());
}

Laurent2 HomflyComputer::compute_rec(int strands, std::vector<int> word) {
  if (++nodes_ > node_cap_) {
    throw BudgetExceeded("homfly: skein node cap exceeded");
  }
  word = cyclic_reduce_letters(std::move(word));
  const int dropped = collapse_unused(word, strands);
  if (word.empty()) {
    return unlink_poly(strands + dropped);
  }
  const std::vector<int> canon = least_rotation(word);
  const std::string key = encode_key(strands, canon);
  Laurent2 result;
  if (auto it = memo_.find(key); it != memo_.end()) {
    result = it->second;
  } else {
    const int pivot = first_bad_crossing(strands, canon);
    if (pivot < 0) {
      result = unlink_poly(cycle_count_of_word(strands, canon));
    } else {
      std::vector<int> switched = canon;
      switched[pivot] = -switched[pivot];
      std::vector<int> smoothed = canon;
      smoothed.erase(smoothed.begin() + pivot);
      const int g = canon[pivot];
      if (g > 0) {
        // P(L+) = v^2 P(L-) + v z P(L0)
        result.add_scaled(compute_rec(strands, std::move(switched)), 2, 0, 1);
        result.add_scaled(compute_rec(strands, std::move(smoothed)), 1, 1, 1);
      } else {
        // P(L-) = v^{-2} P(L+) - v^{-1} z P(L0)
        result.add_scaled(compute_rec(strands, std::move(switched)), -2, 0, 1);
        result.add_scaled(compute_rec(strands, std::move(smoothed)), -1, 1, -1);
      }
    }
    memo_.emplace(key, result);
  }
  if (dropped > 0) {
    result = result * unlink_poly(dropped + 1);
  }
  return result;
}

Laurent2 homfly(const BraidWord& b, std::uint64_t node_cap) {
  HomflyComputer computer(node_cap);
  return computer.compute(b);
}

std::pair<int, int> homfly_v_degrees(const Laurent2& p) {
  if (p.is_zero()) throw std::domain_error("homfly_v_degrees: zero polynomial");
  return {p.min_v_degree(), p.max_v_degree()};
}

}  // namespace braidtk
