#include "braidtk/word_problem.hpp"

#include <cstdlib>
#include <sstream>

namespace braidtk {

namespace {

inline void push_reduced(FreeWord& w, int s) {
  if (!w.empty() && w.back() == -s) w.pop_back();
  else w.push_back(s);
}

// Substitute each symbol of w by its image under sigma_i^{sign}.
FreeWord apply_letter(const FreeWord& w, int letter, std::size_t size_cap) {
  const int i = std::abs(letter);
  FreeWord out;
  out.reserve(w.size() + 2);
  for (int s : w) {
    const int base = std::abs(s);
    if (letter > 0) {
      if (base == i) {
        if (s > 0) {  // x_i -> x_i x_{i+1} x_i^{-1}
          push_reduced(out, i);
          push_reduced(out, i + 1);
          push_reduced(out, -i);
        } else {
          push_reduced(out, i);
          push_reduced(out, -(i + 1));
          push_reduced(out, -i);
        }
      } else if (base == i + 1) {  // x_{i+1} -> x_i
        push_reduced(out, s > 0 ? i : -i);
      } else {
        push_reduced(out, s);
      }
    } else {
      if (base == i) {  // x_i -> x_{i+1}
        push_reduced(out, s > 0 ? i + 1 : -(i + 1));
      } else if (base == i + 1) {  // x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
        if (s > 0) {
          push_reduced(out, -(i + 1));
          push_reduced(out, i);
          push_reduced(out, i + 1);
        } else {
          push_reduced(out, -(i + 1));
          push_reduced(out, -i);
          push_reduced(out, i + 1);
        }
      } else {
        push_reduced(out, s);
      }
    }
    if (out.size() > size_cap) {
      throw BudgetExceeded("free-group image exceeded size cap");
    }
  }
  return out;
}

}  // namespace

FreeWord artin_image(const BraidWord& b, int k, std::size_t size_cap) {
  FreeWord w{k};
  for (int g : b.letters()) w = apply_letter(w, g, size_cap);
  return w;
}

bool braid_words_equal(const BraidWord& b1, const BraidWord& b2) {
  if (b1.strands() != b2.strands()) {
    throw StrandMismatch("braid_words_equal: strand counts differ");
  }
  for (int k = 1; k <= b1.strands(); ++k) {
    if (artin_image(b1, k) != artin_image(b2, k)) return false;
  }
  return true;
}

std::string artin_fingerprint(const BraidWord& b) {
  std::ostringstream os;
  os << b.strands() << '#';
  for (int k = 1; k <= b.strands(); ++k) {
    for (int s : artin_image(b, k)) os << s << ',';
    os << ';';
  }
  return os.str();
}

}  // namespace braidtk
