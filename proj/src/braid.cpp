#include "braidtk/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace braidtk {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("strand count must be >= 1");
  for (int g : letters_) {
    if (g == 0 || std::abs(g) > strands_ - 1) {
      throw std::invalid_argument("letter " + std::to_string(g) + " out of range for B_" +
                                  std::to_string(strands_));
    }
  }
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

int Permutation::cycle_count() const {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  int cycles = 0;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = image(j)) seen[j] = true;
  }
  return cycles;
}

BraidWord expand_band(const BandGenerator& b, int strands) {
  if (b.i < 1 || b.i >= b.j || b.j > strands) {
    throw std::invalid_argument("band generator (" + std::to_string(b.i) + "," +
                                std::to_string(b.j) + ") out of range for B_" +
                                std::to_string(strands));
  }
  std::vector<int> letters;
  letters.reserve(2 * (b.j - b.i - 1) + 1);
  for (int k = b.i; k <= b.j - 2; ++k) letters.push_back(k);
  letters.push_back(b.j - 1);
  for (int k = b.j - 2; k >= b.i; --k) letters.push_back(-k);
  return BraidWord(strands, std::move(letters));
}

int algebraic_length(const BraidWord& b) {
  int a = 0;
  for (int g : b.letters()) a += g > 0 ? 1 : -1;
  return a;
}

Permutation underlying_permutation(const BraidWord& b) {
  const int n = b.strands();
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  for (int g : b.letters()) {
    const int j = std::abs(g);
    // apply the transposition (j, j+1) after the permutation so far
    for (int& v : img) {
      if (v == j) v = j + 1;
      else if (v == j + 1) v = j;
    }
  }
  return Permutation(std::move(img));
}

int component_count(const BraidWord& b) { return underlying_permutation(b).cycle_count(); }

namespace {

std::vector<int> reduce_letters(const std::vector<int>& in) {
  std::vector<int> out;
  out.reserve(in.size());
  for (int g : in) {
    if (!out.empty() && out.back() == -g) out.pop_back();
    else out.push_back(g);
  }
  return out;
}

}  // namespace

BraidWord free_reduce(const BraidWord& b) {
  return BraidWord(b.strands(), reduce_letters(b.letters()));
}

BraidWord cyclic_reduce(const BraidWord& b) {
  std::vector<int> w = reduce_letters(b.letters());
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return BraidWord(b.strands(), std::vector<int>(w.begin() + lo, w.begin() + hi));
}

BraidWord conjugate(const BraidWord& b, const BraidWord& w) {
  if (b.strands() != w.strands()) {
    throw StrandMismatch("conjugate: strand counts differ (" + std::to_string(b.strands()) +
                         " vs " + std::to_string(w.strands()) + ")");
  }
  std::vector<int> letters = w.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) letters.push_back(-*it);
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& b) {
  std::vector<int> letters;
  letters.reserve(b.length());
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) letters.push_back(-*it);
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw StrandMismatch("concat: strand counts differ");
  }
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord positive_stabilize(const BraidWord& b) {
  std::vector<int> letters = b.letters();
  letters.push_back(b.strands());
  return BraidWord(b.strands() + 1, std::move(letters));
}

BraidWord negative_stabilize(const BraidWord& b) {
  std::vector<int> letters = b.letters();
  letters.push_back(-b.strands());
  return BraidWord(b.strands() + 1, std::move(letters));
}

std::optional<BraidWord> positive_destabilize(const BraidWord& b) {
  const int n = b.strands();
  if (n < 2) return std::nullopt;
  const int top = n - 1;
  const auto& w = b.letters();
  const std::size_t len = w.size();
  if (len == 0) return std::nullopt;
  for (std::size_t r = 0; r < len; ++r) {
    // rotation starting at index r; last letter of the rotation is w[(r+len-1) % len]
    if (w[(r + len - 1) % len] != top) continue;
    bool clean = true;
    std::vector<int> u;
    u.reserve(len - 1);
    for (std::size_t k = 0; k + 1 < len; ++k) {
      const int g = w[(r + k) % len];
      if (std::abs(g) == top) {
        clean = false;
        break;
      }
      u.push_back(g);
    }
    if (clean) return BraidWord(n - 1, std::move(u));
  }
  return std::nullopt;
}

std::vector<int> canonical_cyclic_letters(const BraidWord& b) {
  const std::vector<int> w = cyclic_reduce(b).letters();
  const std::size_t len = w.size();
  if (len == 0) return {};
  std::vector<int> best;
  for (std::size_t r = 0; r < len; ++r) {
    std::vector<int> rot(len);
    for (std::size_t k = 0; k < len; ++k) rot[k] = w[(r + k) % len];
    if (best.empty() || rot < best) best = std::move(rot);
  }
  return best;
}

std::string canonical_key(const BraidWord& b) {
  std::ostringstream os;
  os << 'B' << b.strands() << ':';
  for (int g : canonical_cyclic_letters(b)) os << g << ',';
  return os.str();
}

namespace {

bool parse_int(const std::string& tok, int& out) {
  if (tok.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == tok.size();
}

}  // namespace

BraidWord parse_braid(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i >= text.size() || (text[i] != 'B' && text[i] != 'b')) {
    throw ParseError("expected braid header 'Bn:'");
  }
  ++i;
  std::size_t colon = text.find(':', i);
  if (colon == std::string::npos) throw ParseError("expected ':' after strand count");
  int n = 0;
  if (!parse_int(text.substr(i, colon - i), n) || n < 1) {
    throw ParseError("invalid strand count in braid header");
  }
  std::vector<int> letters;
  std::istringstream rest(text.substr(colon + 1));
  std::string tok;
  while (rest >> tok) {
    if (tok.size() >= 2 && (tok[0] == 'b' || tok[0] == 'B') && tok[1] == '(') {
      if (tok.back() != ')') throw ParseError("malformed band token '" + tok + "'");
      std::string inner = tok.substr(2, tok.size() - 3);
      std::size_t comma = inner.find(',');
      if (comma == std::string::npos) throw ParseError("malformed band token '" + tok + "'");
      int bi = 0, bj = 0;
      if (!parse_int(inner.substr(0, comma), bi) || !parse_int(inner.substr(comma + 1), bj)) {
        throw ParseError("malformed band token '" + tok + "'");
      }
      BraidWord band = [&] {
        try {
          return expand_band({bi, bj}, n);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what());
        }
      }();
      letters.insert(letters.end(), band.letters().begin(), band.letters().end());
    } else {
      int g = 0;
      if (!parse_int(tok, g)) throw ParseError("invalid letter '" + tok + "'");
      letters.push_back(g);
    }
  }
  try {
    return BraidWord(n, std::move(letters));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_braid(const BraidWord& b) {
  std::ostringstream os;
  os << 'B' << b.strands() << ':';
  for (int g : b.letters()) os << ' ' << g;
  return os.str();
}

}  // namespace braidtk
