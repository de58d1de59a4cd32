#include "braidtk/laurent.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace braidtk {

Laurent2 Laurent2::constant(long long c) { return monomial(0, 0, BigInt(c)); }

Laurent2 Laurent2::monomial(int v_exp, int z_exp, const BigInt& coeff) {
  Laurent2 p;
  if (coeff != 0) p.terms_[{v_exp, z_exp}] = coeff;
  return p;
}

void Laurent2::add_term(int v_exp, int z_exp, const BigInt& coeff) {
  if (coeff == 0) return;
  auto key = Exponents{v_exp, z_exp};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void Laurent2::add_scaled(const Laurent2& other, int dv, int dz, const BigInt& coeff) {
  if (coeff == 0) return;
  for (const auto& [exp, c] : other.terms_) {
    add_term(exp.first + dv, exp.second + dz, c * coeff);
  }
}

Laurent2 Laurent2::operator+(const Laurent2& other) const {
  Laurent2 out = *this;
  out.add_scaled(other, 0, 0, 1);
  return out;
}

Laurent2 Laurent2::operator-(const Laurent2& other) const {
  Laurent2 out = *this;
  out.add_scaled(other, 0, 0, -1);
  return out;
}

Laurent2 Laurent2::operator*(const Laurent2& other) const {
  Laurent2 out;
  for (const auto& [exp, c] : terms_) {
    out.add_scaled(other, exp.first, exp.second, c);
  }
  return out;
}

int Laurent2::min_v_degree() const {
  if (terms_.empty()) throw std::domain_error("v-degree of the zero polynomial");
  return terms_.begin()->first.first;
}

int Laurent2::max_v_degree() const {
  if (terms_.empty()) throw std::domain_error("v-degree of the zero polynomial");
  return terms_.rbegin()->first.first;
}

std::string Laurent2::to_json_string() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [exp, c] : terms_) {
    nlohmann::json triple = nlohmann::json::array();
    triple.push_back(exp.first);
    triple.push_back(exp.second);
    // keep exact values: numbers while they fit in int64, decimal strings beyond
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
      triple.push_back(static_cast<long long>(c));
    } else {
      triple.push_back(c.str());
    }
    arr.push_back(std::move(triple));
  }
  return arr.dump();
}

Laurent2 Laurent2::from_json_string(const std::string& s) {
  nlohmann::json arr = nlohmann::json::parse(s);
  Laurent2 p;
  for (const auto& triple : arr) {
    BigInt c = triple[2].is_string() ? BigInt(triple[2].get<std::string>())
                                     : BigInt(triple[2].get<long long>());
    p.add_term(triple[0].get<int>(), triple[1].get<int>(), c);
  }
  return p;
}

}  // namespace braidtk
