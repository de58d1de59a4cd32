#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>

namespace braidtk {

using BigInt = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in two variables (v, z). Terms are stored sparse,
/// ordered lexicographically by (v_exp, z_exp); zero coefficients are never kept.
class Laurent2 {
 public:
  using Exponents = std::pair<int, int>;  // (v_exp, z_exp)
  using Terms = std::map<Exponents, BigInt>;

  Laurent2() = default;
  static Laurent2 constant(long long c);
  static Laurent2 monomial(int v_exp, int z_exp, const BigInt& coeff);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  /// this += other * coeff * v^dv * z^dz
  void add_scaled(const Laurent2& other, int dv, int dz, const BigInt& coeff);
  void add_term(int v_exp, int z_exp, const BigInt& coeff);

  Laurent2 operator+(const Laurent2& other) const;
  Laurent2 operator-(const Laurent2& other) const;
  Laurent2 operator*(const Laurent2& other) const;
  bool operator==(const Laurent2& other) const = default;

  int min_v_degree() const;  // throws std::domain_error on the zero polynomial
  int max_v_degree() const;

  /// "[[v,z,coeff],...]" sorted by exponents; the serialization used everywhere.
  std::string to_json_string() const;
  static Laurent2 from_json_string(const std::string& s);

 private:
  Terms terms_;
};

}  // namespace braidtk
