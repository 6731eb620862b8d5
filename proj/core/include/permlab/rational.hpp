#pragma once

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permlab/permutation.hpp"

namespace permlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "a/b" or an integer. Decimals are rejected so exact paths stay exact.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
BigInt factorial(int n);
Rational rpow(const Rational& base, int exponent);
double to_double(const Rational& r);

// Exact law on a finite set of keys.
template <class Key>
using ExactLaw = std::map<Key, Rational>;

template <class Key>
Rational total_mass(const ExactLaw<Key>& law) {
  Rational t = 0;
  for (const auto& kv : law) t += kv.second;
  return t;
}

// max_k |a(k) - b(k)| over the union of supports.
template <class Key>
Rational max_abs_deviation(const ExactLaw<Key>& a, const ExactLaw<Key>& b) {
  Rational worst = 0;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    Rational d = abs(v - (it == b.end() ? Rational(0) : it->second));
    if (d > worst) worst = d;
  }
  for (const auto& [k, v] : b) {
    if (a.count(k) == 0 && abs(v) > worst) worst = abs(v);
  }
  return worst;
}

// Law of permutations of one fixed size.
struct ExactDist {
  int n = 1;
  ExactLaw<Permutation> prob;

  Rational at(const Permutation& pi) const {
    auto it = prob.find(pi);
    return it == prob.end() ? Rational(0) : it->second;
  }
};

// "perm,numerator,denominator" with a header row.
void write_csv(std::ostream& os, const ExactDist& d);

// Dense polynomial in p with rational coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rational c) : c_{std::move(c)} { trim(); }
  static Polynomial p() { return Polynomial(std::vector<Rational>{0, 1}); }
  static Polynomial one_minus_p() { return Polynomial(std::vector<Rational>{1, -1}); }
  explicit Polynomial(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational eval(const Rational& x) const;
  Polynomial pow(int e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // e.g. "1/2*p + 3*p^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace permlab
