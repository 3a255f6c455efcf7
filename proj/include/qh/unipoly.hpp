/*
   Copyright 2026 The qh Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QH_UNIPOLY_HPP
#define QH_UNIPOLY_HPP

#include <string>
#include <vector>

#include "qh/rational.hpp"

namespace qh {

/// Dense univariate polynomial over Rational, lowest degree first.
/// The zero polynomial has an empty coefficient vector.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly x();  // the monomial t

  bool isZero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& leading() const { return c_.back(); }
  const Rational& coeff(std::size_t i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly scaled(const Rational& s) const;
  UniPoly monic() const;  // requires nonzero
  UniPoly derivative() const;
  Rational evaluate(const Rational& t) const;

  /// Euclidean division; divisor must be nonzero.
  static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);

  std::string str(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) is an error.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Extended gcd with monic g and exact Bezout identity u*a + v*b = g,
/// verified on every call.
struct ExtGcd {
  UniPoly g, u, v;
};
ExtGcd extgcd(const UniPoly& a, const UniPoly& b);

/// For nonzero p returns (gcd(p, p'), squarefree part p / gcd(p, p')),
/// both monic. p has a simple root over the algebraic closure iff
/// gcd(second, first) has degree strictly below the second.
struct SquarefreeSplit {
  UniPoly repeated;   // gcd(p, p')
  UniPoly squarefree; // p / gcd(p, p')
};
SquarefreeSplit gcdSquarefree(const UniPoly& p);

bool hasSimpleRoot(const UniPoly& p);

/// Rational roots by the rational-root theorem (divisor enumeration after
/// clearing denominators). Returns each root with its multiplicity.
/// Gives up (returns partial = true) when the divisor enumeration would
/// require factoring a composite beyond the trial-division bound.
struct RationalRoots {
  std::vector<std::pair<Rational, int>> roots;
  bool partial = false;
};
RationalRoots rationalRoots(const UniPoly& p);

}  // namespace qh

#endif  // QH_UNIPOLY_HPP
