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

#ifndef QH_MULTIPOLY_HPP
#define QH_MULTIPOLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qh/rational.hpp"

namespace qh {

/// Variable table shared by all polynomials of one context. A variable
/// flagged laurent may carry negative exponents.
class PolyRing {
 public:
  struct Var {
    std::string name;
    bool laurent = false;
  };

  explicit PolyRing(std::vector<Var> vars) : vars_(std::move(vars)) {}

  std::size_t size() const { return vars_.size(); }
  const Var& var(std::size_t i) const { return vars_.at(i); }
  std::optional<std::size_t> find(const std::string& name) const;

 private:
  std::vector<Var> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

/// Sparse exponent vector: (variable index, exponent), sorted by index,
/// no zero exponents stored.
struct Monomial {
  std::vector<std::pair<std::uint32_t, std::int32_t>> e;

  bool empty() const { return e.empty(); }
  std::int32_t exponent(std::uint32_t var) const;
  long totalDegreeAbs() const;  // sum of |exponents|

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

/// Lexicographic order on full exponent vectors (missing entries are 0).
struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate Laurent/ordinary polynomial over Rational with sparse
/// lexicographically ordered terms. A default-constructed value is the
/// zero polynomial of the null ring; constants need no ring.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonoLess>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly variable(RingPtr ring, std::size_t var, std::int32_t exp = 1);
  static MultiPoly monomial(RingPtr ring, Monomial m, Rational c);

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  Rational constantValue() const;  // requires isConstant()
  const TermMap& terms() const { return terms_; }
  const RingPtr& ring() const { return ring_; }
  std::size_t termCount() const { return terms_.size(); }

  /// Max over terms of the sum of |exponents| (0 for the zero polynomial).
  long totalDegreeAbs() const;
  /// Total degree after clearing negative exponents: max_t sum_v (e_tv - min_v)
  /// where min_v is the minimal (negative-capped) exponent of v over all terms.
  long clearedTotalDegree() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly scaled(const Rational& c) const;
  MultiPoly shifted(const Monomial& m) const;  // multiply by a monomial
  MultiPoly pow(unsigned e) const;

  /// Substitutes values for a subset of variables; the rest stay symbolic.
  /// Laurent variables must not be assigned zero.
  MultiPoly substitute(const std::map<std::size_t, Rational>& values) const;

  /// Full evaluation; every variable occurring in the polynomial must be
  /// assigned.
  Rational evaluate(const std::map<std::size_t, Rational>& values) const;

  void addTerm(const Monomial& m, const Rational& c);

  std::string str() const;

 private:
  void adoptRing(const RingPtr& other);

  RingPtr ring_;
  TermMap terms_;
};

/// True when f == c * z^m * g for a nonzero rational c and a monomial m
/// supported on invertible (laurent) variables; reports the unit found.
bool equalUpToUnit(const MultiPoly& f, const MultiPoly& g, Rational* unitCoeff = nullptr,
                   Monomial* unitMono = nullptr);

}  // namespace qh

#endif  // QH_MULTIPOLY_HPP
