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

#ifndef QH_QUANTUM_HPP
#define QH_QUANTUM_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "qh/gwdata.hpp"
#include "qh/homology.hpp"
#include "qh/multipoly.hpp"

namespace qh {

/// Truncation/taint bookkeeping carried by every coefficient element.
/// cap == nullopt means the element is exact (no contributions were cut);
/// tainted means some Gromov-Witten lookup returned Unknown.
struct Validity {
  std::optional<Rational> cap;
  bool tainted = false;

  bool exact() const { return !cap && !tainted; }
  static Validity combine(const Validity& a, const Validity& b);
};

/// Element of the truncated universal ring R_M: finitely many classes beta
/// with polynomial coefficients in the deformation variables x_{s+1}..x_N.
struct UElem {
  std::map<CurveClass, MultiPoly> terms;
  Validity v;

  bool isZero() const { return terms.empty(); }
};

/// Element of the symbolic Laurent ring of Theorem-type certificates:
/// a polynomial in z_1^± .. z_s^± and x_{s+1} .. x_N. The Novikov
/// T-exponent of a monomial is a linear function of its z-exponents.
struct SymElem {
  MultiPoly p;
  Validity v;

  bool isZero() const { return p.isZero(); }
};

/// Truncated Novikov element: exponent -> coefficient, finitely many terms
/// below any bound. Ring operations keep the minimum cap and truncate.
struct NovikovElem {
  std::map<Rational, Rational> terms;
  Validity v;

  NovikovElem() = default;
  NovikovElem(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms.emplace(Rational(0), Rational(c));
  }
  explicit NovikovElem(const Rational& c) {
    if (!c.isZero()) terms.emplace(Rational(0), c);
  }

  bool isZero() const { return terms.empty(); }
  void addTerm(const Rational& g, const Rational& a);
  void truncate();

  NovikovElem operator-() const;
  NovikovElem& operator+=(const NovikovElem& o);
  NovikovElem& operator-=(const NovikovElem& o);
  friend NovikovElem operator+(NovikovElem a, const NovikovElem& b) { return a += b; }
  friend NovikovElem operator-(NovikovElem a, const NovikovElem& b) { return a -= b; }
  friend NovikovElem operator*(const NovikovElem& a, const NovikovElem& b);
  friend bool operator==(const NovikovElem& a, const NovikovElem& b) {
    return a.terms == b.terms;
  }

  /// Lowest exponent with nonzero coefficient; nullopt for zero.
  std::optional<Rational> leadingExponent() const;
  /// Decided nonzero iff the leading term sits strictly below the cap
  /// (Novikov elements are completed upward); exact elements decide both
  /// ways. Returns nullopt when truncation leaves the question open.
  std::optional<bool> decidedNonzero() const;

  std::string str() const;
};

/// Deformation coordinate: symbolic, or evaluated to a rational. For the
/// s divisor directions the value is the exponential z_i = e^{eta_i}
/// itself (nonzero); for the higher directions it is eta_i.
struct DeformCoord {
  bool symbolic = true;
  Rational value;
};

struct DeformParam {
  std::vector<DeformCoord> divisor;  // size s
  std::vector<DeformCoord> higher;   // size N - s

  static DeformParam fullySymbolic(const ManifoldSpec& spec);
  static DeformParam zero(const ManifoldSpec& spec);  // z = 1, x = 0
  bool fullyEvaluated() const;
  bool fullySymbolicDivisors() const;
};

/// Shared context: spec, table, energy cap, the symbolic variable ring
/// (z_1..z_s laurent, then x_{s+1}..x_N), the enumerated cone, the dual
/// basis, and the structure-constant cache.
class QuantumContext {
 public:
  QuantumContext(const ManifoldSpec& spec, const GwTable& table, Rational cap);

  const ManifoldSpec& spec() const { return *spec_; }
  const GwTable& table() const { return *table_; }
  const Rational& cap() const { return cap_; }
  const RingPtr& symRing() const { return ring_; }
  const std::vector<CurveClass>& cone() const { return cone_; }
  const Matrix<Rational>& dual() const { return dual_; }
  bool truncationExact() const { return truncationExact_; }

  /// Variable index of basis class i >= 1 in the symbolic ring.
  std::size_t varOf(int classIndex) const;

  /// Novikov exponent of a symbolic monomial via its z-exponents; only
  /// meaningful when all divisor coordinates stayed symbolic.
  Rational energyOfMonomial(const Monomial& m) const;
  Rational minimalEnergy(const MultiPoly& p) const;
  MultiPoly energyLayer(const MultiPoly& p, const Rational& level) const;

  const UElem& structureConstant(int i, int j, int k) const;

 private:
  const ManifoldSpec* spec_;
  const GwTable* table_;
  Rational cap_;
  RingPtr ring_;
  std::vector<CurveClass> cone_;
  Matrix<Rational> dual_;
  std::vector<Rational> energyWeight_;  // omega^T * divisorPairing^{-1}
  bool truncationExact_ = false;
  mutable std::map<std::array<int, 3>, UElem> cache_;
};

/// Proof-of-Prop-fin degree bound: |alpha| <= |Di|/2 + |Dj|/2 + |Dk|/2
/// + <c1, beta> - 2n. Negative means no deformation insertion contributes.
long alphaBound(const ManifoldSpec& spec, int i, int j, int k, const CurveClass& beta);

/// Class in the free module over one coefficient regime.
template <class E>
struct QVec {
  std::vector<E> coords;
};

using UQClass = QVec<UElem>;
using SymQClass = QVec<SymElem>;
using NovQClass = QVec<NovikovElem>;

UElem uAdd(const QuantumContext& ctx, const UElem& a, const UElem& b);
UElem uMul(const QuantumContext& ctx, const UElem& a, const UElem& b);
UElem uScale(const UElem& a, const Rational& c);
bool uEqual(const UElem& a, const UElem& b);

/// phi_eta into the symbolic regime: q^beta -> prod_i z_i^{Delta_i . beta}
/// with evaluated divisor coordinates folded into the coefficient, and
/// x-variables substituted where the deformation evaluates them.
SymElem phiEtaSymbolic(const QuantumContext& ctx, const UElem& r, const DeformParam& d);

/// phi_eta into the truncated Novikov regime; requires a fully evaluated
/// deformation. q^beta -> (prod z_i^{Delta_i . beta}) T^{<omega, beta>}.
NovikovElem phiEtaNovikov(const QuantumContext& ctx, const UElem& r, const DeformParam& d);

/// E_B map: (z_1,...,z_s, x_{s+1},...,x_N) with symbolic slots rendered
/// by variable name.
std::vector<std::string> ebMap(const QuantumContext& ctx, const DeformParam& d);

UQClass basisClassU(const QuantumContext& ctx, int i);
SymQClass basisClassSym(const QuantumContext& ctx, int i);
NovQClass basisClassNov(const QuantumContext& ctx, int i);

UQClass productUniversal(const QuantumContext& ctx, const UQClass& a, const UQClass& b);
SymQClass productSymbolic(const QuantumContext& ctx, const SymQClass& a, const SymQClass& b,
                          const DeformParam& d);
NovQClass productNovikov(const QuantumContext& ctx, const NovQClass& a, const NovQClass& b,
                         const DeformParam& d);

/// Symbolic structure constant with deformation applied (cached for the
/// fully symbolic deformation).
SymElem symbolicConstant(const QuantumContext& ctx, int i, int j, int k, const DeformParam& d);

/// Multiplication matrix over the symbolic ring of the basis element i:
/// column j holds the coordinates of Delta_i * Delta_j.
Matrix<MultiPoly> multOperatorSymbolic(const QuantumContext& ctx, int i, const DeformParam& d);

}  // namespace qh

#endif  // QH_QUANTUM_HPP
