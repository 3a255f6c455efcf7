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

#ifndef QH_ALGEBRAKIT_HPP
#define QH_ALGEBRAKIT_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qh/quantum.hpp"

namespace qh {

enum class Verdict { Yes, No, Inconclusive };
std::string verdictName(Verdict v);

/// Deterministic integer sampler (stable across platforms).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  long uniform(long lo, long hi);
  long nonzero(long bound);  // uniform over [-bound, bound] \ {0}
 private:
  std::mt19937_64 eng_;
};

/// Finite free commutative Q-algebra given by its multiplication table;
/// the pointwise object of every sampling test.
struct QAlgebra {
  std::vector<std::string> names;
  // mult[i][j] = coordinates of e_i * e_j in the basis
  std::vector<std::vector<std::vector<Rational>>> mult;
  int unitIndex = 0;

  int dim() const { return static_cast<int>(names.size()); }
  std::vector<Rational> multiply(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b) const;
  Matrix<Rational> multOperator(const std::vector<Rational>& a) const;
  bool isUnit(const std::vector<Rational>& a) const;
  void checkUnit() const;  // throws std::logic_error when unitIndex is wrong
};

/// Fiber of the quantum algebra at a rational point of the symbolic ring
/// (all deformation coordinates evaluated).
QAlgebra fiberAlgebra(const QuantumContext& ctx, const DeformParam& point);

struct Discriminant {
  Matrix<MultiPoly> gram;    // symbolic trace Gram matrix
  MultiPoly det;             // full determinant
  MultiPoly certificate;     // minimal Novikov-order layer of det (the f)
  Rational lambda0;          // that minimal order
  Validity validity;
};

struct PointVerdict {
  std::map<std::size_t, Rational> point;  // symbolic-ring variable -> value
  Verdict verdict = Verdict::Inconclusive;
  std::string note;
};

struct AnalysisReport {
  std::optional<Verdict> semisimple;
  std::optional<Verdict> fieldSplit;
  std::optional<Discriminant> discriminant;
  std::vector<PointVerdict> witnesses;
  std::optional<std::vector<Rational>> idempotent;  // coordinates in the basis
  std::string confidence;                           // "exact" | "schwartz-zippel"
  long degreeBound = 0;                             // cleared total degree of f
  int trials = 0;
  Validity validity;
  std::vector<std::string> notes;

  nlohmann::ordered_json toJson() const;
};

/// Symbolic trace Gram matrix G_ij = tr L_{Delta_i * Delta_j}.
Matrix<MultiPoly> traceGramSymbolic(const QuantumContext& ctx, const DeformParam& d);
Matrix<Rational> traceGram(const QAlgebra& a);
Matrix<NovikovElem> traceGramNovikov(const QuantumContext& ctx, const DeformParam& d);

/// Trace-form discriminant over the symbolic ring; requires all divisor
/// coordinates symbolic (the certificate is a Laurent polynomial there).
Discriminant discriminant(const QuantumContext& ctx, const DeformParam& d);

/// Generic semisimplicity by the nonvanishing of the discriminant; on Yes
/// the report carries the certificate and three witness points.
AnalysisReport genericSemisimple(const QuantumContext& ctx, const DeformParam& d);

struct FieldSplitOptions {
  int trials = 8;
  long elementBound = 0;  // 0: use 10 * (N + 1)
  int pointRange = 10;    // sample-point coordinate box
  int samplePoints = 5;
  std::uint64_t seed = 1;
};

/// Simple-root test on the characteristic polynomial of a random
/// multiplication operator; certifies a one-dimensional field summand.
/// Returns the per-point outcome and, when a rational simple root exists,
/// an explicit idempotent (verified e*e = e, dim(eA) = 1).
struct FieldSplitPointResult {
  Verdict verdict = Verdict::No;
  std::optional<std::vector<Rational>> idempotent;
  int trialsUsed = 0;
  std::string note;
};
FieldSplitPointResult fieldSplitAtAlgebra(const QAlgebra& a, Rng& rng,
                                          const FieldSplitOptions& opt);

/// Field-split analysis of the quantum algebra: at a given rational point,
/// or sampling points under a budget. Yes at some point gives the generic
/// verdict (Theorem-style transfer), reported with the sampling parameters.
AnalysisReport fieldSplitTest(const QuantumContext& ctx,
                              const std::optional<DeformParam>& point,
                              const FieldSplitOptions& opt);

/// CRT idempotent from a rational simple root lam of charpoly(L_a):
/// e = g(a) with g = 1 mod (t - lam), g = 0 mod the cofactor.
std::vector<Rational> extractIdempotent(const QAlgebra& a, const std::vector<Rational>& elem,
                                        const Rational& lambda);

/// Evaluates the certificate at E_B(eta). Nonzero inherits the generic Yes
/// with eta recorded as a witness; zero falls back to the pointwise
/// Novikov trace test and the Q-fiber field-split test at that point.
AnalysisReport deformedVerdictAt(const QuantumContext& ctx, const Discriminant& cert,
                                 const DeformParam& eta, const FieldSplitOptions& opt);

nlohmann::ordered_json reportPoly(const MultiPoly& p);

}  // namespace qh

#endif  // QH_ALGEBRAKIT_HPP
