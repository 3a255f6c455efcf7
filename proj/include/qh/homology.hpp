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

#ifndef QH_HOMOLOGY_HPP
#define QH_HOMOLOGY_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qh/matrix.hpp"
#include "qh/rational.hpp"

namespace qh {

/// Error in user-supplied data (files, flags, spec violations).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BasisClass {
  std::string name;
  int degree = 0;
};

/// Curve class in H_2, stored by its integer coordinate vector of length s.
/// For ordinary specs the coordinates are the divisor pairings
/// (Delta_1 . beta, ..., Delta_s . beta); specs may install a divisorPairing
/// matrix when the stored coordinates use a different integral basis
/// (the blowup construction stores (beta', d_beta)).
struct CurveClass {
  std::vector<long long> c;

  bool isZero() const;
  friend CurveClass operator+(const CurveClass& a, const CurveClass& b);
  friend CurveClass operator-(const CurveClass& a, const CurveClass& b);
  friend bool operator==(const CurveClass& a, const CurveClass& b) { return a.c == b.c; }
  friend bool operator<(const CurveClass& a, const CurveClass& b) { return a.c < b.c; }
  std::string str() const;
};

/// Extra structure carried by specs produced by the blowup construction.
struct BlowupInfo {
  int halfDim = 0;                // n; the exceptional classes are E_1..E_{n-1}
  std::vector<int> eIndex;        // basis index of E_j, j = 1..n-1
  Rational epsilon;               // omega value on the exceptional line E'
};

/// Even homology basis with degrees, Poincare pairing, curve-class
/// coordinates, cone generators and the classical triple-intersection
/// tensor. Immutable after load/validate.
struct ManifoldSpec {
  int dim2n = 0;
  std::vector<BasisClass> basis;          // basis[0] = [M]
  Matrix<Rational> pairing;               // (N+1) x (N+1)
  std::vector<std::string> curveBasis;    // names of the s coordinate directions
  std::vector<long long> c1;              // <c1, .> per coordinate
  std::vector<Rational> omega;            // <[omega], .> per coordinate, positive
  std::vector<CurveClass> coneGenerators;
  // classical triple intersections, keyed by sorted index triple; entries
  // absent from the map are zero. nullopt = tensor not supplied.
  std::optional<std::map<std::array<int, 3>, Rational>> classicalTriple;
  // coordinate -> divisor-pairing change of basis (s x s, default identity)
  std::optional<Matrix<Rational>> divisorPairing;
  std::optional<BlowupInfo> blowup;

  int n() const { return dim2n / 2; }
  int N() const { return static_cast<int>(basis.size()) - 1; }
  int s() const;                           // number of degree 2n-2 classes
  int degree(int i) const { return basis.at(i).degree; }
  int codegree(int i) const { return dim2n - degree(i); }
  int classIndex(const std::string& name) const;  // throws InputError

  Rational energy(const CurveClass& beta) const;
  long long chern(const CurveClass& beta) const;
  /// Divisor pairing Delta_i . beta for a divisor index i in 1..s.
  long long divisorCap(int i, const CurveClass& beta) const;

  /// Classical triple intersection number; nullopt when no tensor present.
  std::optional<Rational> classicalTripleValue(int i, int j, int k) const;

  /// Throws InputError when any structural invariant fails.
  void validate() const;
};

struct DualBasis {
  Matrix<Rational> rows;  // row k = Delta^k written in the Delta-basis
};

/// Rows of the inverse pairing matrix; checks the delta identity.
DualBasis dualBasis(const ManifoldSpec& spec);

/// All N-combinations of the cone generators with energy at most cap,
/// including 0, sorted by energy then lexicographically. Throws InputError
/// on a generator with nonpositive energy.
std::vector<CurveClass> enumerateCone(const ManifoldSpec& spec, const Rational& cap);

/// All ordered pairs (b1, b2) from the enumerated cone with b1 + b2 = beta.
/// beta must itself be a member.
std::vector<std::pair<CurveClass, CurveClass>> decompositions(
    const CurveClass& beta, const std::vector<CurveClass>& cone);

nlohmann::ordered_json specToJson(const ManifoldSpec& spec);
ManifoldSpec specFromJson(const nlohmann::json& j);
ManifoldSpec loadSpec(const std::string& path);
void saveSpec(const ManifoldSpec& spec, const std::string& path);

}  // namespace qh

#endif  // QH_HOMOLOGY_HPP
