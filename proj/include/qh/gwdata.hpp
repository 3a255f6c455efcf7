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

#ifndef QH_GWDATA_HPP
#define QH_GWDATA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qh/homology.hpp"

namespace qh {

/// Canonical key of a Gromov-Witten invariant: sorted multiset of basis
/// indices plus the curve class.
struct GwKey {
  std::vector<int> classes;  // sorted, size >= 3
  CurveClass beta;

  friend bool operator<(const GwKey& a, const GwKey& b) {
    if (a.classes != b.classes) return a.classes < b.classes;
    return a.beta < b.beta;
  }
  friend bool operator==(const GwKey& a, const GwKey& b) {
    return a.classes == b.classes && a.beta == b.beta;
  }
};

/// Region of (arity, energy) space within which absent entries mean zero.
/// A missing bound is unbounded.
struct CompletenessRegion {
  std::optional<int> maxArity;
  std::optional<Rational> maxEnergy;
};

/// Outcome of a table lookup: a known rational value or Unknown (outside
/// every declared completeness region).
struct LookupResult {
  bool known = false;
  Rational value;

  static LookupResult of(Rational v) { return {true, std::move(v)}; }
  static LookupResult unknown() { return {false, Rational(0)}; }
};

/// Finite Gromov-Witten table over a manifold spec, with the axioms needed
/// for structure constants: symmetry (keys are canonical), the dimension
/// filter, the divisor axiom, fundamental-class and zero-class behavior.
/// Immutable after load.
class GwTable {
 public:
  GwTable(const ManifoldSpec& spec, std::map<GwKey, Rational> entries,
          std::vector<CompletenessRegion> completeness,
          std::vector<std::string>* warnings = nullptr);

  const ManifoldSpec& spec() const { return *spec_; }
  const std::map<GwKey, Rational>& entries() const { return entries_; }
  const std::vector<CompletenessRegion>& completeness() const { return completeness_; }

  /// The dimension condition of genus-zero invariants:
  /// sum_i (2n - |a_i|) = 2 (n + <c1, beta> + (k - 3)).
  static bool dimensionOk(const ManifoldSpec& spec, const std::vector<int>& classes,
                          const CurveClass& beta);

  /// Axiom-reduced lookup; see the module contract for the reduction order.
  LookupResult lookup(std::vector<int> classes, const CurveClass& beta) const;

  /// Classical triple intersection from the spec tensor (beta = 0 arity-3
  /// values); Unknown when the spec carries no tensor.
  LookupResult classicalTriple(int i, int j, int k) const;

  bool covered(int arity, const Rational& energy) const;

  /// True when absent keys mean zero everywhere (an unbounded region
  /// exists); with the largest stored entry energy this decides whether a
  /// truncation at some cap is in fact exact.
  bool fullyDeclared() const;
  Rational maxEntryEnergy() const;

 private:
  const ManifoldSpec* spec_;
  std::map<GwKey, Rational> entries_;
  std::vector<CompletenessRegion> completeness_;
};

GwTable tableFromJson(const ManifoldSpec& spec, const nlohmann::json& j,
                      std::vector<std::string>* warnings = nullptr);
GwTable loadTable(const ManifoldSpec& spec, const std::string& path,
                  std::vector<std::string>* warnings = nullptr);
nlohmann::ordered_json tableToJson(const GwTable& table);
void saveTable(const GwTable& table, const std::string& path);

}  // namespace qh

#endif  // QH_GWDATA_HPP
