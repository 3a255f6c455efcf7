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

#include "qh/fixtures.hpp"

#include <algorithm>

namespace qh {

namespace {

struct TableBuilder {
  std::map<GwKey, Rational> entries;
  std::vector<CompletenessRegion> regions;

  void add(std::vector<int> classes, std::vector<long long> beta, Rational value) {
    std::sort(classes.begin(), classes.end());
    GwKey key{std::move(classes), CurveClass{std::move(beta)}};
    entries.emplace(std::move(key), std::move(value));
  }
  void completeTo(std::optional<Rational> maxEnergy) {
    regions.push_back({std::nullopt, std::move(maxEnergy)});
  }
};

void addTriple(ManifoldSpec& spec, int i, int j, int k, Rational v) {
  std::array<int, 3> key{i, j, k};
  std::sort(key.begin(), key.end());
  (*spec.classicalTriple)[key] = std::move(v);
}

// CP^n: basis Delta_i = [CP^{n-i}], antidiagonal pairing, x^{n+1} = q.
Fixture projectiveSpace(int n, const std::string& name) {
  auto spec = std::make_shared<ManifoldSpec>();
  spec->dim2n = 2 * n;
  std::vector<std::string> names;
  if (n == 1)
    names = {"M", "pt"};
  else if (n == 2)
    names = {"M", "L", "pt"};
  else if (n == 3)
    names = {"M", "H", "L", "pt"};
  else
    names = {"M", "H", "P", "L", "pt"};
  for (int i = 0; i <= n; ++i) spec->basis.push_back({names[i], 2 * (n - i)});
  spec->pairing = Matrix<Rational>(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) spec->pairing(i, n - i) = Rational(1);
  spec->curveBasis = {"L"};
  spec->c1 = {n + 1};
  spec->omega = {Rational(1)};
  spec->coneGenerators = {CurveClass{{1}}};
  spec->classicalTriple.emplace();
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k)
        if (i + j + k == n) addTriple(*spec, i, j, k, Rational(1));

  TableBuilder t;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k)
        if (i + j + k == 2 * n + 1) t.add({i, j, k}, {1}, Rational(1));
  if (n == 1) {
    t.completeTo(std::nullopt);  // every key divisor-reduces; table is total
  } else if (n == 2) {
    // rational plane curves through 3d - 1 points: N_2 = 1, N_3 = 12
    t.add({2, 2, 2, 2, 2}, {2}, Rational(1));
    t.add({2, 2, 2, 2, 2, 2, 2, 2}, {3}, Rational(12));
    t.completeTo(Rational(3));
  } else if (n == 3) {
    // lines and conics in P^3 against point/line incidences
    t.add({2, 2, 2, 2}, {1}, Rational(2));
    t.add({2, 2, 2, 2, 2, 2, 2, 2}, {2}, Rational(92));
    t.add({2, 2, 2, 2, 2, 2, 3}, {2}, Rational(18));
    t.add({2, 2, 2, 2, 3, 3}, {2}, Rational(4));
    t.add({2, 2, 3, 3, 3}, {2}, Rational(1));
    t.completeTo(Rational(2));
  } else {
    // lines in P^4: Schubert numbers on G(1,4)
    t.add({2, 2, 2, 2, 2, 2}, {1}, Rational(5));
    t.add({2, 2, 2, 2, 3}, {1}, Rational(3));
    t.add({2, 2, 3, 3}, {1}, Rational(2));
    t.add({2, 2, 2, 4}, {1}, Rational(1));
    t.completeTo(Rational(1));
  }
  spec->validate();
  auto table = std::make_shared<GwTable>(*spec, std::move(t.entries), std::move(t.regions));
  return Fixture{name, spec, table};
}

std::shared_ptr<ManifoldSpec> sphereProductSpec() {
  auto spec = std::make_shared<ManifoldSpec>();
  spec->dim2n = 4;
  spec->basis = {{"M", 4}, {"A", 2}, {"B", 2}, {"pt", 0}};
  spec->pairing = Matrix<Rational>(4, 4);
  spec->pairing(0, 3) = spec->pairing(3, 0) = Rational(1);
  spec->pairing(1, 2) = spec->pairing(2, 1) = Rational(1);
  spec->curveBasis = {"a", "b"};
  spec->c1 = {2, 2};
  spec->omega = {Rational(1), Rational(1)};
  spec->coneGenerators = {CurveClass{{1, 0}}, CurveClass{{0, 1}}};
  spec->classicalTriple.emplace();
  addTriple(*spec, 0, 0, 3, Rational(1));
  addTriple(*spec, 0, 1, 2, Rational(1));
  return spec;
}

Fixture sphereProduct() {
  auto spec = sphereProductSpec();
  spec->validate();
  TableBuilder t;
  t.add({1, 1, 3}, {1, 0}, Rational(1));
  t.add({2, 2, 3}, {0, 1}, Rational(1));
  t.add({3, 3, 3}, {1, 1}, Rational(1));
  // bidegree (1,2) and (2,1) rational curves through five points
  t.add({3, 3, 3, 3, 3}, {1, 2}, Rational(1));
  t.add({3, 3, 3, 3, 3}, {2, 1}, Rational(1));
  t.completeTo(Rational(3));
  auto table = std::make_shared<GwTable>(*spec, std::move(t.entries), std::move(t.regions));
  return Fixture{"s2xs2", spec, table};
}

// Degenerate at z = (1,1) but generically semisimple: the A-block squares
// to (z2 - z1) [M].
Fixture bigsympFixture() {
  auto spec = sphereProductSpec();
  spec->validate();
  TableBuilder t;
  t.add({1, 1, 3}, {0, 1}, Rational(1));
  t.add({1, 1, 3}, {1, 0}, Rational(-1));
  t.add({2, 2, 3}, {0, 1}, Rational(1));
  t.add({3, 3, 3}, {0, 2}, Rational(1));
  t.add({3, 3, 3}, {1, 1}, Rational(-1));
  t.completeTo(std::nullopt);
  auto table = std::make_shared<GwTable>(*spec, std::move(t.entries), std::move(t.regions));
  return Fixture{"bigsymp", spec, table};
}

// Q[e]/(e^2): no quantum corrections, square-zero class.
Fixture nilpotentFixture() {
  auto spec = std::make_shared<ManifoldSpec>();
  spec->dim2n = 2;
  spec->basis = {{"M", 2}, {"e", 0}};
  spec->pairing = Matrix<Rational>(2, 2);
  spec->pairing(0, 1) = spec->pairing(1, 0) = Rational(1);
  spec->curveBasis = {"L"};
  spec->c1 = {1};
  spec->omega = {Rational(1)};
  spec->classicalTriple.emplace();
  addTriple(*spec, 0, 0, 1, Rational(1));
  spec->validate();
  TableBuilder t;
  t.completeTo(std::nullopt);
  auto table = std::make_shared<GwTable>(*spec, std::move(t.entries), std::move(t.regions));
  return Fixture{"nilpotent", spec, table};
}

// Two classes of equal energy with cancelling three-point values at z = 1.
Fixture cancelFixture() {
  auto spec = sphereProductSpec();
  spec->c1 = {2, 4};
  spec->omega = {Rational(1), Rational(2)};
  spec->validate();
  TableBuilder t;
  t.add({3, 3, 3}, {2, 0}, Rational(1));
  t.add({3, 3, 3}, {0, 1}, Rational(-1));
  t.completeTo(std::nullopt);
  auto table = std::make_shared<GwTable>(*spec, std::move(t.entries), std::move(t.regions));
  return Fixture{"cancel", spec, table};
}

}  // namespace

std::vector<std::string> fixtureNames() {
  return {"cp1", "cp2", "cp3", "cp4", "s2xs2", "bigsymp", "nilpotent", "cancel"};
}

Fixture makeFixture(const std::string& name) {
  if (name == "cp1") return projectiveSpace(1, name);
  if (name == "cp2") return projectiveSpace(2, name);
  if (name == "cp3") return projectiveSpace(3, name);
  if (name == "cp4") return projectiveSpace(4, name);
  if (name == "s2xs2") return sphereProduct();
  if (name == "bigsymp") return bigsympFixture();
  if (name == "nilpotent") return nilpotentFixture();
  if (name == "cancel") return cancelFixture();
  throw InputError("unknown fixture \"" + name + "\" (try: fixtures list)");
}

}  // namespace qh
