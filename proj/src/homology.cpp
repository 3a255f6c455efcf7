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

#include "qh/homology.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qh {

using nlohmann::json;
using nlohmann::ordered_json;

bool CurveClass::isZero() const {
  return std::all_of(c.begin(), c.end(), [](long long v) { return v == 0; });
}

CurveClass operator+(const CurveClass& a, const CurveClass& b) {
  if (a.c.size() != b.c.size()) throw std::invalid_argument("CurveClass: size mismatch");
  CurveClass r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

CurveClass operator-(const CurveClass& a, const CurveClass& b) {
  if (a.c.size() != b.c.size()) throw std::invalid_argument("CurveClass: size mismatch");
  CurveClass r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

std::string CurveClass::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ")";
  return os.str();
}

int ManifoldSpec::s() const {
  int count = 0;
  for (std::size_t i = 1; i < basis.size(); ++i)
    if (basis[i].degree == dim2n - 2) ++count;
  return count;
}

int ManifoldSpec::classIndex(const std::string& name) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].name == name) return static_cast<int>(i);
  throw InputError("unknown basis class \"" + name + "\"");
}

Rational ManifoldSpec::energy(const CurveClass& beta) const {
  Rational e(0);
  for (std::size_t i = 0; i < omega.size(); ++i)
    e += omega[i] * Rational(static_cast<long>(beta.c.at(i)));
  return e;
}

long long ManifoldSpec::chern(const CurveClass& beta) const {
  long long e = 0;
  for (std::size_t i = 0; i < c1.size(); ++i) e += c1[i] * beta.c.at(i);
  return e;
}

long long ManifoldSpec::divisorCap(int i, const CurveClass& beta) const {
  if (i < 1 || i > s()) throw std::invalid_argument("divisorCap: not a divisor index");
  if (!divisorPairing) return beta.c.at(i - 1);
  Rational v(0);
  for (std::size_t j = 0; j < beta.c.size(); ++j)
    v += (*divisorPairing)(i - 1, j) * Rational(static_cast<long>(beta.c[j]));
  return toLong(v);
}

std::optional<Rational> ManifoldSpec::classicalTripleValue(int i, int j, int k) const {
  if (!classicalTriple) return std::nullopt;
  if (degree(i) + degree(j) + degree(k) != 2 * dim2n) return Rational(0);
  std::array<int, 3> key{i, j, k};
  std::sort(key.begin(), key.end());
  auto it = classicalTriple->find(key);
  return it == classicalTriple->end() ? Rational(0) : it->second;
}

void ManifoldSpec::validate() const {
  if (dim2n <= 0 || dim2n % 2 != 0) throw InputError("spec: dim2n must be a positive even integer");
  if (basis.empty()) throw InputError("spec: empty basis");
  if (basis[0].degree != dim2n) throw InputError("spec: basis[0] must have degree dim2n");
  int sCount = s();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    int d = basis[i].degree;
    if (d < 0 || d > dim2n || d % 2 != 0)
      throw InputError("spec: class " + basis[i].name + " has invalid degree");
    if (i > 0 && d == dim2n)
      throw InputError("spec: degree-2n class other than the unit: " + basis[i].name);
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (basis[i].name == basis[j].name) throw InputError("spec: duplicate class name");
  }
  // divisor classes must occupy exactly the indices 1..s
  for (int i = 1; i <= sCount; ++i)
    if (basis[i].degree != dim2n - 2)
      throw InputError("spec: degree 2n-2 classes must occupy indices 1..s");
  std::size_t nb = basis.size();
  if (pairing.rows() != nb || pairing.cols() != nb) throw InputError("spec: pairing shape");
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      if (pairing(i, j) != pairing(j, i)) throw InputError("spec: pairing not symmetric");
      if (!pairing(i, j).isZero() && basis[i].degree + basis[j].degree != dim2n)
        throw InputError("spec: pairing violates degree orthogonality");
    }
  if (!inverse(pairing)) throw InputError("spec: pairing matrix is singular");
  if (static_cast<int>(curveBasis.size()) != sCount)
    throw InputError("spec: curveBasis size must equal the number of divisor classes");
  if (c1.size() != curveBasis.size() || omega.size() != curveBasis.size())
    throw InputError("spec: c1/omega must have one entry per curve coordinate");
  for (const auto& w : omega)
    if (w.sign() <= 0) throw InputError("spec: omega entries must be positive");
  for (const auto& g : coneGenerators) {
    if (g.c.size() != curveBasis.size()) throw InputError("spec: cone generator size mismatch");
    if (g.isZero()) throw InputError("spec: zero cone generator");
  }
  if (divisorPairing) {
    if (divisorPairing->rows() != static_cast<std::size_t>(sCount) ||
        divisorPairing->cols() != static_cast<std::size_t>(sCount))
      throw InputError("spec: divisorPairing must be s x s");
    for (std::size_t i = 0; i < divisorPairing->rows(); ++i)
      for (std::size_t j = 0; j < divisorPairing->cols(); ++j)
        if (!(*divisorPairing)(i, j).isInteger())
          throw InputError("spec: divisorPairing entries must be integers");
    if (!inverse(*divisorPairing)) throw InputError("spec: divisorPairing singular");
  }
  if (classicalTriple) {
    for (const auto& [key, val] : *classicalTriple) {
      for (int idx : key)
        if (idx < 0 || idx >= static_cast<int>(nb)) throw InputError("spec: triple index range");
      if (!std::is_sorted(key.begin(), key.end()))
        throw InputError("spec: triple keys must be sorted");
      if (degree(key[0]) + degree(key[1]) + degree(key[2]) != 2 * dim2n)
        throw InputError("spec: triple tensor entry violates the degree constraint");
    }
    // unit consistency: (i, j, 0) must reproduce the pairing
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j) {
        auto v = classicalTripleValue(0, static_cast<int>(i), static_cast<int>(j));
        if (*v != pairing(i, j))
          throw InputError("spec: triple tensor disagrees with the pairing at (" +
                           basis[i].name + "," + basis[j].name + ",[M])");
      }
  }
  if (blowup) {
    if (blowup->halfDim < 2) throw InputError("spec: blowup halfDim must be >= 2");
    if (blowup->eIndex.size() + 1 != static_cast<std::size_t>(blowup->halfDim))
      throw InputError("spec: blowup eIndex must list E_1..E_{n-1}");
  }
}

DualBasis dualBasis(const ManifoldSpec& spec) {
  auto inv = inverse(spec.pairing);
  if (!inv) throw InputError("dualBasis: singular pairing");
  // delta identity: sum_m g^{km} pairing(m, j) = delta_j^k
  Matrix<Rational> prod = *inv * spec.pairing;
  if (!(prod == Matrix<Rational>::identity(spec.pairing.rows())))
    throw std::logic_error("dualBasis: delta identity failed");
  return DualBasis{*inv};
}

std::vector<CurveClass> enumerateCone(const ManifoldSpec& spec, const Rational& cap) {
  std::vector<Rational> genEnergy;
  for (const auto& g : spec.coneGenerators) {
    Rational e = spec.energy(g);
    if (e.sign() <= 0)
      throw InputError("enumerateCone: generator " + g.str() + " has nonpositive energy");
    genEnergy.push_back(e);
  }
  std::set<CurveClass> seen;
  CurveClass zero;
  zero.c.assign(spec.curveBasis.size(), 0);
  std::vector<CurveClass> out;
  constexpr std::size_t kMaxCone = 200000;

  // depth-first over generator multiplicities
  seen.insert(zero);
  std::function<void(const CurveClass&, const Rational&, std::size_t)> walk =
      [&](const CurveClass& cur, const Rational& used, std::size_t from) {
        for (std::size_t i = from; i < spec.coneGenerators.size(); ++i) {
          Rational e = used + genEnergy[i];
          if (e > cap) continue;
          CurveClass nxt = cur + spec.coneGenerators[i];
          if (seen.size() > kMaxCone)
            throw InputError("enumerateCone: more than 200000 classes under the cap");
          seen.insert(nxt);
          walk(nxt, e, i);
        }
      };
  walk(zero, Rational(0), 0);
  out.assign(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [&](const CurveClass& a, const CurveClass& b) {
    Rational ea = spec.energy(a), eb = spec.energy(b);
    if (ea != eb) return ea < eb;
    return a < b;
  });
  return out;
}

std::vector<std::pair<CurveClass, CurveClass>> decompositions(
    const CurveClass& beta, const std::vector<CurveClass>& cone) {
  std::set<CurveClass> members(cone.begin(), cone.end());
  if (!members.count(beta)) throw InputError("decompositions: class not in the enumerated cone");
  std::vector<std::pair<CurveClass, CurveClass>> out;
  for (const auto& b1 : cone) {
    CurveClass b2 = beta - b1;
    if (members.count(b2)) out.emplace_back(b1, b2);
  }
  return out;
}

namespace {

Rational ratFromJson(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw InputError("expected a rational as \"p/q\" string, got " + j.dump());
}

Matrix<Rational> matrixFromJson(const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("expected a nonempty matrix");
  std::size_t rows = j.size(), cols = j[0].size();
  Matrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw InputError("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = ratFromJson(j[i][k]);
  }
  return m;
}

ordered_json matrixToJson(const Matrix<Rational>& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

CurveClass curveFromJson(const json& j) {
  CurveClass c;
  for (const auto& v : j) c.c.push_back(v.get<long long>());
  return c;
}

}  // namespace

ordered_json specToJson(const ManifoldSpec& spec) {
  ordered_json j;
  j["dim2n"] = spec.dim2n;
  j["basis"] = ordered_json::array();
  for (const auto& b : spec.basis) j["basis"].push_back({{"name", b.name}, {"degree", b.degree}});
  j["pairing"] = matrixToJson(spec.pairing);
  j["curveBasis"] = spec.curveBasis;
  j["c1"] = spec.c1;
  ordered_json om = ordered_json::array();
  for (const auto& w : spec.omega) om.push_back(w.str());
  j["omega"] = om;
  j["coneGenerators"] = ordered_json::array();
  for (const auto& g : spec.coneGenerators) j["coneGenerators"].push_back(g.c);
  if (spec.classicalTriple) {
    ordered_json t = ordered_json::array();
    for (const auto& [key, val] : *spec.classicalTriple) {
      t.push_back({{"classes", {spec.basis[key[0]].name, spec.basis[key[1]].name,
                                spec.basis[key[2]].name}},
                   {"value", val.str()}});
    }
    j["classicalTriple"] = t;
  }
  if (spec.divisorPairing) j["divisorPairing"] = matrixToJson(*spec.divisorPairing);
  if (spec.blowup) {
    j["blowup"] = {{"halfDim", spec.blowup->halfDim},
                   {"eIndex", spec.blowup->eIndex},
                   {"epsilon", spec.blowup->epsilon.str()}};
  }
  return j;
}

ManifoldSpec specFromJson(const json& j) {
  ManifoldSpec spec;
  try {
    spec.dim2n = j.at("dim2n").get<int>();
    for (const auto& b : j.at("basis"))
      spec.basis.push_back({b.at("name").get<std::string>(), b.at("degree").get<int>()});
    spec.pairing = matrixFromJson(j.at("pairing"));
    spec.curveBasis = j.at("curveBasis").get<std::vector<std::string>>();
    spec.c1 = j.at("c1").get<std::vector<long long>>();
    for (const auto& w : j.at("omega")) spec.omega.push_back(ratFromJson(w));
    for (const auto& g : j.at("coneGenerators")) spec.coneGenerators.push_back(curveFromJson(g));
    if (j.contains("classicalTriple")) {
      std::map<std::array<int, 3>, Rational> tensor;
      for (const auto& e : j.at("classicalTriple")) {
        const auto& names = e.at("classes");
        if (names.size() != 3) throw InputError("classicalTriple entries take 3 classes");
        std::array<int, 3> key{};
        for (int t = 0; t < 3; ++t) key[t] = spec.classIndex(names[t].get<std::string>());
        std::sort(key.begin(), key.end());
        Rational val = ratFromJson(e.at("value"));
        if (tensor.count(key)) throw InputError("classicalTriple: duplicate key");
        if (!val.isZero()) tensor.emplace(key, val);
      }
      spec.classicalTriple = std::move(tensor);
    }
    if (j.contains("divisorPairing")) spec.divisorPairing = matrixFromJson(j.at("divisorPairing"));
    if (j.contains("blowup")) {
      BlowupInfo info;
      info.halfDim = j.at("blowup").at("halfDim").get<int>();
      info.eIndex = j.at("blowup").at("eIndex").get<std::vector<int>>();
      info.epsilon = ratFromJson(j.at("blowup").at("epsilon"));
      spec.blowup = info;
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("spec parse: ") + e.what());
  }
  spec.validate();
  return spec;
}

ManifoldSpec loadSpec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spec file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("spec " + path + ": " + e.what());
  }
  return specFromJson(j);
}

void saveSpec(const ManifoldSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write spec file " + path);
  out << specToJson(spec).dump(2) << "\n";
}

}  // namespace qh
