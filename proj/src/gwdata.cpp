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

#include "qh/gwdata.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

namespace qh {

using nlohmann::json;
using nlohmann::ordered_json;

GwTable::GwTable(const ManifoldSpec& spec, std::map<GwKey, Rational> entries,
                 std::vector<CompletenessRegion> completeness,
                 std::vector<std::string>* warnings)
    : spec_(&spec), entries_(std::move(entries)), completeness_(std::move(completeness)) {
  std::set<CurveClass> coneHull;
  for (auto it = entries_.begin(); it != entries_.end();) {
    const GwKey& key = it->first;
    if (key.classes.size() < 3) throw InputError("gw table: keys need at least 3 classes");
    if (!std::is_sorted(key.classes.begin(), key.classes.end()))
      throw InputError("gw table: key classes must be sorted");
    for (int c : key.classes)
      if (c < 0 || c > spec.N()) throw InputError("gw table: class index out of range");
    if (key.beta.c.size() != spec.curveBasis.size())
      throw InputError("gw table: curve class size mismatch");
    if (!dimensionOk(spec, key.classes, key.beta))
      throw InputError("gw table: entry fails the dimension filter");
    if (it->second.isZero()) {
      it = entries_.erase(it);
      continue;
    }
    ++it;
  }
  if (warnings) {
    // the declared cone should contain every table class (advisory only)
    Rational maxE(0);
    for (const auto& [k, v] : entries_) maxE = std::max(maxE, spec.energy(k.beta));
    if (!entries_.empty()) {
      auto cone = enumerateCone(spec, maxE);
      std::set<CurveClass> members(cone.begin(), cone.end());
      for (const auto& [k, v] : entries_)
        if (!members.count(k.beta))
          warnings->push_back("gw table: class " + k.beta.str() +
                              " lies outside the declared effective cone");
    }
  }
}

bool GwTable::dimensionOk(const ManifoldSpec& spec, const std::vector<int>& classes,
                          const CurveClass& beta) {
  long long lhs = 0;
  for (int c : classes) lhs += spec.codegree(c);
  long long k = static_cast<long long>(classes.size());
  long long rhs = 2 * (spec.n() + spec.chern(beta) + (k - 3));
  return lhs == rhs;
}

LookupResult GwTable::classicalTriple(int i, int j, int k) const {
  auto v = spec_->classicalTripleValue(i, j, k);
  if (!v) return LookupResult::unknown();
  return LookupResult::of(*v);
}

bool GwTable::covered(int arity, const Rational& energy) const {
  for (const auto& r : completeness_) {
    if (r.maxArity && arity > *r.maxArity) continue;
    if (r.maxEnergy && energy > *r.maxEnergy) continue;
    return true;
  }
  return false;
}

bool GwTable::fullyDeclared() const {
  for (const auto& r : completeness_)
    if (!r.maxArity && !r.maxEnergy) return true;
  return false;
}

Rational GwTable::maxEntryEnergy() const {
  Rational m(0);
  for (const auto& [k, v] : entries_) m = std::max(m, spec_->energy(k.beta));
  return m;
}

LookupResult GwTable::lookup(std::vector<int> classes, const CurveClass& beta) const {
  if (classes.size() < 3) throw InputError("lookup: at least 3 classes required");
  for (int c : classes)
    if (c < 0 || c > spec_->N()) throw InputError("lookup: class index out of range");
  std::sort(classes.begin(), classes.end());

  if (!dimensionOk(*spec_, classes, beta)) return LookupResult::of(Rational(0));

  // fundamental-class axiom: an [M] insertion kills everything except the
  // classical arity-3 values at beta = 0
  if (classes.front() == 0) {
    if (beta.isZero() && classes.size() == 3)
      return classicalTriple(classes[0], classes[1], classes[2]);
    return LookupResult::of(Rational(0));
  }

  // divisor axiom, one arity per step
  Rational factor(1);
  while (classes.size() > 3) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](int c) {
      return spec_->degree(c) == spec_->dim2n - 2;
    });
    if (it == classes.end()) break;
    int idx = *it;
    // divisor index within 1..s (divisor classes occupy exactly 1..s)
    factor *= Rational(static_cast<long>(spec_->divisorCap(idx, beta)));
    if (factor.isZero()) return LookupResult::of(Rational(0));
    classes.erase(it);
  }

  if (beta.isZero()) {
    if (classes.size() == 3) {
      auto r = classicalTriple(classes[0], classes[1], classes[2]);
      if (!r.known) return r;
      return LookupResult::of(factor * r.value);
    }
    // constant maps with more than three non-divisor marked points
    return LookupResult::of(Rational(0));
  }

  GwKey key{classes, beta};
  auto it = entries_.find(key);
  if (it != entries_.end()) return LookupResult::of(factor * it->second);
  if (covered(static_cast<int>(classes.size()), spec_->energy(beta)))
    return LookupResult::of(Rational(0));
  return LookupResult::unknown();
}

GwTable tableFromJson(const ManifoldSpec& spec, const json& j,
                      std::vector<std::string>* warnings) {
  std::map<GwKey, Rational> entries;
  std::vector<CompletenessRegion> regions;
  try {
    for (const auto& e : j.at("entries")) {
      GwKey key;
      for (const auto& name : e.at("classes"))
        key.classes.push_back(spec.classIndex(name.get<std::string>()));
      std::sort(key.classes.begin(), key.classes.end());
      for (const auto& v : e.at("beta")) key.beta.c.push_back(v.get<long long>());
      Rational val = Rational::parse(e.at("value").is_string()
                                         ? e.at("value").get<std::string>()
                                         : e.at("value").dump());
      if (entries.count(key)) throw InputError("gw table: duplicate entry");
      entries.emplace(std::move(key), std::move(val));
    }
    if (j.contains("completeness")) {
      for (const auto& r : j.at("completeness")) {
        CompletenessRegion region;
        if (r.contains("maxArity") && !r.at("maxArity").is_null())
          region.maxArity = r.at("maxArity").get<int>();
        if (r.contains("maxEnergy") && !r.at("maxEnergy").is_null())
          region.maxEnergy = Rational::parse(r.at("maxEnergy").get<std::string>());
        regions.push_back(region);
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("gw table parse: ") + e.what());
  }
  return GwTable(spec, std::move(entries), std::move(regions), warnings);
}

GwTable loadTable(const ManifoldSpec& spec, const std::string& path,
                  std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open gw table " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("gw table " + path + ": " + e.what());
  }
  return tableFromJson(spec, j, warnings);
}

ordered_json tableToJson(const GwTable& table) {
  ordered_json j;
  j["entries"] = ordered_json::array();
  for (const auto& [key, val] : table.entries()) {
    ordered_json names = ordered_json::array();
    for (int c : key.classes) names.push_back(table.spec().basis[c].name);
    j["entries"].push_back({{"classes", names}, {"beta", key.beta.c}, {"value", val.str()}});
  }
  j["completeness"] = ordered_json::array();
  for (const auto& r : table.completeness()) {
    ordered_json region;
    region["maxArity"] = r.maxArity ? ordered_json(*r.maxArity) : ordered_json(nullptr);
    region["maxEnergy"] = r.maxEnergy ? ordered_json(r.maxEnergy->str()) : ordered_json(nullptr);
    j["completeness"].push_back(region);
  }
  return j;
}

void saveTable(const GwTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write gw table " + path);
  out << tableToJson(table).dump(2) << "\n";
}

}  // namespace qh
