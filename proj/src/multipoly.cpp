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

#include "qh/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace qh {

std::optional<std::size_t> PolyRing::find(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::int32_t Monomial::exponent(std::uint32_t var) const {
  for (const auto& [v, x] : e)
    if (v == var) return x;
  return 0;
}

long Monomial::totalDegreeAbs() const {
  long d = 0;
  for (const auto& [v, x] : e) d += std::abs(static_cast<long>(x));
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.e.reserve(a.e.size() + b.e.size());
  std::size_t i = 0, j = 0;
  while (i < a.e.size() || j < b.e.size()) {
    if (j == b.e.size() || (i < a.e.size() && a.e[i].first < b.e[j].first)) {
      r.e.push_back(a.e[i++]);
    } else if (i == a.e.size() || b.e[j].first < a.e[i].first) {
      r.e.push_back(b.e[j++]);
    } else {
      std::int32_t s = a.e[i].second + b.e[j].second;
      if (s != 0) r.e.emplace_back(a.e[i].first, s);
      ++i;
      ++j;
    }
  }
  return r;
}

bool MonoLess::operator()(const Monomial& a, const Monomial& b) const {
  std::size_t i = 0, j = 0;
  while (i < a.e.size() || j < b.e.size()) {
    std::uint32_t va = i < a.e.size() ? a.e[i].first : UINT32_MAX;
    std::uint32_t vb = j < b.e.size() ? b.e[j].first : UINT32_MAX;
    std::uint32_t v = std::min(va, vb);
    std::int32_t ea = va == v ? a.e[i++].second : 0;
    std::int32_t eb = vb == v ? b.e[j++].second : 0;
    if (ea != eb) return ea < eb;
  }
  return false;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.isZero()) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t var, std::int32_t exp) {
  if (var >= ring->size()) throw std::invalid_argument("MultiPoly: bad variable index");
  if (exp < 0 && !ring->var(var).laurent)
    throw std::invalid_argument("MultiPoly: negative exponent on non-laurent variable " +
                                ring->var(var).name);
  MultiPoly p(std::move(ring));
  if (exp != 0)
    p.terms_.emplace(Monomial{{{static_cast<std::uint32_t>(var), exp}}}, Rational(1));
  else
    p.terms_.emplace(Monomial{}, Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(RingPtr ring, Monomial m, Rational c) {
  MultiPoly p(std::move(ring));
  p.addTerm(m, c);
  return p;
}

bool MultiPoly::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational MultiPoly::constantValue() const {
  if (terms_.empty()) return Rational(0);
  if (!isConstant()) throw std::logic_error("MultiPoly: not constant");
  return terms_.begin()->second;
}

long MultiPoly::totalDegreeAbs() const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.totalDegreeAbs());
  return d;
}

long MultiPoly::clearedTotalDegree() const {
  if (terms_.empty()) return 0;
  std::map<std::uint32_t, std::int32_t> minExp;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, x] : m.e)
      if (x < 0) minExp[v] = std::min(minExp.count(v) ? minExp[v] : 0, x);
  long best = 0;
  for (const auto& [m, c] : terms_) {
    long d = 0;
    for (const auto& [v, x] : m.e) {
      auto it = minExp.find(v);
      d += x - (it == minExp.end() ? 0 : it->second);
    }
    // variables absent from m but with a negative minimum still contribute
    for (const auto& [v, mn] : minExp)
      if (m.exponent(v) == 0) d += -mn;
    best = std::max(best, d);
  }
  return best;
}

void MultiPoly::adoptRing(const RingPtr& other) {
  if (!other) return;
  if (!ring_) {
    ring_ = other;
    return;
  }
  if (ring_ != other)
    throw std::logic_error("MultiPoly: mixing polynomials from different rings");
}

void MultiPoly::addTerm(const Monomial& m, const Rational& c) {
  if (c.isZero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  adoptRing(o.ring_);
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  adoptRing(o.ring_);
  for (const auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(a.ring_ ? a.ring_ : b.ring_);
  r.adoptRing(b.ring_);
  r.adoptRing(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.addTerm(ma * mb, ca * cb);
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r(ring_);
  if (c.isZero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

MultiPoly MultiPoly::shifted(const Monomial& m) const {
  MultiPoly r(ring_);
  for (const auto& [t, v] : terms_) r.terms_.emplace(t * m, v);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = Rational(1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::map<std::size_t, Rational>& values) const {
  MultiPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial rest;
    for (const auto& [v, x] : m.e) {
      auto it = values.find(v);
      if (it == values.end()) {
        rest.e.emplace_back(v, x);
      } else {
        if (it->second.isZero() && x < 0)
          throw std::invalid_argument("MultiPoly: zero substituted into inverted variable");
        coeff *= it->second.pow(x);
      }
    }
    r.addTerm(rest, coeff);
  }
  return r;
}

Rational MultiPoly::evaluate(const std::map<std::size_t, Rational>& values) const {
  MultiPoly s = substitute(values);
  if (!s.isConstant()) throw std::invalid_argument("MultiPoly: evaluation left free variables");
  return s.constantValue();
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c.isNegative() ? " - " : " + ");
    if (first && c.isNegative()) os << "-";
    first = false;
    Rational a = c.abs();
    bool wrote = false;
    if (a != Rational(1) || m.empty()) {
      os << a.str();
      wrote = true;
    }
    for (const auto& [v, x] : m.e) {
      if (wrote) os << "*";
      os << (ring_ ? ring_->var(v).name : "v" + std::to_string(v));
      if (x != 1) os << "^" << x;
      wrote = true;
    }
  }
  return os.str();
}

bool equalUpToUnit(const MultiPoly& f, const MultiPoly& g, Rational* unitCoeff,
                   Monomial* unitMono) {
  if (f.isZero() || g.isZero()) return f.isZero() && g.isZero();
  if (f.termCount() != g.termCount()) return false;
  const auto& [mf, cf] = *f.terms().begin();
  const auto& [mg, cg] = *g.terms().begin();
  // candidate unit: f = c * z^m * g
  Monomial inv;
  for (const auto& [v, x] : mg.e) inv.e.emplace_back(v, -x);
  Monomial shift = mf * inv;
  const RingPtr& ring = f.ring() ? f.ring() : g.ring();
  for (const auto& [v, x] : shift.e)
    if (ring && !ring->var(v).laurent) return false;
  Rational c = cf / cg;
  if (g.shifted(shift).scaled(c) != f) return false;
  if (unitCoeff) *unitCoeff = c;
  if (unitMono) *unitMono = shift;
  return true;
}

}  // namespace qh
