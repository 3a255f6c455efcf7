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

#include "qh/unipoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace qh {

void UniPoly::normalize() {
  while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

UniPoly UniPoly::x() { return UniPoly({Rational(0), Rational(1)}); }

const Rational& UniPoly::coeff(std::size_t i) const {
  static const Rational zero(0);
  return i < c_.size() ? c_[i] : zero;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.isZero() || b.isZero()) return UniPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& s) const {
  if (s.isZero()) return UniPoly();
  UniPoly r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

UniPoly UniPoly::monic() const {
  if (isZero()) throw std::invalid_argument("UniPoly: monic of zero");
  return scaled(leading().inverse());
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(d));
}

Rational UniPoly::evaluate(const Rational& t) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
  return r;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.isZero()) throw std::invalid_argument("UniPoly: division by zero polynomial");
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo;
  int db = b.degree();
  Rational lb = b.leading();
  int dr = static_cast<int>(rem.size()) - 1;
  while (dr >= 0 && rem[dr].isZero()) --dr;
  if (dr >= db) quo.assign(dr - db + 1, Rational(0));
  while (dr >= db) {
    Rational f = rem[dr] / lb;
    quo[dr - db] = f;
    for (int i = 0; i <= db; ++i) rem[dr - db + i] -= f * b.c_[i];
    --dr;
    while (dr >= 0 && rem[dr].isZero()) --dr;
  }
  rem.resize(dr + 1);
  q = UniPoly(std::move(quo));
  r = UniPoly(std::move(rem));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.isZero() && b.isZero()) throw std::invalid_argument("gcd: both polynomials zero");
  UniPoly f = a, g = b;
  while (!g.isZero()) {
    UniPoly q, r;
    UniPoly::divmod(f, g, q, r);
    f = std::move(g);
    g = std::move(r);
  }
  return f.monic();
}

ExtGcd extgcd(const UniPoly& a, const UniPoly& b) {
  if (a.isZero() && b.isZero()) throw std::invalid_argument("extgcd: both polynomials zero");
  UniPoly r0 = a, r1 = b;
  UniPoly u0 = UniPoly::constant(1), u1;
  UniPoly v0, v1 = UniPoly::constant(1);
  while (!r1.isZero()) {
    UniPoly q, r;
    UniPoly::divmod(r0, r1, q, r);
    UniPoly u2 = u0 - q * u1;
    UniPoly v2 = v0 - q * v1;
    r0 = std::move(r1); r1 = std::move(r);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  Rational lead = r0.leading().inverse();
  ExtGcd out{r0.scaled(lead), u0.scaled(lead), v0.scaled(lead)};
  assert(out.u * a + out.v * b == out.g);
  return out;
}

SquarefreeSplit gcdSquarefree(const UniPoly& p) {
  if (p.isZero()) throw std::invalid_argument("gcdSquarefree: zero polynomial");
  if (p.degree() == 0) return {UniPoly::constant(1), UniPoly::constant(1)};
  UniPoly rep = gcd(p, p.derivative());
  UniPoly q, r;
  UniPoly::divmod(p.monic(), rep, q, r);
  assert(r.isZero());
  return {rep, q.monic()};
}

bool hasSimpleRoot(const UniPoly& p) {
  auto s = gcdSquarefree(p);
  if (s.squarefree.degree() == 0) return false;  // constant: no roots at all
  return gcd(s.squarefree, s.repeated).degree() < s.squarefree.degree();
}

namespace {

constexpr unsigned long kTrialBound = 1000000;

// Divisors of |n| via trial division; fails on large composite cofactors.
bool divisorsOf(const Int& n, std::vector<Int>& out) {
  Int m = abs(n);
  if (m == 0) return false;
  std::vector<std::pair<Int, unsigned>> fac;
  for (unsigned long p = 2; Int(p) * Int(p) <= m && p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
    if (m % p == 0) {
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      fac.emplace_back(Int(p), e);
    }
  }
  if (m > 1) {
    if (mpz_probab_prime_p(m.get_mpz_t(), 30) == 0 && m > Int(kTrialBound) * Int(kTrialBound))
      return false;
    fac.emplace_back(m, 1);
  }
  out = {Int(1)};
  for (const auto& [p, e] : fac) {
    std::size_t base = out.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return true;
}

}  // namespace

RationalRoots rationalRoots(const UniPoly& p) {
  RationalRoots out;
  if (p.isZero()) throw std::invalid_argument("rationalRoots: zero polynomial");
  UniPoly q = p;
  // multiplicity of the root 0
  int zeroMult = 0;
  while (!q.isZero() && q.coeff(0).isZero()) {
    std::vector<Rational> shifted(q.coeffs().begin() + 1, q.coeffs().end());
    q = UniPoly(std::move(shifted));
    ++zeroMult;
  }
  if (zeroMult > 0) out.roots.emplace_back(Rational(0), zeroMult);
  if (q.degree() <= 0) return out;

  // clear denominators to an integer polynomial
  Int lcm = 1;
  for (const auto& c : q.coeffs()) lcm = ::lcm(lcm, c.denominator());
  std::vector<Int> ic;
  ic.reserve(q.coeffs().size());
  for (const auto& c : q.coeffs()) ic.push_back(c.numerator() * (lcm / c.denominator()));

  std::vector<Int> ds, dl;
  if (!divisorsOf(ic.front(), ds) || !divisorsOf(ic.back(), dl)) {
    out.partial = true;
    return out;
  }
  std::vector<Rational> candidates;
  for (const Int& a : ds)
    for (const Int& b : dl) {
      candidates.push_back(Rational(a, b));
      candidates.push_back(Rational(-a, b));
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const Rational& r : candidates) {
    if (!q.evaluate(r).isZero()) continue;
    int mult = 0;
    UniPoly lin({-r, Rational(1)});
    UniPoly rest = q, quo, rem;
    for (;;) {
      UniPoly::divmod(rest, lin, quo, rem);
      if (!rem.isZero()) break;
      ++mult;
      rest = quo;
      if (rest.degree() < 1) break;
    }
    out.roots.emplace_back(r, mult);
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace qh
