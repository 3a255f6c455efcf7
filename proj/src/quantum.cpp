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

#include "qh/quantum.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qh {

Validity Validity::combine(const Validity& a, const Validity& b) {
  Validity v;
  v.tainted = a.tainted || b.tainted;
  if (a.cap && b.cap)
    v.cap = std::min(*a.cap, *b.cap);
  else if (a.cap)
    v.cap = a.cap;
  else
    v.cap = b.cap;
  return v;
}

void NovikovElem::addTerm(const Rational& g, const Rational& a) {
  if (a.isZero()) return;
  auto [it, inserted] = terms.emplace(g, a);
  if (!inserted) {
    it->second += a;
    if (it->second.isZero()) terms.erase(it);
  }
}

void NovikovElem::truncate() {
  if (!v.cap) return;
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first > *v.cap)
      it = terms.erase(it);
    else
      ++it;
  }
}

NovikovElem NovikovElem::operator-() const {
  NovikovElem r;
  r.v = v;
  for (const auto& [g, a] : terms) r.terms.emplace(g, -a);
  return r;
}

NovikovElem& NovikovElem::operator+=(const NovikovElem& o) {
  v = Validity::combine(v, o.v);
  for (const auto& [g, a] : o.terms) addTerm(g, a);
  truncate();
  return *this;
}

NovikovElem& NovikovElem::operator-=(const NovikovElem& o) {
  v = Validity::combine(v, o.v);
  for (const auto& [g, a] : o.terms) addTerm(g, -a);
  truncate();
  return *this;
}

NovikovElem operator*(const NovikovElem& a, const NovikovElem& b) {
  NovikovElem r;
  r.v = Validity::combine(a.v, b.v);
  for (const auto& [g1, a1] : a.terms)
    for (const auto& [g2, a2] : b.terms) {
      Rational g = g1 + g2;
      if (r.v.cap && g > *r.v.cap) continue;
      r.addTerm(g, a1 * a2);
    }
  return r;
}

std::optional<Rational> NovikovElem::leadingExponent() const {
  if (terms.empty()) return std::nullopt;
  return terms.begin()->first;
}

std::optional<bool> NovikovElem::decidedNonzero() const {
  if (!terms.empty()) {
    if (!v.cap || terms.begin()->first < *v.cap) return true;
    return std::nullopt;  // only terms at the cap itself: could cancel above? keep honest
  }
  if (v.exact()) return false;
  return std::nullopt;
}

std::string NovikovElem::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, a] : terms) {
    if (!first) os << " + ";
    first = false;
    os << a.str();
    if (!g.isZero()) os << "*T^" << g.str();
  }
  return os.str();
}

DeformParam DeformParam::fullySymbolic(const ManifoldSpec& spec) {
  DeformParam d;
  d.divisor.assign(spec.s(), DeformCoord{});
  d.higher.assign(spec.N() - spec.s(), DeformCoord{});
  return d;
}

DeformParam DeformParam::zero(const ManifoldSpec& spec) {
  DeformParam d;
  d.divisor.assign(spec.s(), DeformCoord{false, Rational(1)});
  d.higher.assign(spec.N() - spec.s(), DeformCoord{false, Rational(0)});
  return d;
}

bool DeformParam::fullyEvaluated() const {
  auto eval = [](const DeformCoord& c) { return !c.symbolic; };
  return std::all_of(divisor.begin(), divisor.end(), eval) &&
         std::all_of(higher.begin(), higher.end(), eval);
}

bool DeformParam::fullySymbolicDivisors() const {
  return std::all_of(divisor.begin(), divisor.end(),
                     [](const DeformCoord& c) { return c.symbolic; });
}

QuantumContext::QuantumContext(const ManifoldSpec& spec, const GwTable& table, Rational cap)
    : spec_(&spec), table_(&table), cap_(std::move(cap)) {
  if (&table.spec() != &spec)
    throw std::invalid_argument("QuantumContext: table built over a different spec");
  std::vector<PolyRing::Var> vars;
  int s = spec.s();
  for (int i = 1; i <= spec.N(); ++i) {
    bool laurent = i <= s;
    std::string name = (laurent ? "z" : "x") + std::to_string(i);
    vars.push_back({name, laurent});
  }
  ring_ = std::make_shared<PolyRing>(std::move(vars));
  cone_ = enumerateCone(spec, cap_);
  dual_ = dualBasis(spec).rows;
  // energy as a linear function of divisor pairings: w = omega^T P^{-1}
  Matrix<Rational> p(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      p(i, j) = spec.divisorPairing ? (*spec.divisorPairing)(i, j)
                                    : Rational(i == j ? 1 : 0);
  auto pinv = inverse(p);
  if (!pinv) throw InputError("QuantumContext: divisorPairing singular");
  energyWeight_.assign(s, Rational(0));
  for (int j = 0; j < s; ++j)
    for (int i = 0; i < s; ++i) energyWeight_[j] += spec.omega[i] * (*pinv)(i, j);
  truncationExact_ = table.fullyDeclared() && table.maxEntryEnergy() <= cap_;
}

std::size_t QuantumContext::varOf(int classIndex) const {
  if (classIndex < 1 || classIndex > spec_->N())
    throw std::invalid_argument("varOf: index out of range");
  return static_cast<std::size_t>(classIndex - 1);
}

Rational QuantumContext::energyOfMonomial(const Monomial& m) const {
  Rational e(0);
  int s = spec_->s();
  for (const auto& [v, x] : m.e) {
    if (static_cast<int>(v) < s) e += energyWeight_[v] * Rational(static_cast<long>(x));
  }
  return e;
}

Rational QuantumContext::minimalEnergy(const MultiPoly& p) const {
  if (p.isZero()) throw std::invalid_argument("minimalEnergy: zero polynomial");
  bool first = true;
  Rational best(0);
  for (const auto& [m, c] : p.terms()) {
    Rational e = energyOfMonomial(m);
    if (first || e < best) best = e;
    first = false;
  }
  return best;
}

MultiPoly QuantumContext::energyLayer(const MultiPoly& p, const Rational& level) const {
  MultiPoly out(ring_);
  for (const auto& [m, c] : p.terms())
    if (energyOfMonomial(m) == level) out.addTerm(m, c);
  return out;
}

long alphaBound(const ManifoldSpec& spec, int i, int j, int k, const CurveClass& beta) {
  long degSum = spec.degree(i) / 2 + spec.degree(j) / 2 + spec.degree(k) / 2;
  return degSum + spec.chern(beta) - spec.dim2n;
}

namespace {

// enumerate multi-indices alpha over classes s+1..N with |alpha| <= bound
void forEachAlpha(int sPlus1, int N, long bound,
                  const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> alpha(std::max(0, N - sPlus1 + 1), 0);
  std::function<void(int, long)> rec = [&](int pos, long left) {
    if (pos == static_cast<int>(alpha.size())) {
      fn(alpha);
      return;
    }
    for (int take = 0; take <= left; ++take) {
      alpha[pos] = take;
      rec(pos + 1, left - take);
    }
    alpha[pos] = 0;
  };
  if (bound < 0) return;
  rec(0, bound);
}

}  // namespace

const UElem& QuantumContext::structureConstant(int i, int j, int k) const {
  std::array<int, 3> key{i, j, k};
  std::sort(key.begin(), key.end());
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  UElem out;
  out.v.cap = truncationExact_ ? std::nullopt : std::optional<Rational>(cap_);
  int s = spec_->s();
  for (const CurveClass& beta : cone_) {
    long bound = alphaBound(*spec_, key[0], key[1], key[2], beta);
    if (bound < 0) continue;
    MultiPoly coeff(ring_);
    forEachAlpha(s + 1, spec_->N(), bound, [&](const std::vector<int>& alpha) {
      std::vector<int> classes{key[0], key[1], key[2]};
      Rational weight(1);
      Monomial mono;
      for (std::size_t t = 0; t < alpha.size(); ++t) {
        int cls = s + 1 + static_cast<int>(t);
        for (int rep = 0; rep < alpha[t]; ++rep) classes.push_back(cls);
        if (alpha[t] > 0) {
          weight /= factorial(static_cast<unsigned long>(alpha[t]));
          mono.e.emplace_back(static_cast<std::uint32_t>(varOf(cls)),
                              static_cast<std::int32_t>(alpha[t]));
        }
      }
      LookupResult r = table_->lookup(classes, beta);
      if (!r.known) {
        out.v.tainted = true;
        return;
      }
      if (r.value.isZero()) return;
      coeff.addTerm(mono, weight * r.value);
    });
    if (!coeff.isZero()) out.terms.emplace(beta, std::move(coeff));
  }
  auto [pos, ok] = cache_.emplace(key, std::move(out));
  return pos->second;
}

UElem uAdd(const QuantumContext& ctx, const UElem& a, const UElem& b) {
  UElem r = a;
  r.v = Validity::combine(a.v, b.v);
  for (const auto& [beta, p] : b.terms) {
    auto [it, inserted] = r.terms.emplace(beta, p);
    if (!inserted) {
      it->second += p;
      if (it->second.isZero()) r.terms.erase(it);
    }
  }
  return r;
}

UElem uMul(const QuantumContext& ctx, const UElem& a, const UElem& b) {
  UElem r;
  r.v = Validity::combine(a.v, b.v);
  for (const auto& [b1, p1] : a.terms)
    for (const auto& [b2, p2] : b.terms) {
      CurveClass beta = b1 + b2;
      if (r.v.cap && ctx.spec().energy(beta) > *r.v.cap) continue;
      MultiPoly prod = p1 * p2;
      if (prod.isZero()) continue;
      auto [it, inserted] = r.terms.emplace(beta, prod);
      if (!inserted) {
        it->second += prod;
        if (it->second.isZero()) r.terms.erase(it);
      }
    }
  return r;
}

UElem uScale(const UElem& a, const Rational& c) {
  UElem r;
  r.v = a.v;
  if (c.isZero()) return r;
  for (const auto& [beta, p] : a.terms) r.terms.emplace(beta, p.scaled(c));
  return r;
}

bool uEqual(const UElem& a, const UElem& b) { return a.terms == b.terms; }

SymElem phiEtaSymbolic(const QuantumContext& ctx, const UElem& r, const DeformParam& d) {
  const ManifoldSpec& spec = ctx.spec();
  int s = spec.s();
  if (static_cast<int>(d.divisor.size()) != s ||
      static_cast<int>(d.higher.size()) != spec.N() - s)
    throw InputError("phi_eta: deformation dimensions do not match the spec");
  std::map<std::size_t, Rational> higherSubst;
  for (int t = 0; t < spec.N() - s; ++t)
    if (!d.higher[t].symbolic) higherSubst[ctx.varOf(s + 1 + t)] = d.higher[t].value;

  SymElem out;
  out.v = r.v;
  MultiPoly acc(ctx.symRing());
  for (const auto& [beta, f] : r.terms) {
    Rational scale(1);
    Monomial zmono;
    for (int i = 1; i <= s; ++i) {
      long e = spec.divisorCap(i, beta);
      if (e == 0) continue;
      if (d.divisor[i - 1].symbolic) {
        zmono.e.emplace_back(static_cast<std::uint32_t>(ctx.varOf(i)),
                             static_cast<std::int32_t>(e));
      } else {
        if (d.divisor[i - 1].value.isZero())
          throw InputError("phi_eta: divisor coordinate evaluated at z = 0");
        scale *= d.divisor[i - 1].value.pow(e);
      }
    }
    MultiPoly part = f.substitute(higherSubst).shifted(zmono).scaled(scale);
    acc += part;
  }
  out.p = std::move(acc);
  return out;
}

NovikovElem phiEtaNovikov(const QuantumContext& ctx, const UElem& r, const DeformParam& d) {
  if (!d.fullyEvaluated())
    throw InputError("phi_eta: the Novikov regime requires a fully evaluated deformation");
  const ManifoldSpec& spec = ctx.spec();
  int s = spec.s();
  std::map<std::size_t, Rational> subst;
  for (int t = 0; t < spec.N() - s; ++t) subst[ctx.varOf(s + 1 + t)] = d.higher[t].value;

  NovikovElem out;
  out.v = r.v;
  for (const auto& [beta, f] : r.terms) {
    Rational val = f.evaluate(subst);
    for (int i = 1; i <= s; ++i) {
      long e = spec.divisorCap(i, beta);
      if (e == 0) continue;
      if (d.divisor[i - 1].value.isZero())
        throw InputError("phi_eta: divisor coordinate evaluated at z = 0");
      val *= d.divisor[i - 1].value.pow(e);
    }
    out.addTerm(spec.energy(beta), val);
  }
  out.truncate();
  return out;
}

std::vector<std::string> ebMap(const QuantumContext& ctx, const DeformParam& d) {
  std::vector<std::string> out;
  int s = ctx.spec().s();
  for (int i = 0; i < s; ++i)
    out.push_back(d.divisor[i].symbolic ? ctx.symRing()->var(i).name : d.divisor[i].value.str());
  for (int t = 0; t < ctx.spec().N() - s; ++t)
    out.push_back(d.higher[t].symbolic ? ctx.symRing()->var(s + t).name
                                       : d.higher[t].value.str());
  return out;
}

UQClass basisClassU(const QuantumContext& ctx, int i) {
  UQClass q;
  q.coords.assign(ctx.spec().N() + 1, UElem{});
  CurveClass zero;
  zero.c.assign(ctx.spec().curveBasis.size(), 0);
  q.coords[i].terms.emplace(zero, MultiPoly(Rational(1)));
  return q;
}

SymQClass basisClassSym(const QuantumContext& ctx, int i) {
  SymQClass q;
  q.coords.assign(ctx.spec().N() + 1, SymElem{});
  q.coords[i].p = MultiPoly(Rational(1));
  return q;
}

NovQClass basisClassNov(const QuantumContext& ctx, int i) {
  NovQClass q;
  q.coords.assign(ctx.spec().N() + 1, NovikovElem{});
  q.coords[i] = NovikovElem(1);
  return q;
}

UQClass productUniversal(const QuantumContext& ctx, const UQClass& a, const UQClass& b) {
  int nb = ctx.spec().N() + 1;
  if (static_cast<int>(a.coords.size()) != nb || static_cast<int>(b.coords.size()) != nb)
    throw InputError("product: coordinate size mismatch");
  UQClass out;
  out.coords.assign(nb, UElem{});
  for (int i = 0; i < nb; ++i) {
    if (a.coords[i].isZero()) continue;
    for (int j = 0; j < nb; ++j) {
      if (b.coords[j].isZero()) continue;
      UElem ab = uMul(ctx, a.coords[i], b.coords[j]);
      for (int k = 0; k < nb; ++k) {
        const UElem& c = ctx.structureConstant(i, j, k);
        if (c.isZero() && !c.v.tainted) continue;
        UElem contrib = uMul(ctx, ab, c);
        for (int m = 0; m < nb; ++m) {
          const Rational& g = ctx.dual()(k, m);
          if (g.isZero()) continue;
          out.coords[m] = uAdd(ctx, out.coords[m], uScale(contrib, g));
        }
      }
    }
  }
  return out;
}

SymElem symbolicConstant(const QuantumContext& ctx, int i, int j, int k,
                         const DeformParam& d) {
  return phiEtaSymbolic(ctx, ctx.structureConstant(i, j, k), d);
}

SymQClass productSymbolic(const QuantumContext& ctx, const SymQClass& a, const SymQClass& b,
                          const DeformParam& d) {
  int nb = ctx.spec().N() + 1;
  if (static_cast<int>(a.coords.size()) != nb || static_cast<int>(b.coords.size()) != nb)
    throw InputError("product: coordinate size mismatch");
  SymQClass out;
  out.coords.assign(nb, SymElem{});
  for (auto& c : out.coords) c.p = MultiPoly(ctx.symRing());
  for (int i = 0; i < nb; ++i) {
    if (a.coords[i].isZero()) continue;
    for (int j = 0; j < nb; ++j) {
      if (b.coords[j].isZero()) continue;
      MultiPoly ab = a.coords[i].p * b.coords[j].p;
      Validity vab = Validity::combine(a.coords[i].v, b.coords[j].v);
      for (int k = 0; k < nb; ++k) {
        SymElem c = symbolicConstant(ctx, i, j, k, d);
        if (c.isZero() && !c.v.tainted) continue;
        MultiPoly contrib = ab * c.p;
        Validity vc = Validity::combine(vab, c.v);
        for (int m = 0; m < nb; ++m) {
          const Rational& g = ctx.dual()(k, m);
          if (g.isZero()) continue;
          out.coords[m].p += contrib.scaled(g);
          out.coords[m].v = Validity::combine(out.coords[m].v, vc);
        }
      }
    }
  }
  return out;
}

NovQClass productNovikov(const QuantumContext& ctx, const NovQClass& a, const NovQClass& b,
                         const DeformParam& d) {
  int nb = ctx.spec().N() + 1;
  if (static_cast<int>(a.coords.size()) != nb || static_cast<int>(b.coords.size()) != nb)
    throw InputError("product: coordinate size mismatch");
  NovQClass out;
  out.coords.assign(nb, NovikovElem{});
  for (int i = 0; i < nb; ++i) {
    if (a.coords[i].isZero()) continue;
    for (int j = 0; j < nb; ++j) {
      if (b.coords[j].isZero()) continue;
      NovikovElem ab = a.coords[i] * b.coords[j];
      for (int k = 0; k < nb; ++k) {
        NovikovElem c = phiEtaNovikov(ctx, ctx.structureConstant(i, j, k), d);
        if (c.isZero() && !c.v.tainted) continue;
        NovikovElem contrib = ab * c;
        for (int m = 0; m < nb; ++m) {
          const Rational& g = ctx.dual()(k, m);
          if (g.isZero()) continue;
          NovikovElem scaled = contrib;
          for (auto& [gexp, coef] : scaled.terms) coef *= g;
          out.coords[m] += scaled;
        }
      }
    }
  }
  return out;
}

Matrix<MultiPoly> multOperatorSymbolic(const QuantumContext& ctx, int i, const DeformParam& d) {
  int nb = ctx.spec().N() + 1;
  Matrix<MultiPoly> m(nb, nb);
  for (int j = 0; j < nb; ++j) {
    SymQClass col = productSymbolic(ctx, basisClassSym(ctx, i), basisClassSym(ctx, j), d);
    for (int r = 0; r < nb; ++r) m(r, j) = col.coords[r].p;
  }
  return m;
}

}  // namespace qh
