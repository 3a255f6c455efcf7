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

#include "qh/algebrakit.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qh {

using nlohmann::ordered_json;

std::string verdictName(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "inconclusive";
  }
}

long Rng::uniform(long lo, long hi) {
  return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

long Rng::nonzero(long bound) {
  long v = 0;
  while (v == 0) v = uniform(-bound, bound);
  return v;
}

std::vector<Rational> QAlgebra::multiply(const std::vector<Rational>& a,
                                         const std::vector<Rational>& b) const {
  int d = dim();
  std::vector<Rational> out(d);
  for (int i = 0; i < d; ++i) {
    if (a[i].isZero()) continue;
    for (int j = 0; j < d; ++j) {
      if (b[j].isZero()) continue;
      Rational f = a[i] * b[j];
      for (int k = 0; k < d; ++k) {
        if (!mult[i][j][k].isZero()) out[k] += f * mult[i][j][k];
      }
    }
  }
  return out;
}

Matrix<Rational> QAlgebra::multOperator(const std::vector<Rational>& a) const {
  int d = dim();
  Matrix<Rational> m(d, d);
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> ej(d);
    ej[j] = Rational(1);
    std::vector<Rational> col = multiply(a, ej);
    for (int r = 0; r < d; ++r) m(r, j) = col[r];
  }
  return m;
}

bool QAlgebra::isUnit(const std::vector<Rational>& a) const {
  int d = dim();
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> ej(d);
    ej[j] = Rational(1);
    if (multiply(a, ej) != ej) return false;
  }
  return true;
}

void QAlgebra::checkUnit() const {
  std::vector<Rational> u(dim());
  u[unitIndex] = Rational(1);
  if (!isUnit(u)) throw std::logic_error("QAlgebra: designated unit is not a unit");
}

QAlgebra fiberAlgebra(const QuantumContext& ctx, const DeformParam& point) {
  if (!point.fullyEvaluated())
    throw InputError("fiberAlgebra: all deformation coordinates must be evaluated");
  const ManifoldSpec& spec = ctx.spec();
  int nb = spec.N() + 1;
  // substitution map for the symbolic ring
  std::map<std::size_t, Rational> subst;
  for (int i = 0; i < spec.s(); ++i) {
    if (point.divisor[i].value.isZero()) throw InputError("fiberAlgebra: z coordinate is zero");
    subst[i] = point.divisor[i].value;
  }
  for (int t = 0; t < spec.N() - spec.s(); ++t) subst[spec.s() + t] = point.higher[t].value;

  DeformParam symb = DeformParam::fullySymbolic(spec);
  QAlgebra a;
  a.unitIndex = 0;
  for (int i = 0; i < nb; ++i) a.names.push_back(spec.basis[i].name);
  a.mult.assign(nb, std::vector<std::vector<Rational>>(nb, std::vector<Rational>(nb)));
  for (int i = 0; i < nb; ++i)
    for (int j = i; j < nb; ++j) {
      std::vector<Rational> coords(nb);
      for (int k = 0; k < nb; ++k) {
        SymElem c = symbolicConstant(ctx, i, j, k, symb);
        if (c.isZero()) continue;
        Rational v = c.p.evaluate(subst);
        if (v.isZero()) continue;
        for (int m = 0; m < nb; ++m) {
          const Rational& g = ctx.dual()(k, m);
          if (!g.isZero()) coords[m] += v * g;
        }
      }
      a.mult[i][j] = coords;
      a.mult[j][i] = std::move(coords);
    }
  a.checkUnit();
  return a;
}

Matrix<MultiPoly> traceGramSymbolic(const QuantumContext& ctx, const DeformParam& d) {
  int nb = ctx.spec().N() + 1;
  // basis traces t_m = tr L_{Delta_m}
  std::vector<MultiPoly> basisTrace(nb, MultiPoly(ctx.symRing()));
  for (int m = 0; m < nb; ++m) {
    for (int l = 0; l < nb; ++l) {
      // coordinate on Delta_l of Delta_m * Delta_l
      for (int k = 0; k < nb; ++k) {
        const Rational& g = ctx.dual()(k, l);
        if (g.isZero()) continue;
        SymElem c = symbolicConstant(ctx, m, l, k, d);
        if (!c.isZero()) basisTrace[m] += c.p.scaled(g);
      }
    }
  }
  Matrix<MultiPoly> gram(nb, nb);
  for (int i = 0; i < nb; ++i)
    for (int j = i; j < nb; ++j) {
      MultiPoly g(ctx.symRing());
      // Delta_i * Delta_j = sum_m (sum_k c_ijk dual(k,m)) Delta_m
      for (int m = 0; m < nb; ++m) {
        MultiPoly coord(ctx.symRing());
        for (int k = 0; k < nb; ++k) {
          const Rational& gk = ctx.dual()(k, m);
          if (gk.isZero()) continue;
          SymElem c = symbolicConstant(ctx, i, j, k, d);
          if (!c.isZero()) coord += c.p.scaled(gk);
        }
        if (!coord.isZero()) g += coord * basisTrace[m];
      }
      gram(i, j) = g;
      gram(j, i) = std::move(g);
    }
  return gram;
}

Matrix<Rational> traceGram(const QAlgebra& a) {
  int d = a.dim();
  std::vector<Rational> basisTrace(d);
  for (int m = 0; m < d; ++m) {
    std::vector<Rational> em(d);
    em[m] = Rational(1);
    Matrix<Rational> op = a.multOperator(em);
    for (int i = 0; i < d; ++i) basisTrace[m] += op(i, i);
  }
  Matrix<Rational> gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::vector<Rational> ei(d), ej(d);
      ei[i] = Rational(1);
      ej[j] = Rational(1);
      std::vector<Rational> prod = a.multiply(ei, ej);
      Rational t(0);
      for (int m = 0; m < d; ++m) t += prod[m] * basisTrace[m];
      gram(i, j) = t;
    }
  return gram;
}

Matrix<NovikovElem> traceGramNovikov(const QuantumContext& ctx, const DeformParam& d) {
  if (!d.fullyEvaluated())
    throw InputError("traceGramNovikov: deformation must be fully evaluated");
  int nb = ctx.spec().N() + 1;
  std::vector<NovikovElem> basisTrace(nb);
  auto novConstant = [&](int i, int j, int k) {
    return phiEtaNovikov(ctx, ctx.structureConstant(i, j, k), d);
  };
  for (int m = 0; m < nb; ++m)
    for (int l = 0; l < nb; ++l)
      for (int k = 0; k < nb; ++k) {
        const Rational& g = ctx.dual()(k, l);
        if (g.isZero()) continue;
        NovikovElem c = novConstant(m, l, k);
        for (auto& [gexp, coef] : c.terms) coef *= g;
        basisTrace[m] += c;
      }
  Matrix<NovikovElem> gram(nb, nb);
  for (int i = 0; i < nb; ++i)
    for (int j = i; j < nb; ++j) {
      NovikovElem acc;
      for (int m = 0; m < nb; ++m) {
        NovikovElem coord;
        for (int k = 0; k < nb; ++k) {
          const Rational& gk = ctx.dual()(k, m);
          if (gk.isZero()) continue;
          NovikovElem c = novConstant(i, j, k);
          for (auto& [gexp, coef] : c.terms) coef *= gk;
          coord += c;
        }
        acc += coord * basisTrace[m];
      }
      gram(i, j) = acc;
      gram(j, i) = std::move(acc);
    }
  return gram;
}

Discriminant discriminant(const QuantumContext& ctx, const DeformParam& d) {
  if (!d.fullySymbolicDivisors())
    throw InputError("discriminant: divisor coordinates must stay symbolic");
  Discriminant out;
  out.gram = traceGramSymbolic(ctx, d);
  // validity: collect from the structure constants involved
  Validity v;
  int nb = ctx.spec().N() + 1;
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < nb; ++k)
        v = Validity::combine(v, ctx.structureConstant(i, j, k).v);
  out.validity = v;
  out.det = berkowitzDet(out.gram);
  if (!out.det.isZero()) {
    out.lambda0 = ctx.minimalEnergy(out.det);
    out.certificate = ctx.energyLayer(out.det, out.lambda0);
  }
  return out;
}

namespace {

/// Search the integer box for points where the certificate evaluates
/// nonzero; z coordinates avoid 0.
std::vector<PointVerdict> certificateWitnesses(const QuantumContext& ctx, const MultiPoly& f,
                                               int want) {
  std::vector<PointVerdict> out;
  long deg = std::max<long>(1, f.clearedTotalDegree());
  long box = deg + 1;
  int s = ctx.spec().s();
  int nv = static_cast<int>(ctx.symRing()->size());
  // which variables occur in f
  std::vector<std::size_t> vars;
  for (int i = 0; i < nv; ++i) vars.push_back(i);
  std::vector<long> point(nv, 1);
  for (int i = s; i < nv; ++i) point[i] = 0;

  std::function<bool(std::size_t)> walk = [&](std::size_t idx) -> bool {
    if (static_cast<int>(out.size()) >= want) return true;
    if (idx == vars.size()) {
      std::map<std::size_t, Rational> sub;
      for (int i = 0; i < nv; ++i) sub[i] = Rational(point[i]);
      Rational val = f.evaluate(sub);
      if (!val.isZero()) {
        PointVerdict w;
        w.point = sub;
        w.verdict = Verdict::Yes;
        w.note = "certificate value " + val.str();
        out.push_back(std::move(w));
      }
      return static_cast<int>(out.size()) >= want;
    }
    std::size_t v = vars[idx];
    bool laurent = ctx.symRing()->var(v).laurent;
    for (long t = laurent ? 1 : 0; t <= box; ++t) {
      for (int sign = 0; sign < ((t == 0) ? 1 : 2); ++sign) {
        point[v] = sign ? -t : t;
        if (walk(idx + 1)) return true;
      }
    }
    point[v] = laurent ? 1 : 0;
    return false;
  };
  walk(0);
  return out;
}

}  // namespace

AnalysisReport genericSemisimple(const QuantumContext& ctx, const DeformParam& d) {
  AnalysisReport rep;
  Discriminant disc = discriminant(ctx, d);
  rep.validity = disc.validity;
  rep.discriminant = disc;
  if (disc.det.isZero()) {
    if (disc.validity.exact()) {
      rep.semisimple = Verdict::No;
      rep.confidence = "exact";
      rep.notes.push_back("trace-form discriminant vanishes identically");
    } else {
      rep.semisimple = Verdict::Inconclusive;
      rep.confidence = "truncated";
      rep.notes.push_back(
          "discriminant vanishes to the computed order; truncation or unknown entries "
          "prevent an exact verdict");
    }
    return rep;
  }
  rep.semisimple = disc.validity.tainted ? Verdict::Inconclusive : Verdict::Yes;
  rep.confidence = "exact";
  rep.degreeBound = disc.certificate.clearedTotalDegree();
  if (disc.validity.tainted)
    rep.notes.push_back("certificate nonzero but tainted by unknown invariants");
  else
    rep.witnesses = certificateWitnesses(ctx, disc.certificate, 3);
  if (disc.validity.cap)
    rep.notes.push_back("structure constants valid to order " + disc.validity.cap->str() +
                        "; the certificate's leading layer sits at order " +
                        disc.lambda0.str());
  return rep;
}

std::vector<Rational> extractIdempotent(const QAlgebra& a, const std::vector<Rational>& elem,
                                        const Rational& lambda) {
  UniPoly chi = charpoly(a.multOperator(elem));
  UniPoly lin({-lambda, Rational(1)});
  UniPoly h, rem;
  UniPoly::divmod(chi, lin, h, rem);
  if (!rem.isZero()) throw InputError("extractIdempotent: lambda is not a root");
  if (h.evaluate(lambda).isZero())
    throw InputError("extractIdempotent: root is not simple");
  // g = v h with v h = 1 mod (t - lambda): v = 1 / h(lambda)
  UniPoly g = h.scaled(h.evaluate(lambda).inverse());
  // evaluate g at the element (Horner)
  int d = a.dim();
  std::vector<Rational> unit(d);
  unit[a.unitIndex] = Rational(1);
  std::vector<Rational> e(d);
  for (int i = g.degree(); i >= 0; --i) {
    e = a.multiply(e, elem);
    for (int t = 0; t < d; ++t) e[t] += g.coeff(i) * unit[t];
  }
  if (a.multiply(e, e) != e) throw std::logic_error("extractIdempotent: e*e != e");
  bool zero = std::all_of(e.begin(), e.end(), [](const Rational& r) { return r.isZero(); });
  if (zero) throw std::logic_error("extractIdempotent: e = 0");
  // dim(eA) must be 1
  Matrix<Rational> im(d, d);
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> ej(d);
    ej[j] = Rational(1);
    auto col = a.multiply(e, ej);
    for (int r = 0; r < d; ++r) im(r, j) = col[r];
  }
  if (rank(im) != 1) throw std::logic_error("extractIdempotent: summand not one-dimensional");
  return e;
}

FieldSplitPointResult fieldSplitAtAlgebra(const QAlgebra& a, Rng& rng,
                                          const FieldSplitOptions& opt) {
  FieldSplitPointResult out;
  int d = a.dim();
  long bound = opt.elementBound > 0 ? opt.elementBound : 10L * d;
  int iterations = 0;
  while (out.trialsUsed < opt.trials && iterations < 2 * opt.trials) {
    ++iterations;
    std::vector<Rational> elem(d);
    for (int i = 0; i < d; ++i) elem[i] = Rational(rng.uniform(-bound, bound));
    UniPoly chi = charpoly(a.multOperator(elem));
    // fully degenerate sample chi = t^d: resample without spending a trial
    bool degenerate = true;
    for (int i = 0; i < chi.degree(); ++i)
      if (!chi.coeff(i).isZero()) degenerate = false;
    if (degenerate) continue;
    ++out.trialsUsed;
    auto split = gcdSquarefree(chi);
    if (gcd(split.squarefree, split.repeated).degree() < split.squarefree.degree()) {
      out.verdict = Verdict::Yes;
      out.note = "simple root of the characteristic polynomial at trial " +
                 std::to_string(out.trialsUsed);
      // explicit idempotent from a rational simple root, when one exists
      auto roots = rationalRoots(chi);
      for (const auto& [lam, mult] : roots.roots) {
        if (mult != 1) continue;
        try {
          out.idempotent = extractIdempotent(a, elem, lam);
          break;
        } catch (const std::exception&) {
          continue;
        }
      }
      return out;
    }
  }
  out.verdict = Verdict::No;
  out.note = "no simple root in " + std::to_string(out.trialsUsed) + " trials";
  return out;
}

AnalysisReport fieldSplitTest(const QuantumContext& ctx,
                              const std::optional<DeformParam>& point,
                              const FieldSplitOptions& opt) {
  AnalysisReport rep;
  Rng rng(opt.seed);
  rep.trials = opt.trials;
  rep.confidence = "schwartz-zippel";
  int s = ctx.spec().s();
  int higher = ctx.spec().N() - s;

  auto runPoint = [&](const DeformParam& p, const std::string& label) {
    QAlgebra alg = fiberAlgebra(ctx, p);
    FieldSplitPointResult res = fieldSplitAtAlgebra(alg, rng, opt);
    PointVerdict w;
    for (int i = 0; i < s; ++i) w.point[i] = p.divisor[i].value;
    for (int t = 0; t < higher; ++t) w.point[s + t] = p.higher[t].value;
    w.verdict = res.verdict;
    w.note = label + ": " + res.note;
    rep.witnesses.push_back(w);
    if (res.verdict == Verdict::Yes) {
      rep.fieldSplit = Verdict::Yes;
      // a nonzero point certificate is exact; the sampling parameters
      // quantify only the search, so the Yes itself is not probabilistic
      rep.confidence = "exact";
      if (res.idempotent && !rep.idempotent) rep.idempotent = res.idempotent;
    }
    // collect taint from the constants
    Validity v;
    int nb = ctx.spec().N() + 1;
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j)
        for (int k = 0; k < nb; ++k) v = Validity::combine(v, ctx.structureConstant(i, j, k).v);
    rep.validity = Validity::combine(rep.validity, v);
  };

  if (point) {
    if (!point->fullyEvaluated())
      throw InputError("fieldsplit: the supplied point must be fully evaluated");
    runPoint(*point, "supplied point");
  } else {
    for (int k = 0; k < opt.samplePoints && rep.fieldSplit != Verdict::Yes; ++k) {
      DeformParam p;
      p.divisor.resize(s);
      p.higher.resize(higher);
      for (int i = 0; i < s; ++i)
        p.divisor[i] = DeformCoord{false, Rational(rng.nonzero(opt.pointRange))};
      for (int t = 0; t < higher; ++t)
        p.higher[t] = DeformCoord{false, Rational(rng.uniform(-opt.pointRange, opt.pointRange))};
      runPoint(p, "sampled point " + std::to_string(k + 1));
    }
  }
  if (rep.fieldSplit != Verdict::Yes) {
    // per-point No never certifies a generic No
    bool anyPoint = !rep.witnesses.empty();
    rep.fieldSplit = Verdict::Inconclusive;
    if (anyPoint)
      rep.notes.push_back(
          "no sampled point produced a simple root; this is per-point evidence only, "
          "not a generic verdict");
  } else if (rep.validity.tainted) {
    rep.notes.push_back("verdict relies on truncated structure constants");
  }
  return rep;
}

AnalysisReport deformedVerdictAt(const QuantumContext& ctx, const Discriminant& cert,
                                 const DeformParam& eta, const FieldSplitOptions& opt) {
  AnalysisReport rep;
  rep.validity = cert.validity;
  rep.discriminant = cert;
  rep.degreeBound = cert.certificate.clearedTotalDegree();
  if (!eta.fullyEvaluated()) {
    // nothing evaluated: report the generic claim with its parameters
    rep.semisimple = cert.det.isZero() ? Verdict::Inconclusive
                     : (cert.validity.tainted ? Verdict::Inconclusive : Verdict::Yes);
    rep.confidence = "schwartz-zippel";
    rep.trials = opt.trials;
    rep.notes.push_back("symbolic deformation: generic verdict only");
    return rep;
  }
  int s = ctx.spec().s();
  std::map<std::size_t, Rational> sub;
  PointVerdict w;
  for (int i = 0; i < s; ++i) {
    if (eta.divisor[i].value.isZero()) throw InputError("deformed verdict: z = 0");
    sub[i] = eta.divisor[i].value;
    w.point[i] = sub[i];
  }
  for (int t = 0; t < ctx.spec().N() - s; ++t) {
    sub[s + t] = eta.higher[t].value;
    w.point[s + t] = sub[s + t];
  }
  Rational fval = cert.certificate.isZero() ? Rational(0) : cert.certificate.evaluate(sub);
  if (!fval.isZero()) {
    rep.semisimple = Verdict::Yes;
    rep.confidence = "exact";
    w.verdict = Verdict::Yes;
    w.note = "certificate f evaluates to " + fval.str() + " at E_B(eta)";
    rep.witnesses.push_back(std::move(w));
    return rep;
  }
  rep.notes.push_back("certificate vanishes at E_B(eta); falling back to pointwise tests");
  // pointwise Novikov trace test: the honest fiber at eta keeps T formal
  Matrix<NovikovElem> gram = traceGramNovikov(ctx, eta);
  NovikovElem det = berkowitzDet(gram);
  auto decided = det.decidedNonzero();
  if (decided.has_value()) {
    rep.semisimple = *decided ? Verdict::Yes : Verdict::No;
    rep.confidence = "exact";
    w.verdict = rep.semisimple == Verdict::Yes ? Verdict::Yes : Verdict::No;
    w.note = *decided
                 ? "Novikov trace determinant has a nonzero leading term at order " +
                       det.leadingExponent()->str()
                 : "Novikov trace determinant vanishes exactly at this point";
  } else {
    rep.semisimple = Verdict::Inconclusive;
    rep.confidence = "truncated";
    w.verdict = Verdict::Inconclusive;
    w.note = "Novikov trace determinant undecided at the computed order";
  }
  rep.witnesses.push_back(w);
  // additional per-point field-split evidence on the collapsed Q-fiber
  AnalysisReport fs = fieldSplitTest(ctx, eta, opt);
  rep.fieldSplit = fs.fieldSplit;
  if (fs.idempotent) rep.idempotent = fs.idempotent;
  for (auto& pw : fs.witnesses) {
    pw.note = "Q-fiber " + pw.note;
    rep.witnesses.push_back(pw);
  }
  return rep;
}

ordered_json reportPoly(const MultiPoly& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    ordered_json mono = ordered_json::array();
    for (const auto& [v, e] : m.e)
      mono.push_back({{"var", p.ring() ? p.ring()->var(v).name : std::to_string(v)},
                      {"exp", e}});
    terms.push_back({{"coeff", c.str()}, {"monomial", mono}});
  }
  return {{"text", p.str()}, {"terms", terms}};
}

nlohmann::ordered_json AnalysisReport::toJson() const {
  ordered_json j;
  if (semisimple) j["semisimple"] = verdictName(*semisimple);
  if (fieldSplit) j["fieldSplit"] = verdictName(*fieldSplit);
  if (discriminant) {
    j["certificate"] = reportPoly(discriminant->certificate);
    j["certificateOrder"] = discriminant->lambda0.str();
    j["determinant"] = discriminant->det.str();
  }
  if (idempotent) {
    ordered_json e = ordered_json::array();
    for (const auto& c : *idempotent) e.push_back(c.str());
    j["idempotent"] = e;
  }
  if (!witnesses.empty()) {
    ordered_json ws = ordered_json::array();
    for (const auto& w : witnesses) {
      ordered_json pt = ordered_json::object();
      for (const auto& [v, val] : w.point) pt["v" + std::to_string(v)] = val.str();
      ws.push_back({{"point", pt}, {"verdict", verdictName(w.verdict)}, {"note", w.note}});
    }
    j["witnesses"] = ws;
  }
  j["confidence"] = confidence;
  if (degreeBound > 0) j["degreeBound"] = degreeBound;
  if (trials > 0) j["trials"] = trials;
  j["tainted"] = validity.tainted;
  if (validity.cap) j["validToOrder"] = validity.cap->str();
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

}  // namespace qh
