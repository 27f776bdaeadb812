#include "mcd/bench.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace mcd {

namespace {

PureRef requireErasure(const GlobalEnv& env, const std::string& name) {
  const GlobalDef* g = env.find(name);
  if (!g || !g->normalErasure) {
    Diag d;
    d.kind = ErrorKind::UnboundVariable;
    d.message = "benchmark needs the checked definition '" + name + "'";
    throw CheckError(d);
  }
  return g->normalErasure;
}

} // namespace

Encoding churchEncoding(const GlobalEnv& env) {
  Encoding e;
  e.name = "church";
  e.pred = requireErasure(env, "predK");
  e.mkNumeral = [](long n) {
    PureRef body = pBound(0);
    for (long i = 0; i < n; i++) body = pApp(pBound(1), body);
    return pLam("s", pLam("z", body));
  };
  return e;
}

Encoding mendlerEncoding(const GlobalEnv& env) {
  Encoding e;
  e.name = "mendler";
  e.pred = requireErasure(env, "pred");
  e.suc = requireErasure(env, "suc");
  // Closed form of the β-normal numerals: each layer hands the algebra a
  // reflexive fold and a case split carrying the predecessor.
  e.mkNumeral = [](long n) {
    auto layer = [](PureRef caseArm) {
      return pLam("alg",
                  pApp(pApp(pBound(0),
                            pLam("f", pApp(pBound(0), pBound(1)))),
                       caseArm));
    };
    PureRef t = layer(pLam("i", pLam("j", pApp(pBound(1),
                                               pLam("x", pBound(0))))));
    for (long k = 0; k < n; k++)
      t = layer(pLam("i", pLam("j", pApp(pBound(0), t))));
    return t;
  };
  return e;
}

Encoding parigotEncoding() {
  Encoding e;
  e.name = "parigot";
  // pred = λ n . n (λ p . λ r . p) P₀ : the case arm returns the stored
  // predecessor numeral outright, so the cost does not grow with n.
  PureRef p0 = pLam("s", pLam("z", pBound(0)));
  e.pred = pLam("n", pApp(pApp(pBound(0), pLam("p", pLam("r", pBound(1)))),
                          p0));
  e.mkNumeral = [p0](long n) {
    // ⌜k+1⌝ = λ s . λ z . s ⌜k⌝ bodyₖ, where bodyₖ is ⌜k⌝'s open body:
    // writing (⌜k⌝ s z) instead would store a redex, and the predecessor
    // would then pay to renormalize what it returns.
    PureRef body = pBound(0);
    PureRef t = p0;
    for (long k = 0; k < n; k++) {
      body = pApp(pApp(pBound(1), t), body);
      t = pLam("s", pLam("z", body));
    }
    return t;
  };
  return e;
}

MeasureResult measurePred(const Encoding& e, long n, const EvalConfig& cfg) {
  MeasureResult res;
  PureRef term, expect;
  if (e.suc) {
    term = pApp(e.pred, pApp(e.suc, e.mkNumeral(n)));
    expect = e.mkNumeral(n);
  } else {
    if (n < 1) return res;
    term = pApp(e.pred, e.mkNumeral(n));
    expect = e.mkNumeral(n - 1);
  }
  ReductionStats st = normalize(term, cfg);
  res.steps = st.betaSteps;
  res.exhausted = st.exhausted;
  res.ok = !st.exhausted && alphaEqPure(st.normalForm, expect);
  return res;
}

long measureSize(const Encoding& e, long n) { return sizePure(e.mkNumeral(n)); }

GrowthFit fitGrowth(const std::vector<std::pair<long, long>>& pts) {
  GrowthFit f;
  if (pts.size() < 3) {
    f.cls = "inconclusive";
    f.detail = "need at least three points";
    return f;
  }
  bool allEqual = true;
  for (auto& p : pts)
    if (p.second != pts[0].second) allEqual = false;
  if (allEqual) {
    f.cls = "constant";
    f.detail = "all values equal";
    return f;
  }

  // Exactly linear: every chord has the same slope, compared without
  // division so non-uniform grids are handled exactly.
  bool linearExact = true;
  long dv0 = pts[1].second - pts[0].second;
  long dn0 = pts[1].first - pts[0].first;
  for (size_t i = 1; i + 1 < pts.size(); i++) {
    long dv = pts[i + 1].second - pts[i].second;
    long dn = pts[i + 1].first - pts[i].first;
    if (dv * dn0 != dv0 * dn) {
      linearExact = false;
      break;
    }
  }
  if (linearExact && dn0 != 0) {
    f.cls = "linear";
    f.slope = (double)dv0 / (double)dn0;
    f.r2 = 1.0;
    f.detail = "equal slopes on every chord";
    return f;
  }

  bool expo = true;
  for (size_t i = 0; i + 1 < pts.size(); i++) {
    if (pts[i].second <= 0 || pts[i + 1].second <= 0) {
      expo = false;
      break;
    }
    double ratio = (double)pts[i + 1].second / (double)pts[i].second;
    if (ratio < 1.8) {
      expo = false;
      break;
    }
  }
  if (expo) {
    f.cls = "exponential";
    f.detail = "every successive ratio at least 1.8";
    return f;
  }

  double n = (double)pts.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (auto& p : pts) {
    double x = (double)p.first, y = (double)p.second;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  double denom = n * sxx - sx * sx;
  if (denom != 0) {
    double slope = (n * sxy - sx * sy) / denom;
    double intercept = (sy - slope * sx) / n;
    double ssRes = 0, ssTot = 0, mean = sy / n;
    for (auto& p : pts) {
      double y = (double)p.second;
      double pred = slope * (double)p.first + intercept;
      ssRes += (y - pred) * (y - pred);
      ssTot += (y - mean) * (y - mean);
    }
    double r2 = ssTot == 0 ? 1.0 : 1.0 - ssRes / ssTot;
    if (r2 > 0.999 && slope > 0) {
      f.cls = "linear";
      f.slope = slope;
      f.r2 = r2;
      f.detail = "least-squares fit";
      return f;
    }
    f.r2 = r2;
    f.slope = slope;
  }
  f.cls = "inconclusive";
  f.detail = "no growth class matched";
  return f;
}

namespace {

BenchSeries stepSeries(const Encoding& e, const std::vector<long>& grid,
                       const EvalConfig& cfg, const std::string& expected) {
  BenchSeries s;
  s.encoding = e.name;
  s.metric = "predSteps";
  s.expectedClass = expected;
  std::vector<std::pair<long, long>> pts;
  for (long n : grid) {
    MeasureResult m = measurePred(e, n, cfg);
    s.points.push_back({n, m.steps, m.ok});
    if (m.exhausted) s.exhausted = true;
    pts.push_back({n, m.steps});
  }
  s.fit = fitGrowth(pts);
  s.matches = s.fit.cls == expected && !s.exhausted;
  for (auto& p : s.points)
    if (!p.ok) s.matches = false;
  return s;
}

BenchSeries sizeSeries(const Encoding& e, const std::vector<long>& grid,
                       const std::string& expected) {
  BenchSeries s;
  s.encoding = e.name;
  s.metric = "numeralSize";
  s.expectedClass = expected;
  std::vector<std::pair<long, long>> pts;
  for (long n : grid) {
    long v = measureSize(e, n);
    s.points.push_back({n, v, true});
    pts.push_back({n, v});
  }
  s.fit = fitGrowth(pts);
  s.matches = s.fit.cls == expected;
  return s;
}

std::vector<long> arithGrid(long lo, long hi, long step) {
  std::vector<long> g;
  for (long n = lo; n <= hi; n += step) g.push_back(n);
  return g;
}

} // namespace

BenchReport runBenchSuite(const GlobalEnv& env, const EvalConfig& cfg) {
  BenchReport r;
  r.config = cfg;

  Encoding church = churchEncoding(env);
  Encoding mendler = mendlerEncoding(env);
  Encoding parigot = parigotEncoding();

  // Step series use arithmetic grids: a doubling grid would make linear data
  // look exponential to the ratio test.
  r.series.push_back(
      stepSeries(church, arithGrid(16, 256, 16), cfg, "linear"));
  r.series.push_back(sizeSeries(church, arithGrid(16, 256, 16), "linear"));

  std::vector<long> doubling{0, 1, 2, 4, 8, 16, 32, 64, 128, 256};
  r.series.push_back(stepSeries(mendler, doubling, cfg, "constant"));
  r.series.push_back(sizeSeries(mendler, arithGrid(2, 64, 2), "linear"));

  r.series.push_back(stepSeries(parigot, arithGrid(1, 12, 1), cfg, "constant"));
  r.series.push_back(sizeSeries(parigot, arithGrid(1, 12, 1), "exponential"));

  for (auto& s : r.series) {
    if (!s.matches) r.allMatch = false;
    if (s.exhausted) r.anyExhausted = true;
  }
  return r;
}

std::string emitJsonLines(const BenchReport& r) {
  std::ostringstream out;
  for (auto& s : r.series) {
    nlohmann::ordered_json j;
    j["encoding"] = s.encoding;
    j["series"] = s.metric;
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (auto& p : s.points)
      pts.push_back({{"n", p.n}, {"value", p.value}, {"ok", p.ok}});
    j["points"] = pts;
    j["growthFit"] = {{"class", s.fit.cls},
                      {"slope", s.fit.slope},
                      {"r2", s.fit.r2},
                      {"detail", s.fit.detail}};
    j["expected"] = s.expectedClass;
    j["match"] = s.matches;
    out << j.dump() << "\n";
  }
  nlohmann::ordered_json tail;
  tail["config"] = {{"fuel", r.config.fuel}, {"eta", r.config.eta}};
  tail["allMatch"] = r.allMatch;
  tail["anyExhausted"] = r.anyExhausted;
  out << tail.dump() << "\n";
  return out.str();
}

std::string emitTable(const BenchReport& r) {
  std::ostringstream out;
  auto pad = [](std::string s, size_t w) {
    while (s.size() < w) s += ' ';
    return s;
  };
  out << pad("encoding", 10) << pad("series", 14) << pad("expected", 14)
      << pad("fitted", 14) << pad("slope", 12) << "match\n";
  for (auto& s : r.series) {
    std::ostringstream slope;
    if (s.fit.cls == "linear")
      slope << s.fit.slope;
    else
      slope << "-";
    out << pad(s.encoding, 10) << pad(s.metric, 14)
        << pad(s.expectedClass, 14) << pad(s.fit.cls, 14)
        << pad(slope.str(), 12) << (s.matches ? "yes" : "NO") << "\n";
  }
  for (auto& s : r.series) {
    out << "\n" << s.encoding << " " << s.metric << ":";
    for (auto& p : s.points) {
      out << " " << p.n << ":" << p.value;
      if (!p.ok) out << "!";
    }
    out << "\n";
  }
  if (r.anyExhausted) out << "\nwarning: some runs exhausted fuel\n";
  return out.str();
}

} // namespace mcd
