#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mcd/kernel.hpp"
#include "mcd/reduction.hpp"
#include "mcd/syntax.hpp"

namespace mcd {

// A numeral encoding under measurement. `pred` (and `suc` when present) are
// β-normal pure terms; mkNumeral yields the β-normal numeral directly.
struct Encoding {
  std::string name;
  std::function<PureRef(long)> mkNumeral;
  PureRef pred;
  PureRef suc; // when set, measurePred times pred (suc ⌜n⌝) instead
};

// Church and Mendler pull their operations out of checked definitions;
// Parigot is a self-contained reference encoding.
Encoding churchEncoding(const GlobalEnv& env);
Encoding mendlerEncoding(const GlobalEnv& env);
Encoding parigotEncoding();

struct MeasureResult {
  long steps = 0;
  bool exhausted = false;
  bool ok = false; // normal form matched the expected numeral
};

// With suc: normalizes pred (suc ⌜n⌝), expecting ⌜n⌝ (n ≥ 0).
// Without:  normalizes pred ⌜n⌝, expecting ⌜n-1⌝ (n ≥ 1).
MeasureResult measurePred(const Encoding& e, long n, const EvalConfig& cfg);

long measureSize(const Encoding& e, long n);

// Classification order: exactly constant, exactly linear (equal slopes by
// cross-multiplication), exponential (every successive ratio ≥ 1.8), linear
// by least squares (R² > 0.999, positive slope), else inconclusive.
struct GrowthFit {
  std::string cls; // "constant" | "linear" | "exponential" | "inconclusive"
  double slope = 0;
  double r2 = 0;
  std::string detail;
};

GrowthFit fitGrowth(const std::vector<std::pair<long, long>>& pts);

struct SeriesPoint {
  long n = 0;
  long value = 0;
  bool ok = true;
};

struct BenchSeries {
  std::string encoding;
  std::string metric; // "predSteps" | "numeralSize"
  std::vector<SeriesPoint> points;
  GrowthFit fit;
  std::string expectedClass;
  bool matches = false;
  bool exhausted = false;
};

struct BenchReport {
  std::vector<BenchSeries> series;
  EvalConfig config;
  bool allMatch = true;
  bool anyExhausted = false;
};

BenchReport runBenchSuite(const GlobalEnv& env, const EvalConfig& cfg = {});

std::string emitJsonLines(const BenchReport& r);
std::string emitTable(const BenchReport& r);

} // namespace mcd
