#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcd/bench.hpp"
#include "mcd/corpus.hpp"
#include "mcd/kernel.hpp"
#include "mcd/printer.hpp"

using namespace mcd;

namespace {

constexpr int exitOk = 0;
constexpr int exitTypeError = 1;
constexpr int exitParseError = 2;
constexpr int exitFuel = 3;
constexpr int exitGrowth = 4;

int exitForDiag(const Diag& d) {
  switch (d.kind) {
    case ErrorKind::ParseError: return exitParseError;
    case ErrorKind::FuelExhausted: return exitFuel;
    default: return exitTypeError;
  }
}

std::string readFileOr(const std::string& path, int& rc) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << path << ": cannot open file\n";
    rc = exitParseError;
    return "";
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Loads the corpus or reports why it could not be loaded.
bool loadCorpus(const std::string& dir, const CheckOptions& opts,
                CorpusReport& rep, int& rc) {
  rep = checkCorpus(dir, opts);
  if (!rep.ok) {
    std::cerr << rep.failure.render() << "\n";
    rc = exitForDiag(rep.failure);
    return false;
  }
  return true;
}

void printWarnings(const std::vector<Diag>& ws) {
  for (auto& w : ws) std::cerr << "warning: " << w.render() << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernel for a Curry-style dependent calculus with "
               "intersections and an equality type"};
  app.require_subcommand(1);

  std::string corpusDir = "corpus";
  long fuel = 10'000'000;
  bool eta = false;
  std::string format = "table";

  auto addCommon = [&](CLI::App* c, bool withFormat) {
    c->add_option("--corpus-dir", corpusDir, "directory with manifest.txt")
        ->envname("MCD_CORPUS_DIR");
    c->add_option("--fuel", fuel, "reduction step budget")
        ->envname("MCD_FUEL");
    c->add_flag("--eta", eta, "enable η-contraction after β-normalization")
        ->envname("MCD_ETA");
    if (withFormat)
      c->add_option("--format", format, "table or json")
          ->check(CLI::IsMember({"table", "json"}))
          ->envname("MCD_FORMAT");
  };

  auto* cmdCheck = app.add_subcommand("check", "typecheck files or an expression");
  std::vector<std::string> files;
  std::string expr;
  cmdCheck->add_option("files", files, "source files, checked in order");
  cmdCheck->add_option("--expr", expr,
                       "synthesize a type for a closed expression "
                       "(corpus names are in scope)");
  addCommon(cmdCheck, false);

  auto* cmdErase = app.add_subcommand("erase", "print an erasure");
  std::string defName;
  cmdErase->add_option("--def", defName, "corpus definition name");
  cmdErase->add_option("--expr", expr, "expression to erase");
  addCommon(cmdErase, false);

  auto* cmdNorm = app.add_subcommand("normalize", "normalize an erasure");
  cmdNorm->add_option("--def", defName, "corpus definition name");
  cmdNorm->add_option("--expr", expr, "expression to normalize");
  addCommon(cmdNorm, true);

  auto* cmdCorpus = app.add_subcommand("corpus", "check the whole corpus");
  addCommon(cmdCorpus, true);

  auto* cmdBench = app.add_subcommand("bench", "measure the numeral encodings");
  addCommon(cmdBench, true);

  CLI11_PARSE(app, argc, argv);

  CheckOptions opts;
  opts.eval.fuel = fuel;
  opts.eval.eta = eta;
  int rc = exitOk;

  try {
    if (app.got_subcommand(cmdCorpus)) {
      CorpusReport rep = checkCorpus(corpusDir, opts);
      printWarnings(rep.warnings);
      if (format == "json") {
        nlohmann::ordered_json j;
        j["ok"] = rep.ok;
        j["totalDefs"] = rep.totalDefs;
        nlohmann::ordered_json fs = nlohmann::ordered_json::array();
        for (auto& f : rep.files)
          fs.push_back({{"file", f.file},
                        {"module", f.moduleName},
                        {"defs", f.defs.size()},
                        {"eta", f.etaPragma},
                        {"ok", f.ok}});
        j["files"] = fs;
        if (!rep.ok) j["failure"] = rep.failure.render();
        std::cout << j.dump(2) << "\n";
      } else {
        for (auto& f : rep.files)
          std::cout << (f.ok ? "ok   " : "FAIL ") << f.file << "  ("
                    << f.defs.size() << " definitions)\n";
        std::cout << (rep.ok ? "ok" : "FAIL") << "  " << rep.totalDefs
                  << " definitions total\n";
      }
      if (!rep.ok) {
        std::cerr << rep.failure.render() << "\n";
        return exitForDiag(rep.failure);
      }
      return exitOk;
    }

    if (app.got_subcommand(cmdCheck)) {
      if (!expr.empty()) {
        CorpusReport rep;
        if (!loadCorpus(corpusDir, opts, rep, rc)) return rc;
        Checker ck(rep.env, opts, "<expr>");
        TermRef t = parseTermExpr(expr);
        std::cout << printType(ck.inferTerm(t)) << "\n";
        return exitOk;
      }
      if (files.empty()) {
        std::cerr << "check: give source files or --expr\n";
        return exitParseError;
      }
      GlobalEnv env;
      for (auto& path : files) {
        std::string text = readFileOr(path, rc);
        if (rc != exitOk) return rc;
        SourceFile sf = parseFile(text, path);
        CheckOptions fileOpts = opts;
        fileOpts.eval.eta = sf.etaPragma || opts.eval.eta;
        std::vector<Diag> warnings;
        for (auto& def : sf.defs)
          checkDefinition(env, def, path, fileOpts, &warnings);
        printWarnings(warnings);
        std::cout << "ok   " << path << "  (" << sf.defs.size()
                  << " definitions)\n";
      }
      return exitOk;
    }

    if (app.got_subcommand(cmdErase) || app.got_subcommand(cmdNorm)) {
      bool doNorm = app.got_subcommand(cmdNorm);
      if (expr.empty() == defName.empty()) {
        std::cerr << (doNorm ? "normalize" : "erase")
                  << ": give exactly one of --def or --expr\n";
        return exitParseError;
      }
      CorpusReport rep;
      if (!loadCorpus(corpusDir, opts, rep, rc)) return rc;
      PureRef p;
      if (!defName.empty()) {
        const GlobalDef* g = rep.env.find(defName);
        if (!g || g->isType || !g->termBody) {
          std::cerr << "no term definition named '" << defName << "'\n";
          return exitParseError;
        }
        p = erase(g->termBody);
      } else {
        p = erase(parseTermExpr(expr));
      }
      if (!doNorm) {
        std::cout << printPure(p) << "\n";
        return exitOk;
      }
      Checker ck(rep.env, opts);
      ReductionStats st = normalize(ck.deltaExpand(p), opts.eval);
      if (format == "json") {
        nlohmann::ordered_json j;
        j["normalForm"] = printPure(st.normalForm);
        j["betaSteps"] = st.betaSteps;
        j["etaSteps"] = st.etaSteps;
        j["fuelUsed"] = st.fuelUsed;
        j["exhausted"] = st.exhausted;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << printPure(st.normalForm) << "\n";
        std::cout << "beta steps: " << st.betaSteps
                  << "  eta steps: " << st.etaSteps
                  << (st.exhausted ? "  (fuel exhausted)" : "") << "\n";
      }
      return st.exhausted ? exitFuel : exitOk;
    }

    if (app.got_subcommand(cmdBench)) {
      CorpusReport rep;
      if (!loadCorpus(corpusDir, opts, rep, rc)) return rc;
      BenchReport br = runBenchSuite(rep.env, opts.eval);
      std::cout << (format == "json" ? emitJsonLines(br) : emitTable(br));
      if (br.anyExhausted) return exitFuel;
      if (!br.allMatch) return exitGrowth;
      return exitOk;
    }
  } catch (ParseError& e) {
    std::cerr << e.diag.render() << "\n";
    return exitParseError;
  } catch (CheckError& e) {
    std::cerr << e.diag.render() << "\n";
    return exitForDiag(e.diag);
  }
  return exitOk;
}
