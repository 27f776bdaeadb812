#include "mcd/corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace mcd {

namespace {

std::string readFileOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    Diag d;
    d.kind = ErrorKind::ParseError;
    d.file = path;
    d.message = "cannot open file";
    throw ParseError(d);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

std::vector<std::string> readManifest(const std::string& dir) {
  std::string text = readFileOrThrow(dir + "/manifest.txt");
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' ||
                             line.back() == '\t'))
      line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    out.push_back(line.substr(start));
  }
  return out;
}

CorpusReport checkCorpus(const std::string& dir, const CheckOptions& base) {
  CorpusReport rep;
  std::set<std::string> loaded;
  std::vector<std::string> manifest;
  try {
    manifest = readManifest(dir);
  } catch (ParseError& e) {
    rep.ok = false;
    rep.failure = e.diag;
    return rep;
  }
  for (auto& fname : manifest) {
    FileReport fr;
    fr.file = fname;
    try {
      SourceFile sf = parseFile(readFileOrThrow(dir + "/" + fname), fname);
      fr.moduleName = sf.moduleName;
      fr.etaPragma = sf.etaPragma;
      for (auto& imp : sf.imports)
        if (!loaded.count(imp)) {
          Diag d;
          d.kind = ErrorKind::ParseError;
          d.file = fname;
          d.message = "import of module '" + imp +
                      "' which the manifest has not checked yet";
          throw ParseError(d);
        }
      CheckOptions opts = base;
      opts.eval.eta = sf.etaPragma;
      for (auto& def : sf.defs) {
        checkDefinition(rep.env, def, fname, opts, &rep.warnings);
        fr.defs.push_back({def.name, def.isType, def.isPostulate});
        rep.totalDefs++;
      }
      loaded.insert(sf.moduleName);
      fr.ok = true;
      rep.files.push_back(std::move(fr));
    } catch (ParseError& e) {
      rep.ok = false;
      rep.failure = e.diag;
      rep.files.push_back(std::move(fr));
      return rep;
    } catch (CheckError& e) {
      rep.ok = false;
      rep.failure = e.diag;
      rep.files.push_back(std::move(fr));
      return rep;
    }
  }
  return rep;
}

} // namespace mcd
