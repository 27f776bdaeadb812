#pragma once

#include <string>
#include <vector>

#include "mcd/kernel.hpp"

namespace mcd {

struct DefReport {
  std::string name;
  bool isType = false;
  bool isPostulate = false;
};

struct FileReport {
  std::string file;       // path as listed in the manifest
  std::string moduleName;
  bool etaPragma = false;
  std::vector<DefReport> defs;
  bool ok = false;
};

struct CorpusReport {
  GlobalEnv env;
  std::vector<FileReport> files;
  std::vector<Diag> warnings;
  int totalDefs = 0;
  bool ok = true;
  Diag failure; // first failure when !ok
};

// manifest.txt: one file name per line, '#' starts a comment. Order is the
// check order; imports may only name modules checked earlier.
std::vector<std::string> readManifest(const std::string& dir);

// Checks every definition of every manifest file, stopping at the first
// failure. The eta pragma applies per file.
CorpusReport checkCorpus(const std::string& dir, const CheckOptions& base = {});

} // namespace mcd
