#pragma once

#include <string>

#include "mcd/syntax.hpp"

namespace mcd {

// Unicode surface syntax; output reparses to an alpha-equal AST.
std::string printPure(const PureRef& t);
std::string printTerm(const TermRef& t);
std::string printType(const TypeRef& t);
std::string printKind(const KindRef& t);
std::string printClassifier(const Classifier& c);

} // namespace mcd
