#pragma once

#include <string>

#include "wise/ast.hpp"

namespace wise {

// Concrete-syntax printers. Output reparses to a structurally equal AST
// (for statements, provided sequences are right-nested).
std::string pretty(const Aexpr& e);
std::string pretty(const Bexpr& b);
std::string pretty(const Stmt& s);
std::string pretty(const AexprPtr& e);
std::string pretty(const BexprPtr& b);
std::string pretty(const StmtPtr& s);

}  // namespace wise
