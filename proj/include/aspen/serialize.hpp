#pragma once

#include <string>

#include "aspen/objects.hpp"

namespace aspen {

// Canonical text serialization: a one-line header ("AST n", "MAGOG m n k lambda",
// "GOG m n k l", "GT n", "ASM n") followed by one line of space-separated
// integers per row. Magog rows list kept cells, Gog rows list free cells
// (possibly empty lines), GT rows are written left to right.

std::string to_text(const AstTriangle& t);
std::string to_text(const MagogPentagon& p);
std::string to_text(const GogPentagon& g);
std::string to_text(const GtPattern& g);
std::string to_text(const Asm& a);

AstTriangle parse_ast(const std::string& text);
MagogPentagon parse_magog(const std::string& text);
GogPentagon parse_gog(const std::string& text);
GtPattern parse_gt(const std::string& text);
Asm parse_asm(const std::string& text);

}  // namespace aspen
