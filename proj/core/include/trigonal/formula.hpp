#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <trigonal/sparse_poly.hpp>

namespace trigonal
{

// Parses one polynomial in the formula grammar:
//   relation := expr ('=' expr)?          (a relation lhs = rhs is read as lhs - rhs)
//   expr     := ('+'|'-')? term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := (rational | symbol | '(' expr ')') ('^' integer)?
// Symbols are interned in reg; inadmissible ones raise usage_error, syntax problems parse_error.
sparse_poly parse_formula(std::string_view text, const registry_ptr &reg);

struct formula_block {
    std::string name;
    sparse_poly value;
    std::size_t line = 0;
};

// Parses a file of blocks "[name] relation ;". '#' starts a comment running to end of line.
// Block names must be unique.
std::vector<formula_block> parse_blocks(std::string_view text, const registry_ptr &reg);

// Canonical text of a block file, one block per line.
std::string serialize_blocks(const std::vector<formula_block> &blocks);

} // namespace trigonal
