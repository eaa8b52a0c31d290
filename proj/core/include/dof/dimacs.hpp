#pragma once

#include <filesystem>
#include <iosfwd>

#include "dof/formula.hpp"

namespace dof {

// DIMACS CNF conventions used throughout the repo:
//   p cnf <n> <m>             m counts serialized clauses (Star clauses excluded)
//   c star-dropped <count>    present only when Star clauses were dropped
//   0                         a Zero (constant-false) clause
// Clauses have arity <= 3 and pairwise distinct variables.

void write_dimacs(std::ostream& out, const Formula& phi);
/// Throws ParseError on malformed input.
Formula read_dimacs(std::istream& in);

/// File wrappers; throw IoError when the file cannot be opened.
void save_dimacs(const std::filesystem::path& path, const Formula& phi);
Formula load_dimacs(const std::filesystem::path& path);

}  // namespace dof
