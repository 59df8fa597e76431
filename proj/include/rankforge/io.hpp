#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rankforge/pencil.hpp"
#include "rankforge/smodule.hpp"

namespace rankforge {

// Line-oriented text formats. Blank lines and everything after '#' are
// ignored. Entries outside [0, p) are reduced with a warning.
//
//   pencil              module
//   field <p>           field <p>
//   dims <rows> <cols>  dim <n>
//   vars <n>            gens <k>
//   matrix 0            matrix 1
//   <rows lines>        <n lines>
//   ...                 ...
//
// Pencil blocks are numbered 0..n, module blocks 1..k.

/// Throws ParseError with the offending line number.
Pencil read_pencil(std::istream& in, std::vector<std::string>* warnings = nullptr);
SModule read_module(std::istream& in, std::vector<std::string>* warnings = nullptr);

void write_pencil(std::ostream& out, const Pencil& pencil);
void write_module(std::ostream& out, const SModule& m);

Pencil load_pencil(const std::string& path, std::vector<std::string>* warnings = nullptr);
SModule load_module(const std::string& path, std::vector<std::string>* warnings = nullptr);

/// Comma-separated field elements ("1,0,2"); an empty string is the empty
/// vector. Throws ParseError (line 0) on malformed input.
Vector parse_vector(const std::string& text, const FieldModulus& mod);
std::string format_vector(const Vector& v);

}  // namespace rankforge
