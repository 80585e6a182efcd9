#pragma once

#include <iosfwd>
#include <string>

#include "switchhom/certificate.hpp"
#include "switchhom/mixed_graph.hpp"
#include "switchhom/perm_group.hpp"

namespace switchhom {

// Graph text format:
//   mng <m> <n>
//   v <vertex_count>
//   e <u> <v> <colour>
//   a <tail> <head> <colour>
// '#' starts a comment; parse errors carry line numbers. Parsing is purely
// syntactic; run validate() for the structural invariants.
MixedGraph parse_graph(std::istream& in);
void write_graph(std::ostream& out, const MixedGraph& g);

// Group text format: header `grp <m> <n>`, then one generator per line:
//   g <alpha images> | <beta images> | <flip chars, '-' reverses>
// A section is written as '.' when its colour count is zero. Loading closes
// the generators into the full group.
SwitchGroup parse_group(std::istream& in, std::size_t closure_cap = kDefaultClosureCap);
void write_group(std::ostream& out, const SwitchGroup& g);

// Certificate format: a `cert yes k1|k2 <i>|t2 <i>` or `cert no <reason>`
// header, then `s <vertex> <element>` lines and a `map <bits>` line for YES,
// or one witness line for NO.
Certificate parse_certificate(std::istream& in);
void write_certificate(std::ostream& out, const Certificate& cert);

MixedGraph load_graph_file(const std::string& path);
SwitchGroup load_group_file(const std::string& path, std::size_t closure_cap = kDefaultClosureCap);
Certificate load_certificate_file(const std::string& path);
void save_certificate_file(const std::string& path, const Certificate& cert);

} // namespace switchhom
