#pragma once

#include <iosfwd>

#include "qf2/cospan.hpp"

namespace qf2 {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Block descriptor: '+'-joined blocks from {H0, H1, x0, x1, 0}, each with an
// optional ^k repetition, e.g. "H1+H0^2+x1". "0" is the zero-dimensional
// space. The classifier's output (IsoClass::str) parses back with this.
QuadSpace parse_descriptor(const std::string& text);

// Quadratic space: a dim line, dim rows of the polar form as 0/1 strings
// (coordinate j at position j), then the diagonal of q as one 0/1 line
// (empty for dim 0).
void write_space(std::ostream& os, const QuadSpace& s);
QuadSpace read_space(std::istream& is);

// Span: dom block, cod block, a rank line, then one 0/1 row per relation
// basis vector (length dom.dim + cod.dim, dom coordinates first).
void write_span(std::ostream& os, const SpanMorphism& s);
SpanMorphism read_span(std::istream& is);

// Cospan: dom, cod and apex blocks, then the left leg's matrix as apex.dim
// rows of length dom.dim, then the right leg's likewise.
void write_cospan(std::ostream& os, const Cospan& t);
Cospan read_cospan(std::istream& is);

// CLI argument convenience: the path of an existing file is read as a space
// block; anything else must parse as a block descriptor.
QuadSpace load_space_arg(const std::string& arg);

}  // namespace qf2
