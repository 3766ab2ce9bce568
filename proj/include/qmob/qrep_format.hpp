#pragma once

#include <string>

#include "qmob/rep.hpp"

namespace qmob {

/// Parse the line-oriented .qrep format:
///
///   name A3                  # optional, free text
///   field 2                  # a prime, or the word `infinite`
///   quiver
///     vertices 4
///     arrow alpha 1 2
///   relations                # section optional
///     rel 1 alpha.gamma - 1 beta.delta
///   representation
///     dim 1 2                # omitted vertices have dimension 0
///     map alpha [[1,0],[0,1]]   # row-major, dim(target) x dim(source);
///                               # omitted arrows get the zero map
///
/// `#` starts a comment anywhere.  The path `a.b` traverses a then b, so its
/// matrix is M_b * M_a.  Coefficients and matrix entries are integers or
/// fractions like 3/4.  The result is fully validated; structural problems
/// raise ValidationError, malformed text raises SyntaxError with line and
/// column.
Representation parse_qrep(const std::string& text);

/// Read and parse a .qrep file; DomainError when the file cannot be read.
Representation parse_qrep_file(const std::string& path);

/// Canonical printer: sections in fixed order, two-space indent, vertices
/// with dimension 0 and zero maps omitted, no superfluous whitespace.
/// print_qrep followed by parse_qrep is the identity on validated
/// representations, and parse followed by print is idempotent on files in
/// canonical form.
std::string print_qrep(const Representation& m);

}  // namespace qmob
