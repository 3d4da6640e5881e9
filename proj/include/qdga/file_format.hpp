#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "qdga/finite_algebra.hpp"
#include "qdga/presentation.hpp"

namespace qdga {

/// Parsed `.dga` document: a presentation or a finite algebra.
using AlgebraDocument = std::variant<Presentation, FiniteDGAlgebra>;

/// Parses format version 1 (see docs/format.md). Throws ParseError with
/// line and column; runs all validations on the result.
AlgebraDocument parse_document(std::string_view text);
AlgebraDocument load_document(const std::string& path);

/// "builtin:NAME" fixtures: squarezero-H0-H1 (H^0 and H^-1 dims),
/// sphere-cohomology-N, field, and the presentations Tx<N>, S<N> (minimal
/// model of a sphere), lambda-x<N>.
AlgebraDocument builtin_document(const std::string& name);

/// A path or a builtin:NAME reference.
AlgebraDocument resolve_document(const std::string& ref);

}  // namespace qdga
