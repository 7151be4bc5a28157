#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fring/constructions.hpp"
#include "fring/fp_algebra.hpp"
#include "fring/ring.hpp"

namespace fring {

struct RingExprOptions {
    ConstructionOptions construction;
    /// Relative fp("...") paths resolve against this directory.
    std::filesystem::path base_dir = ".";
};

/// Ring expressions:
///   F<p> | Z<n> | M(n, e) | T(n, e) | S(n, e) | D(n, e) | V(n, e)
///   | prod(e, e, ...) | quotpoly(e, n) | fp("file.ring") | fp(name)
/// where fp(name) refers to a built-in presentation. A bare path ending in
/// ".ring" is read as fp("path"). Errors are ParseError with the column.
FiniteRing build_ring(std::string_view text, const RingExprOptions& opts = {});

/// The presentation behind a top-level fp(...) expression, or nullopt for
/// every other expression.
std::optional<Presentation> ring_expr_presentation(std::string_view text, const RingExprOptions& opts = {});

/// Canonical spelling of an expression, e.g. "M(2,F2)" -> "M(2, F2)".
std::string canonical_ring_expr(std::string_view text);

/// Expands integer ranges `a..b` (in matrix sizes and quotpoly degrees)
/// into concrete expressions, leftmost range varying slowest.
std::vector<std::string> expand_ring_family(std::string_view text);

}  // namespace fring
