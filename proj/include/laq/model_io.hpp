#pragma once

#include <string>

#include <json.hpp>

#include "laq/builders.hpp"
#include "laq/la_groupoid.hpp"

namespace laq {

// A parsed "laq-v1" document. Exactly one of the two shapes:
//   builder form   {"format": "laq-v1", "builder": <name>, ...builder fields}
//   explicit form  {"format": "laq-v1", "explicit": {...full tables}}
// parse_model guarantees the shape; build_model turns it into an LAGroupoid.
struct ModelDocument {
    std::string builder;       // builder name, empty for the explicit form
    nlohmann::json document;   // the full top-level object

    bool is_builder() const { return !builder.empty(); }
    friend bool operator==(const ModelDocument&, const ModelDocument&) = default;
};

// Structural validation only: valid JSON, format tag, exactly one shape, a
// known builder name. Anything else throws ParseError with a byte offset
// when the underlying JSON parser provides one.
ModelDocument parse_model(const std::string& text);

// reads the file (ParseError on IO failure) and parses it
ModelDocument parse_model_file(const std::string& path);

// Constructs the square. Document defects (missing keys, bad rationals,
// matrix dimensions that contradict the declared fiber dims, references to
// undeclared labels) throw ParseError; mathematically invalid but
// well-formed input is *not* rejected here, that is validate_la's job.
// Builder preconditions still apply: equivariant/vacant throw ActionInvalid,
// pair_zero throws EmptySet.
LAGroupoid build_model(const ModelDocument& doc);

// pieces of build_model, exposed for tests and tooling

// {"objects": [...], "arrows": [{"id","src","tgt"}...], "mult": [[g,h,gh]...],
//  "units": {object: arrow}, "inverses": {arrow: arrow}}
FiniteGroupoid parse_groupoid(const nlohmann::json& j);

// {point: {"dim": n, "brackets": [[i, j, k, c]...]}} with 1-based i < j, k
LieFiberBundle parse_bundle(const nlohmann::json& j);

// JSON integer or "a/b" string; everything else (floats included) is rejected
Rational parse_rational_json(const nlohmann::json& j);

// row-major array of rows; shape must match exactly
SparseMatrix parse_matrix(const nlohmann::json& j, std::size_t rows, std::size_t cols);

}  // namespace laq
