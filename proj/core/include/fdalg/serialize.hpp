#pragma once
// JSON interchange for algebras.  A file stores the field, the basis, the
// unit, and the sparse multiplication table, plus optional grading and Hopf
// blocks.  Scalars travel as exact strings ("3/2", "-7", residues as decimal
// integers), so files are field-agnostic and lossless.  Serialization is
// canonical: equal inputs produce byte-identical text, and
// serialize(deserialize(text)) == text for any text we produced.

#include <optional>
#include <string>

#include "fdalg/extension.hpp"
#include "fdalg/hopf.hpp"

namespace fdalg {

// One parsed or to-be-written file.  The grading and hopf members, when
// present, carry their own copy of the algebra (identical to `algebra`).
struct AlgebraFile {
  FDAlgebra algebra;
  std::optional<GradedAlgebra> grading;
  std::optional<HopfData> hopf;
};

AlgebraFile wrap(const FDAlgebra& a);
AlgebraFile wrap(const GradedAlgebra& g);
AlgebraFile wrap(const HopfData& h);

// Parses "Q" or "F<p>"; throws std::invalid_argument otherwise.
Field field_from_name(const std::string& name);

// Canonical JSON text (two-space indent, sorted keys, trailing newline).
std::string to_json(const AlgebraFile& file);

// Parses and validates.  Throws std::invalid_argument when the text is not
// JSON, does not match the schema, or describes structures that fail
// check_algebra / check_graded / check_hopf.
AlgebraFile from_json(const std::string& text);

}  // namespace fdalg
