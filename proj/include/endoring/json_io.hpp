#pragma once

#include <stdexcept>
#include <string>

#include "endoring/endoscope.hpp"
#include "endoring/fpmodule.hpp"
#include "json.hpp"

namespace endoring {

using Json = nlohmann::ordered_json;

/// A JSON document does not match the module or morphism schema. The message names the field.
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(const std::string& field, const std::string& problem)
      : std::invalid_argument("field '" + field + "': " + problem), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

Json ring_to_json(const Ring& ring);
RingPtr ring_from_json(const Json& j);

/// {"ring": {...}, "generator_degrees": [...], "relations": [[column entries]]}
Json module_to_json(const FPModule& m);
/// When `ring` is given the document's ring must equal it and the pointer is reused.
FPModule module_from_json(const Json& j, const RingPtr& ring = nullptr);

/// {"ring", "source", "target", "matrix": [[image of each source generator]], "shift"}
Json morphism_to_json(const ModuleMorphism& f);
ModuleMorphism morphism_from_json(const Json& j);

Json vector_to_json(const VectorPoly& v);
Json hilbert_to_json(const HilbertFunction& h);
Json resolution_to_json(const Resolution& res);
Json matrix_to_json(const Matrix& m);

Json report_to_json(const SequenceReport& r);
Json profile_to_json(const RadicalProfile& p);
Json transition_to_json(const TransitionReport& t);
Json block_profile_to_json(const RadicalBlockProfile& p);
Json bound_to_json(const BoundReport& b);

}  // namespace endoring
