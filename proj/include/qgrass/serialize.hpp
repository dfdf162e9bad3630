#pragma once

#include <optional>

#include <json.hpp>

#include "qgrass/construct.hpp"
#include "qgrass/grassmann.hpp"
#include "qgrass/homext.hpp"
#include "qgrass/reptype.hpp"

namespace qgrass {

using Json = nlohmann::json;

// Schemas:
//   quiver          {"vertices": [...], "arrows": [{"id", "from", "to"}]}
//   field           {"type": "prime", "p": 5} | {"type": "rational"}
//   dimension vector {"<vertex>": k, ...}; missing vertices count as 0
//   representation  {"quiver", "field", "dims", "matrices": {"<arrow>": [[...]]}}
// Matrix entries are integers, or "a/b" strings over Q (integers are also
// accepted there). Objects are keyed by id, so output key order is sorted.
// Parse errors throw InvalidArgument naming the offending field.

Json to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json to_json(const Field& f);
Field field_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const Field& f, std::size_t rows, std::size_t cols);

Json dims_to_json(const Quiver& q, const DimVector& d);
DimVector dims_from_json(const Quiver& q, const Json& j);

Json to_json(const Representation& m);
// `field` overrides the field stored in the document (entries are reduced
// into it); one of the two must be present.
Representation representation_from_json(const Json& j, const std::optional<Field>& field = {});

Json point_to_json(const Quiver& q, const SubmodulePoint& pt);
Json to_json(const GrassmannianReport& r, bool count_only = false);
Json to_json(const Morphism& f);
Json to_json(const Representation& m, const ExtCocycle& c);

Json to_json(const ClassificationResult& c);
Json to_json(const TitsResult& t);

Json to_json(const EtaWitness& w);
Json to_json(const Quiver& q, const ConditionCReport& r);
Json to_json(const Quiver& q, const Lemma1Report& r);
Json to_json(const Quiver& q, const Lemma2Report& r);
Json to_json(const FullnessReport& r);
Json to_json(const BijectionReport& r);
Json to_json(const RemarkReport& r);

}  // namespace qgrass
