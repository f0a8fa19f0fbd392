#pragma once

#include <string>

#include "json.hpp"

#include "glsw/decomposition.hpp"
#include "glsw/quiver.hpp"
#include "glsw/representation.hpp"
#include "glsw/stability.hpp"

namespace glsw {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const RankVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const Matrix& m);  // rows of entry strings
Json to_json(const RootMultiset& m);
Json to_json(const Representation& v);
Json to_json(const DecompositionReport& r);
Json to_json(const StabilityReport& r);

// Quiver, tabulated and computed root data, tubes and extending data.
Json catalog_json(const CatalogEntry& entry);
// One row per family at its default rank.
Json catalog_listing();

// Flatten to "path<TAB>value" lines, in document order.
std::string to_tsv(const Json& j);

}  // namespace glsw
