#pragma once

// JSON encodings of the library's value types.  Node indices are written
// 1-based; integers that do not fit in 64 bits are written as strings.

#include "cartanqt/deform.hpp"
#include "cartanqt/invariants.hpp"
#include "cartanqt/report.hpp"
#include "cartanqt/rmatrix.hpp"
#include "cartanqt/weyl.hpp"

#include <json.hpp>

namespace cartanqt::json_io {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json to_json(const BiLaurent& p);
BiLaurent poly_from_json(const Json& j);

/// {"type":"C2","order":12,"entries":[{"i":1,"j":1,"u":1,"v":-1,"c":1},...]}
/// sorted by (i, j, u, v).  With t1 set, entries carry no "v" and hold the
/// t = 1 coefficients.
Json to_json(const CTildeTable& tab, bool t1 = false);
CTildeTable table_from_json(const Json& j);

Json to_json(const DimPoly& d);
DimPoly dim_from_json(const Json& j);

Json to_json(const DivisorPoly& d);
DivisorPoly divisor_from_json(const Json& j);

Json to_json(const Word& w);
Word word_from_json(const Json& j);

/// {"checks":N,"failures":[...],"conjectural":[...]}
Json to_json(const Report& r);
Report report_from_json(const Json& j);

}  // namespace cartanqt::json_io
