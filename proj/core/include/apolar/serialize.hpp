#pragma once

#include <nlohmann/json.hpp>

#include "apolar/artin.hpp"
#include "apolar/classify.hpp"
#include "apolar/resolution.hpp"
#include "apolar/sequences.hpp"

namespace apolar {

using Json = nlohmann::ordered_json;

/// {"n": 4, "s": 5, "entries": [[i, j, b], ...]} with entries sorted by (i, j).
Json betti_to_json(const BettiTable& b, int s);
/// Inverse of betti_to_json; returns the table and stores s. Throws ParseError
/// on schema violations.
BettiTable betti_from_json(const Json& j, int* s = nullptr);

/// [1, 4, 7, 7, 4, 1]
Json to_json(const HVector& h);
HVector hvector_from_json(const Json& j);

/// [6, 4, 4, 4, 2, 2, 2]
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// Rationals are strings such as "3" or "-1/2".
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// ["1", "1", "1", "1"]
Json to_json(const LinearForm& l);
LinearForm linear_form_from_json(const Json& j);

Json to_json(const CIReport& r);
Json to_json(const EquigeneratedReport& r);
Json to_json(const K4Report& r);
Json to_json(const TablesReport& r, const std::vector<ConjecturedTable>& tables);

}  // namespace apolar
