#pragma once

// Net and point-set serialization.
//
// Net JSON: {"base", "s", "m", "n", "matrices": [[[row], ...], ...]} plus an
// optional "tail_rows": [[row], ...] when any matrix has a nonzero tail row.
// Point CSV: a "# schema=1" line, a header, then exact "p/q" coordinates and
// their decimal values.

#include <iosfwd>
#include <span>

#include "json.hpp"

#include "symnet/digital_net.hpp"

namespace symnet {

nlohmann::json net_to_json(const DigitalNet& net);
DigitalNet net_from_json(const nlohmann::json& j);

void write_points_csv(std::ostream& os, std::span<const GVector> points);
nlohmann::json points_to_json(std::span<const GVector> points);

}  // namespace symnet
