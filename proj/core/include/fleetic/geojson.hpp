#pragma once

#include <nlohmann/json.hpp>

#include "fleetic/coverage.hpp"
#include "fleetic/pareto.hpp"

namespace fleetic {

/// RFC 7946 FeatureCollection (lon, lat order): one Point per demand node
/// with per-type demand and covered flags, then one Point per open base
/// with the team types it hosts. Features are ordered by id within each
/// group; closed sites are omitted. Throws ValidationError naming the
/// first entity without coordinates.
nlohmann::json export_geojson(const Instance& instance, const CoverMatrix& cover,
                              const Deployment& deployment);

/// Same layout for a Pareto point; the collection carries lambda, TxCob
/// and TxRedBases as foreign members.
nlohmann::json export_geojson(const Instance& instance, const CoverMatrix& cover,
                              const ParetoPoint& point);

}  // namespace fleetic
