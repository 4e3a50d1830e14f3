#pragma once

#include <cmath>
#include <map>
#include <set>
#include <string>

#include "capmodel/collab.hpp"
#include "capmodel/errors.hpp"
#include "capmodel/types.hpp"

namespace capmodel {

// IUGG mean Earth radius.
inline constexpr double kEarthRadiusKm = 6371.0088;

// Haversine distance in km on a sphere. Symmetric, zero iff a == b.
inline double great_circle_km(const LatLon& a, const LatLon& b) {
  constexpr double deg = M_PI / 180.0;
  const double lat1 = a.lat * deg, lat2 = b.lat * deg;
  const double dlat = (b.lat - a.lat) * deg;
  const double dlon = (b.lon - a.lon) * deg;
  const double s1 = std::sin(dlat / 2.0);
  const double s2 = std::sin(dlon / 2.0);
  double h = s1 * s1 + std::cos(lat1) * std::cos(lat2) * s2 * s2;
  if (h > 1.0) h = 1.0;
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

struct DemandScope {
  enum class Kind { sds, national_mix, own_collaborations };
  Kind kind = Kind::sds;
  std::string key;  // sds code or university id

  std::string label() const {
    switch (kind) {
      case Kind::sds: return "sds:" + key;
      case Kind::national_mix: return "aggregate";
      case Kind::own_collaborations: return "aggregate_own";
    }
    return "";
  }
};

struct DemandDistribution {
  DemandScope scope;
  std::map<std::string, double> weights;  // region code -> share, sums to 1

  bool empty() const { return weights.empty(); }
};

// Region shares of an SDS's national SDS-level collaborations.
inline DemandDistribution demand_distribution_sds(const CollaborationLedger& ledger,
                                                  const std::string& sds_code) {
  DemandDistribution dist;
  dist.scope = {DemandScope::Kind::sds, sds_code};
  double total = 0;
  for (const auto& [key, count] : ledger.sds_region_demand)
    if (key.first == sds_code) total += static_cast<double>(count);
  if (total == 0) return dist;
  for (const auto& [key, count] : ledger.sds_region_demand)
    if (key.first == sds_code)
      dist.weights[key.second] = static_cast<double>(count) / total;
  return dist;
}

struct DistanceRecord {
  std::string university_id;
  DemandScope scope;
  double km = 0.0;
};

// Demand-share weighted distance from a university to the capital cities of
// the regions hosting collaborating enterprises.
inline DistanceRecord weighted_distance(const std::string& university_id,
                                        const DemandDistribution& dist,
                                        const Corpus& corpus) {
  if (dist.empty())
    throw ComputationError("no demand: distance undefined for scope " + dist.scope.label());
  const Institution& u = corpus.institution(university_id);
  double d = 0;
  for (const auto& [region_code, weight] : dist.weights) {
    if (weight < 0)
      throw ValidationError("negative demand weight for region " + region_code);
    d += weight * great_circle_km(u.location, corpus.region(region_code).capital_location);
  }
  return {university_id, dist.scope, d};
}

enum class AggregateDistanceMode {
  // Mixture of the national SDS demand distributions over the university's
  // active SDSs, weighted by p_sds. Defined for zero-collaboration
  // universities as long as one active SDS has national demand.
  national_mix,
  // The university's own university-level collaborations by enterprise
  // region. Undefined for universities with no collaborations.
  own_collaborations,
};

// Region demand mix seen from one university at the aggregate level.
// `active_sds` lists the SDSs where the university has staff; `p_sds` is each
// SDS's share of national SDS-level collaborations.
inline DemandDistribution demand_distribution_university(
    const std::string& university_id, const Corpus& corpus,
    const CollaborationLedger& ledger,
    AggregateDistanceMode mode = AggregateDistanceMode::national_mix) {
  DemandDistribution dist;
  if (mode == AggregateDistanceMode::own_collaborations) {
    dist.scope = {DemandScope::Kind::own_collaborations, university_id};
    double total = 0;
    for (const auto& [key, count] : ledger.university_region_demand)
      if (key.first == university_id) total += static_cast<double>(count);
    if (total == 0) return dist;
    for (const auto& [key, count] : ledger.university_region_demand)
      if (key.first == university_id)
        dist.weights[key.second] = static_cast<double>(count) / total;
    return dist;
  }

  dist.scope = {DemandScope::Kind::national_mix, university_id};
  double national_total = 0;
  for (const auto& [sds, count] : ledger.per_sds) national_total += static_cast<double>(count);
  if (national_total == 0) return dist;

  std::set<std::string> active_sds;
  for (const auto& [id, r] : corpus.researchers)
    if (r.university_id == university_id && corpus.window_share(r) > 0)
      active_sds.insert(r.sds_code);

  double mass = 0;
  for (const auto& sds : active_sds) {
    auto it = ledger.per_sds.find(sds);
    if (it == ledger.per_sds.end() || it->second == 0) continue;
    const double p_sds = static_cast<double>(it->second) / national_total;
    DemandDistribution sds_dist = demand_distribution_sds(ledger, sds);
    for (const auto& [region, share] : sds_dist.weights) {
      dist.weights[region] += p_sds * share;
      mass += p_sds * share;
    }
  }
  if (mass == 0) {
    dist.weights.clear();
    return dist;
  }
  for (auto& [region, w] : dist.weights) w /= mass;
  return dist;
}

}  // namespace capmodel
