#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "capmodel/errors.hpp"

namespace capmodel {

struct LatLon {
  double lat = 0.0;
  double lon = 0.0;
};

inline bool valid_coordinates(const LatLon& p) {
  return p.lat >= -90.0 && p.lat <= 90.0 && p.lon >= -180.0 && p.lon <= 180.0;
}

enum class InstitutionKind { university, enterprise };

inline const char* to_string(InstitutionKind k) {
  return k == InstitutionKind::university ? "university" : "enterprise";
}

struct Institution {
  std::string id;
  std::string name;
  InstitutionKind kind = InstitutionKind::university;
  std::string region_code;
  LatLon location;
};

struct Researcher {
  std::string id;
  std::string university_id;
  std::string sds_code;
  std::set<int> active_years;
};

struct Journal {
  std::string name;
  std::string category;
  double impact_factor = 0.0;
};

struct BylineEntry {
  std::string author;
  std::string institution_id;
  std::optional<std::string> researcher_id;
};

struct Publication {
  std::string id;
  int year = 0;
  Journal journal;
  std::vector<BylineEntry> byline;
};

struct Region {
  std::string code;
  std::string capital_name;
  LatLon capital_location;
};

struct YearWindow {
  int first = 0;
  int last = 0;

  bool contains(int year) const { return year >= first && year <= last; }
  int length() const { return last - first + 1; }
};

// Immutable after load; safe for concurrent reads.
struct Corpus {
  YearWindow window;
  std::map<std::string, Institution> institutions;
  std::map<std::string, Researcher> researchers;
  std::map<std::string, Region> regions;
  std::vector<Publication> publications;
  // One entry per distinct (category, name); populated from publication records.
  std::map<std::string, std::map<std::string, double>> journals_by_category;

  const Institution& institution(const std::string& id) const {
    auto it = institutions.find(id);
    if (it == institutions.end())
      throw ValidationError("unknown institution id: " + id);
    return it->second;
  }

  const Region& region(const std::string& code) const {
    auto it = regions.find(code);
    if (it == regions.end()) throw ValidationError("unknown region code: " + code);
    return it->second;
  }

  bool is_university(const std::string& id) const {
    return institution(id).kind == InstitutionKind::university;
  }

  // Average active head count over the window for one researcher.
  double window_share(const Researcher& r) const {
    int active = 0;
    for (int y : r.active_years)
      if (window.contains(y)) ++active;
    return static_cast<double>(active) / window.length();
  }
};

}  // namespace capmodel
