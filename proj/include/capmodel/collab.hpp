#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "capmodel/types.hpp"

namespace capmodel {

enum class CollabLevel { university, sds };

struct CollaborationEvent {
  std::string publication_id;
  std::string university_id;
  std::string enterprise_id;
  CollabLevel level = CollabLevel::university;
  std::string sds_code;  // present exactly when level == sds
  std::string enterprise_region;
};

struct LevelTally {
  std::int64_t collaborations = 0;
  std::int64_t pairs = 0;
};

struct CollaborationLedger {
  std::vector<CollaborationEvent> events;
  LevelTally university_tally;
  LevelTally sds_tally;
  // University-level event counts.
  std::map<std::string, std::int64_t> per_university;
  std::map<std::string, std::int64_t> per_university_region;  // by the university's region
  std::map<std::pair<std::string, std::string>, std::int64_t> university_region_demand;  // by enterprise region
  // SDS-level event counts.
  std::map<std::string, std::int64_t> per_sds;
  std::map<std::pair<std::string, std::string>, std::int64_t> per_university_sds;
  std::map<std::pair<std::string, std::string>, std::int64_t> sds_region_demand;  // (sds, enterprise region)
};

// A publication qualifies when its byline spans at least one university and
// one enterprise. It then yields m*n university-level events over the
// distinct universities and enterprises, and s*n SDS-level events where s is
// the number of distinct (university, sds) groups among roster-matched
// university authors. Duplicate affiliations on one byline collapse.
inline CollaborationLedger extract_events(const Corpus& corpus) {
  CollaborationLedger ledger;
  std::set<std::pair<std::string, std::string>> university_pairs;
  std::set<std::tuple<std::string, std::string, std::string>> sds_pairs;

  for (const auto& pub : corpus.publications) {
    std::set<std::string> universities;
    std::set<std::string> enterprises;
    std::set<std::pair<std::string, std::string>> sds_groups;
    for (const auto& entry : pub.byline) {
      const Institution& inst = corpus.institution(entry.institution_id);
      if (inst.kind == InstitutionKind::university) {
        universities.insert(inst.id);
        if (entry.researcher_id) {
          const Researcher& r = corpus.researchers.at(*entry.researcher_id);
          sds_groups.emplace(inst.id, r.sds_code);
        }
      } else {
        enterprises.insert(inst.id);
      }
    }
    if (universities.empty() || enterprises.empty()) continue;

    for (const auto& u : universities) {
      const std::string& u_region = corpus.institution(u).region_code;
      for (const auto& e : enterprises) {
        const std::string& e_region = corpus.institution(e).region_code;
        ledger.events.push_back({pub.id, u, e, CollabLevel::university, "", e_region});
        ++ledger.university_tally.collaborations;
        ++ledger.per_university[u];
        ++ledger.per_university_region[u_region];
        ++ledger.university_region_demand[{u, e_region}];
        university_pairs.emplace(u, e);
      }
    }
    for (const auto& [u, sds] : sds_groups) {
      for (const auto& e : enterprises) {
        const std::string& e_region = corpus.institution(e).region_code;
        ledger.events.push_back({pub.id, u, e, CollabLevel::sds, sds, e_region});
        ++ledger.sds_tally.collaborations;
        ++ledger.per_sds[sds];
        ++ledger.per_university_sds[{u, sds}];
        ++ledger.sds_region_demand[{sds, e_region}];
        sds_pairs.emplace(u, sds, e);
      }
    }
  }
  ledger.university_tally.pairs = static_cast<std::int64_t>(university_pairs.size());
  ledger.sds_tally.pairs = static_cast<std::int64_t>(sds_pairs.size());
  return ledger;
}

struct PairSummary {
  LevelTally university;
  LevelTally sds;
};

// Recomputes collaboration and pair counts from the event list. A pair is a
// distinct (university, enterprise) or (university, sds, enterprise) key;
// repeated collaborations between the same pair count once.
inline PairSummary tally_pairs(const CollaborationLedger& ledger) {
  PairSummary s;
  std::set<std::pair<std::string, std::string>> upairs;
  std::set<std::tuple<std::string, std::string, std::string>> spairs;
  for (const auto& ev : ledger.events) {
    if (ev.level == CollabLevel::university) {
      ++s.university.collaborations;
      upairs.emplace(ev.university_id, ev.enterprise_id);
    } else {
      ++s.sds.collaborations;
      spairs.emplace(ev.university_id, ev.sds_code, ev.enterprise_id);
    }
  }
  s.university.pairs = static_cast<std::int64_t>(upairs.size());
  s.sds.pairs = static_cast<std::int64_t>(spairs.size());
  return s;
}

struct RegionalRow {
  std::string region_code;
  std::string group;
  std::int64_t collaborations = 0;
  double share_pct = 0.0;
};

struct RegionalReport {
  std::vector<RegionalRow> rows;  // ordered by group, descending count within
  std::map<std::string, std::int64_t> group_totals;
  std::map<std::string, double> group_shares;
  std::int64_t total = 0;
};

// University-level collaborations grouped by the university's region, with
// percentage shares. `macro_groups` maps region code -> group label; regions
// without a mapping fall into "All".
inline RegionalReport regional_report(
    const CollaborationLedger& ledger, const Corpus& corpus,
    const std::map<std::string, std::string>& macro_groups = {}) {
  RegionalReport rep;
  for (const auto& [region, count] : ledger.per_university_region) {
    (void)corpus.region(region);  // every university must have a known region
    rep.total += count;
  }
  if (rep.total == 0) return rep;
  for (const auto& [region, count] : ledger.per_university_region) {
    RegionalRow row;
    row.region_code = region;
    auto g = macro_groups.find(region);
    row.group = g == macro_groups.end() ? "All" : g->second;
    row.collaborations = count;
    row.share_pct = 100.0 * static_cast<double>(count) / static_cast<double>(rep.total);
    rep.rows.push_back(std::move(row));
  }
  std::stable_sort(rep.rows.begin(), rep.rows.end(),
                   [](const RegionalRow& a, const RegionalRow& b) {
                     if (a.group != b.group) return a.group < b.group;
                     if (a.collaborations != b.collaborations)
                       return a.collaborations > b.collaborations;
                     return a.region_code < b.region_code;
                   });
  for (const auto& row : rep.rows) rep.group_totals[row.group] += row.collaborations;
  for (const auto& [group, count] : rep.group_totals)
    rep.group_shares[group] = 100.0 * static_cast<double>(count) / static_cast<double>(rep.total);
  return rep;
}

}  // namespace capmodel
