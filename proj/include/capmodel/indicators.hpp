#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "capmodel/collab.hpp"
#include "capmodel/errors.hpp"
#include "capmodel/types.hpp"

namespace capmodel {

// National per-researcher average SS, or national mean of the per-university
// excell_sds values. The per-researcher reading is the default.
enum class PqMode { per_researcher, per_university };

// Scale of one article's SS contribution: its journal percentile as a [0,1]
// fraction, or the raw 0-100 percentile. Ratio-type results are unaffected.
enum class SsScale { fraction, percentile };

struct IndicatorConfig {
  double top_share = 0.10;
  PqMode pq_mode = PqMode::per_researcher;
  SsScale ss_scale = SsScale::fraction;
};

// Percentile rank of a journal's impact factor within its subject category:
// 100 * (#journals with strictly lower IF) / (category size - 1). A category
// with a single journal ranks it 50. Ties rank equal.
inline double if_percentile(const Journal& journal, const Corpus& corpus) {
  auto cat = corpus.journals_by_category.find(journal.category);
  if (cat == corpus.journals_by_category.end() || cat->second.empty())
    throw ValidationError("unknown journal category: '" + journal.category + "'");
  const auto& peers = cat->second;
  if (peers.size() == 1) return 50.0;
  std::size_t lower = 0;
  for (const auto& [name, impact] : peers)
    if (impact < journal.impact_factor) ++lower;
  return 100.0 * static_cast<double>(lower) / static_cast<double>(peers.size() - 1);
}

struct ScientistScore {
  std::string researcher_id;
  double ss = 0.0;
  int publication_count = 0;
};

// SS of one researcher: sum over their matched publications in the window of
// the journal's percentile weight. Each co-authored article counts fully.
inline ScientistScore scientific_strength(const Researcher& researcher, const Corpus& corpus,
                                          SsScale scale = SsScale::fraction) {
  ScientistScore score;
  score.researcher_id = researcher.id;
  for (const auto& pub : corpus.publications) {
    bool matched = false;
    for (const auto& entry : pub.byline)
      if (entry.researcher_id && *entry.researcher_id == researcher.id) matched = true;
    if (!matched) continue;
    double pct = if_percentile(pub.journal, corpus);
    score.ss += scale == SsScale::fraction ? pct / 100.0 : pct;
    ++score.publication_count;
  }
  return score;
}

inline std::map<std::string, ScientistScore> score_all(const Corpus& corpus,
                                                       SsScale scale = SsScale::fraction) {
  // One pass over publications instead of one scan per researcher.
  std::map<std::string, ScientistScore> scores;
  for (const auto& [id, r] : corpus.researchers) scores[id] = {id, 0.0, 0};
  for (const auto& pub : corpus.publications) {
    const double pct = if_percentile(pub.journal, corpus);
    const double w = scale == SsScale::fraction ? pct / 100.0 : pct;
    std::set<std::string> seen;
    for (const auto& entry : pub.byline) {
      if (!entry.researcher_id || !seen.insert(*entry.researcher_id).second) continue;
      auto& sc = scores.at(*entry.researcher_id);
      sc.ss += w;
      ++sc.publication_count;
    }
  }
  return scores;
}

// Star scientists of one SDS: the national top ceil(top_share * pool) by SS,
// expanded to include ties with the cutoff score. Zero-SS researchers are
// never stars. The pool is the roster active within the window, matching the
// staffing measure.
inline std::set<std::string> star_set(const std::string& sds_code,
                                      const std::map<std::string, ScientistScore>& scores,
                                      const Corpus& corpus, double top_share = 0.10) {
  if (!(top_share > 0.0 && top_share < 1.0))
    throw ValidationError("top_share must lie in (0, 1)");
  std::vector<const ScientistScore*> pool;
  for (const auto& [id, r] : corpus.researchers)
    if (r.sds_code == sds_code && corpus.window_share(r) > 0) pool.push_back(&scores.at(id));
  std::set<std::string> stars;
  if (pool.empty()) return stars;
  std::sort(pool.begin(), pool.end(), [](const ScientistScore* a, const ScientistScore* b) {
    if (a->ss != b->ss) return a->ss > b->ss;
    return a->researcher_id < b->researcher_id;
  });
  const std::size_t k = static_cast<std::size_t>(
      std::ceil(top_share * static_cast<double>(pool.size())));
  const double cutoff = pool[std::min(k, pool.size()) - 1]->ss;
  for (const auto* s : pool)
    if (s->ss >= cutoff && s->ss > 0.0) stars.insert(s->researcher_id);
  return stars;
}

// (stars_i / stars_national) / (m_i / m_national); 0 when the university has
// no stars or the SDS has none nationally.
inline double star_concentration(double stars_university, double stars_national,
                                 double m_university, double m_national) {
  if (stars_national <= 0.0 || stars_university <= 0.0) return 0.0;
  if (m_university <= 0.0 || m_national <= 0.0) return 0.0;
  return (stars_university / stars_national) / (m_university / m_national);
}

struct SdsIndicators {
  std::string university_id;
  std::string sds_code;
  double m_sds = 0.0;        // average research staff over the window
  double ss_sds = 0.0;       // sum of member SS
  double excell_sds = 0.0;   // ss_sds / m_sds
  int star_count = 0;
  double star_concentration = 0.0;
  long cp_sds = 0;           // observed SDS-level collaborations
};

struct NationalSdsStats {
  std::string sds_code;
  double pq_sds = 0.0;       // national per-researcher SS average
  double p_sds = 0.0;        // share of national SDS-level collaborations
  double national_m = 0.0;
  int national_star_count = 0;
};

struct UniversityIndicators {
  std::string university_id;
  long cp = 0;
  double m = 0.0;
  double excell = 0.0;
  double star_scientist = 0.0;
};

struct IndicatorBundle {
  std::map<std::string, ScientistScore> scores;
  std::map<std::string, std::set<std::string>> stars_by_sds;
  std::vector<SdsIndicators> sds_rows;  // ordered by (university, sds)
  std::map<std::string, NationalSdsStats> national;
  std::vector<UniversityIndicators> university_rows;  // ordered by university

  const SdsIndicators* find_sds(const std::string& university_id,
                                const std::string& sds_code) const {
    for (const auto& row : sds_rows)
      if (row.university_id == university_id && row.sds_code == sds_code) return &row;
    return nullptr;
  }
};

// Per-(university, SDS) indicator table plus national per-SDS statistics.
// Only (university, SDS) cells with m_sds > 0 produce a row.
inline void compute_sds_indicators(const Corpus& corpus, const CollaborationLedger& ledger,
                                   IndicatorBundle& bundle, const IndicatorConfig& config) {
  std::map<std::pair<std::string, std::string>, double> m;   // (u, sds) -> staff
  std::map<std::pair<std::string, std::string>, double> ss;  // (u, sds) -> SS sum
  std::map<std::pair<std::string, std::string>, int> star_counts;
  std::map<std::string, double> national_m;
  std::map<std::string, double> national_ss;
  std::set<std::string> sds_codes;

  for (const auto& [id, r] : corpus.researchers) {
    const double share = corpus.window_share(r);
    if (share <= 0.0) continue;
    sds_codes.insert(r.sds_code);
    m[{r.university_id, r.sds_code}] += share;
    national_m[r.sds_code] += share;
    const double researcher_ss = bundle.scores.at(id).ss;
    ss[{r.university_id, r.sds_code}] += researcher_ss;
    national_ss[r.sds_code] += researcher_ss;
    if (bundle.stars_by_sds.at(r.sds_code).count(id))
      ++star_counts[{r.university_id, r.sds_code}];
  }

  double national_collabs = 0;
  for (const auto& [sds, count] : ledger.per_sds) national_collabs += static_cast<double>(count);

  std::map<std::string, double> pq_per_university_mean;
  if (config.pq_mode == PqMode::per_university) {
    std::map<std::string, std::pair<double, int>> acc;
    for (const auto& [key, m_us] : m) {
      auto& [sum, n] = acc[key.second];
      sum += ss.at(key) / m_us;
      ++n;
    }
    for (const auto& [sds, v] : acc)
      pq_per_university_mean[sds] = v.second ? v.first / v.second : 0.0;
  }

  for (const auto& sds : sds_codes) {
    NationalSdsStats stats;
    stats.sds_code = sds;
    stats.national_m = national_m[sds];
    stats.pq_sds = config.pq_mode == PqMode::per_researcher
                       ? (stats.national_m > 0 ? national_ss[sds] / stats.national_m : 0.0)
                       : pq_per_university_mean[sds];
    auto it = ledger.per_sds.find(sds);
    const double cp = it == ledger.per_sds.end() ? 0.0 : static_cast<double>(it->second);
    stats.p_sds = national_collabs > 0 ? cp / national_collabs : 0.0;
    stats.national_star_count = static_cast<int>(bundle.stars_by_sds.at(sds).size());
    bundle.national[sds] = stats;
  }

  for (const auto& [key, m_us] : m) {
    SdsIndicators row;
    row.university_id = key.first;
    row.sds_code = key.second;
    row.m_sds = m_us;
    row.ss_sds = ss.at(key);
    row.excell_sds = row.ss_sds / row.m_sds;
    auto sc = star_counts.find(key);
    row.star_count = sc == star_counts.end() ? 0 : sc->second;
    const auto& nat = bundle.national.at(key.second);
    row.star_concentration = star_concentration(
        row.star_count, nat.national_star_count, row.m_sds, nat.national_m);
    auto cp = ledger.per_university_sds.find(key);
    row.cp_sds = cp == ledger.per_university_sds.end() ? 0 : cp->second;
    bundle.sds_rows.push_back(std::move(row));
  }
}

// University-level aggregation of the SDS table: all sums weighted by p_sds,
// with excell additionally normalized by the SDS's publishing fertility
// PQ_sds and by the university's total staff.
inline std::vector<UniversityIndicators> aggregate_indicators(
    const std::vector<SdsIndicators>& sds_rows,
    const std::map<std::string, NationalSdsStats>& national,
    const std::map<std::string, std::int64_t>& cp_per_university) {
  std::map<std::string, UniversityIndicators> by_university;
  std::map<std::string, double> staff_total;

  for (const auto& row : sds_rows) {
    auto& agg = by_university[row.university_id];
    agg.university_id = row.university_id;
    const auto& nat = national.at(row.sds_code);
    staff_total[row.university_id] += row.m_sds;
    agg.m += nat.p_sds * row.m_sds;
    agg.star_scientist += nat.p_sds * row.star_concentration;
    if (row.ss_sds > 0.0) {
      if (nat.pq_sds <= 0.0)
        throw ComputationError("pq_sds is zero for SDS " + row.sds_code +
                               " although university " + row.university_id +
                               " has positive SS there");
      agg.excell += (row.ss_sds / nat.pq_sds) * nat.p_sds;
    }
  }

  std::vector<UniversityIndicators> out;
  for (auto& [university, agg] : by_university) {
    const double staff = staff_total[university];
    agg.excell = staff > 0 ? agg.excell / staff : 0.0;
    auto it = cp_per_university.find(university);
    agg.cp = it == cp_per_university.end() ? 0 : static_cast<long>(it->second);
    out.push_back(agg);
  }
  return out;
}

// Full indicator computation: SS scores, national star sets, the per-SDS
// table, and the aggregate university table.
inline IndicatorBundle compute_indicators(const Corpus& corpus,
                                          const CollaborationLedger& ledger,
                                          const IndicatorConfig& config = {}) {
  IndicatorBundle bundle;
  bundle.scores = score_all(corpus, config.ss_scale);
  std::set<std::string> sds_codes;
  for (const auto& [id, r] : corpus.researchers) sds_codes.insert(r.sds_code);
  for (const auto& sds : sds_codes)
    bundle.stars_by_sds[sds] = star_set(sds, bundle.scores, corpus, config.top_share);
  compute_sds_indicators(corpus, ledger, bundle, config);
  bundle.university_rows =
      aggregate_indicators(bundle.sds_rows, bundle.national, ledger.per_university);
  return bundle;
}

}  // namespace capmodel
