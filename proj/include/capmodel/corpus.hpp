#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "capmodel/csv.hpp"
#include "capmodel/errors.hpp"
#include "capmodel/text.hpp"
#include "capmodel/types.hpp"

namespace capmodel {

struct LoadReport {
  std::size_t publications = 0;
  std::size_t publications_filtered_out = 0;
  std::size_t universities = 0;
  std::size_t enterprises = 0;
  std::size_t researchers = 0;
  std::size_t regions = 0;
  std::size_t journals = 0;
  // University-affiliated byline entries with no roster match. These count
  // toward university-level collaboration events but not SDS-level ones.
  std::size_t unmatched_university_authors = 0;
  std::vector<std::string> warnings;
};

inline std::vector<Institution> parse_institutions_csv(const std::string& path) {
  LineReader reader(path);
  std::string line;
  if (!reader.next(line)) throw ValidationError(path + ": empty file");
  if (trim(line) != "id,name,kind,region_code,lat,lon")
    throw ValidationError(path + ": expected header 'id,name,kind,region_code,lat,lon'");
  std::vector<Institution> out;
  while (reader.next(line)) {
    auto f = parse_csv_line(line, reader.where());
    if (f.size() != 6)
      throw ValidationError(reader.where() + ": expected 6 fields, got " +
                            std::to_string(f.size()));
    Institution inst;
    inst.id = trim(f[0]);
    inst.name = f[1];
    if (inst.id.empty()) throw ValidationError(reader.where() + ": empty id");
    const std::string kind = trim(f[2]);
    if (kind == "university") inst.kind = InstitutionKind::university;
    else if (kind == "enterprise") inst.kind = InstitutionKind::enterprise;
    else throw ValidationError(reader.where() + ": field kind must be 'university' or 'enterprise', got '" + kind + "'");
    inst.region_code = trim(f[3]);
    inst.location.lat = parse_double(trim(f[4]), reader.where() + " field lat");
    inst.location.lon = parse_double(trim(f[5]), reader.where() + " field lon");
    if (!valid_coordinates(inst.location))
      throw ValidationError(reader.where() + ": coordinates out of range");
    out.push_back(std::move(inst));
  }
  return out;
}

inline std::vector<Researcher> parse_roster_csv(const std::string& path) {
  LineReader reader(path);
  std::string line;
  if (!reader.next(line)) throw ValidationError(path + ": empty file");
  if (trim(line) != "researcher_id,university_id,sds_code,years")
    throw ValidationError(path + ": expected header 'researcher_id,university_id,sds_code,years'");
  std::vector<Researcher> out;
  while (reader.next(line)) {
    auto f = parse_csv_line(line, reader.where());
    if (f.size() != 4)
      throw ValidationError(reader.where() + ": expected 4 fields, got " +
                            std::to_string(f.size()));
    Researcher r;
    r.id = trim(f[0]);
    r.university_id = trim(f[1]);
    r.sds_code = trim(f[2]);
    if (r.id.empty()) throw ValidationError(reader.where() + ": empty researcher_id");
    if (r.sds_code.empty()) throw ValidationError(reader.where() + ": empty sds_code");
    for (const auto& y : split(trim(f[3]), ';')) {
      if (trim(y).empty()) continue;
      r.active_years.insert(parse_int(trim(y), reader.where() + " field years"));
    }
    if (r.active_years.empty())
      throw ValidationError(reader.where() + ": researcher has no active years");
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<Region> parse_regions_csv(const std::string& path) {
  LineReader reader(path);
  std::string line;
  if (!reader.next(line)) throw ValidationError(path + ": empty file");
  if (trim(line) != "code,capital_name,lat,lon")
    throw ValidationError(path + ": expected header 'code,capital_name,lat,lon'");
  std::vector<Region> out;
  while (reader.next(line)) {
    auto f = parse_csv_line(line, reader.where());
    if (f.size() != 4)
      throw ValidationError(reader.where() + ": expected 4 fields, got " +
                            std::to_string(f.size()));
    Region r;
    r.code = trim(f[0]);
    r.capital_name = f[1];
    if (r.code.empty()) throw ValidationError(reader.where() + ": empty region code");
    r.capital_location.lat = parse_double(trim(f[2]), reader.where() + " field lat");
    r.capital_location.lon = parse_double(trim(f[3]), reader.where() + " field lon");
    if (!valid_coordinates(r.capital_location))
      throw ValidationError(reader.where() + ": coordinates out of range");
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<Publication> parse_publications_jsonl(const std::string& path) {
  LineReader reader(path);
  std::string line;
  std::vector<Publication> out;
  while (reader.next(line)) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ValidationError(reader.where() + ": invalid JSON: " + e.what());
    }
    try {
      Publication pub;
      pub.id = j.at("id").get<std::string>();
      pub.year = j.at("year").get<int>();
      const auto& journal = j.at("journal");
      pub.journal.name = journal.at("name").get<std::string>();
      pub.journal.category = journal.at("category").get<std::string>();
      pub.journal.impact_factor = journal.at("impact_factor").get<double>();
      if (pub.journal.impact_factor < 0)
        throw ValidationError("impact_factor must be >= 0");
      for (const auto& entry : j.at("byline")) {
        BylineEntry b;
        b.author = entry.at("author").get<std::string>();
        b.institution_id = entry.at("institution_id").get<std::string>();
        if (entry.contains("researcher_id") && !entry.at("researcher_id").is_null())
          b.researcher_id = entry.at("researcher_id").get<std::string>();
        pub.byline.push_back(std::move(b));
      }
      if (pub.byline.empty())
        throw ValidationError("byline must be non-empty");
      out.push_back(std::move(pub));
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(reader.where() + ": malformed publication record: " + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError(reader.where() + ": " + e.what());
    }
  }
  return out;
}

// Assembles and validates a corpus from already-parsed records. Publications
// outside the window are dropped (counted in the report). Everything else
// failing validation is a hard error.
inline Corpus build_corpus(std::vector<Publication> publications,
                           std::vector<Institution> institutions,
                           std::vector<Researcher> researchers,
                           std::vector<Region> regions,
                           YearWindow window,
                           LoadReport* report = nullptr) {
  if (window.first > window.last)
    throw ValidationError("window start year exceeds end year");
  Corpus corpus;
  corpus.window = window;
  LoadReport local;
  LoadReport& rep = report ? *report : local;

  for (auto& r : regions) {
    if (!corpus.regions.emplace(r.code, r).second)
      throw ValidationError("duplicate region code: " + r.code);
  }
  rep.regions = corpus.regions.size();

  std::map<std::string, std::string> normalized_names;
  for (auto& inst : institutions) {
    if (corpus.regions.find(inst.region_code) == corpus.regions.end())
      throw ValidationError("institution " + inst.id + " references unknown region '" +
                            inst.region_code + "'");
    std::string norm = normalize_institution_name(inst.name);
    if (norm.empty())
      rep.warnings.push_back("institution " + inst.id + ": name normalizes to empty string");
    auto [it, fresh] = normalized_names.emplace(norm, inst.id);
    if (!fresh && !norm.empty())
      rep.warnings.push_back("institutions " + it->second + " and " + inst.id +
                             " share normalized name '" + norm + "' (possible alias)");
    if (inst.kind == InstitutionKind::university) ++rep.universities;
    else ++rep.enterprises;
    std::string id = inst.id;
    if (!corpus.institutions.emplace(id, std::move(inst)).second)
      throw ValidationError("duplicate institution id: " + id);
  }

  for (auto& r : researchers) {
    auto it = corpus.institutions.find(r.university_id);
    if (it == corpus.institutions.end())
      throw ValidationError("researcher " + r.id + " references unknown university id '" +
                            r.university_id + "'");
    if (it->second.kind != InstitutionKind::university)
      throw ValidationError("researcher " + r.id + ": institution '" + r.university_id +
                            "' is not a university");
    std::string id = r.id;
    if (!corpus.researchers.emplace(id, std::move(r)).second)
      throw ValidationError("duplicate researcher id: " + id);
  }
  rep.researchers = corpus.researchers.size();

  for (auto& pub : publications) {
    if (!window.contains(pub.year)) {
      ++rep.publications_filtered_out;
      continue;
    }
    auto& category = corpus.journals_by_category[pub.journal.category];
    auto [jt, fresh] = category.emplace(pub.journal.name, pub.journal.impact_factor);
    if (!fresh && jt->second != pub.journal.impact_factor)
      throw ValidationError("publication " + pub.id + ": journal '" + pub.journal.name +
                            "' in category '" + pub.journal.category +
                            "' has conflicting impact factors");
    for (const auto& entry : pub.byline) {
      auto it = corpus.institutions.find(entry.institution_id);
      if (it == corpus.institutions.end())
        throw ValidationError("publication " + pub.id + ": byline references unknown institution '" +
                              entry.institution_id + "'");
      if (entry.researcher_id) {
        auto rt = corpus.researchers.find(*entry.researcher_id);
        if (rt == corpus.researchers.end())
          throw ValidationError("publication " + pub.id + ": byline references unknown researcher '" +
                                *entry.researcher_id + "'");
        if (rt->second.university_id != entry.institution_id)
          throw ValidationError("publication " + pub.id + ": researcher '" + *entry.researcher_id +
                                "' belongs to " + rt->second.university_id +
                                ", not byline institution " + entry.institution_id);
      } else if (it->second.kind == InstitutionKind::university) {
        ++rep.unmatched_university_authors;
      }
    }
    corpus.publications.push_back(std::move(pub));
  }
  rep.publications = corpus.publications.size();
  std::size_t n_journals = 0;
  for (const auto& [cat, journals] : corpus.journals_by_category) n_journals += journals.size();
  rep.journals = n_journals;

  if (corpus.publications.empty())
    throw ValidationError("corpus is empty after window filtering (" +
                          std::to_string(rep.publications_filtered_out) +
                          " publications outside " + std::to_string(window.first) + "-" +
                          std::to_string(window.last) + ")");
  return corpus;
}

inline Corpus load_corpus(const std::string& pub_path,
                          const std::string& inst_path,
                          const std::string& roster_path,
                          const std::string& regions_path,
                          YearWindow window,
                          LoadReport* report = nullptr) {
  return build_corpus(parse_publications_jsonl(pub_path),
                      parse_institutions_csv(inst_path),
                      parse_roster_csv(roster_path),
                      parse_regions_csv(regions_path),
                      window, report);
}

// Directory convention used by the CLI: the four standard file names.
inline Corpus load_corpus_dir(const std::filesystem::path& dir, YearWindow window,
                              LoadReport* report = nullptr) {
  for (const char* name :
       {"publications.jsonl", "institutions.csv", "roster.csv", "regions.csv"}) {
    if (!std::filesystem::exists(dir / name))
      throw ValidationError("missing input file: " + (dir / name).string());
  }
  return load_corpus((dir / "publications.jsonl").string(),
                     (dir / "institutions.csv").string(),
                     (dir / "roster.csv").string(),
                     (dir / "regions.csv").string(), window, report);
}

}  // namespace capmodel
