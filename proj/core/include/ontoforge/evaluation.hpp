#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>

#include "ontoforge/ontology.hpp"
#include "ontoforge/wordnet.hpp"

namespace ontoforge::evaluation {

/// Auto concepts that are in `manual` themselves or through one of their
/// WordNet synonyms. The result is a subset of `automatic`, so two auto
/// synonyms of one manual concept both count.
std::set<std::string> common_concepts(const std::set<std::string>& automatic,
                                      const std::set<std::string>& manual,
                                      const wordnet::WordnetDb& db);

/// 100 * common / (generated + manual) in thousandths of a percent, truncated
/// toward zero. Throws InvalidInput when generated + manual is 0.
long long cc_thousandths(std::size_t common, std::size_t generated, std::size_t manual);

/// cc_thousandths as a percentage (3 decimals exact).
double cc_percent(std::size_t common, std::size_t generated, std::size_t manual);

/// "3.472" style rendering of cc_thousandths.
std::string format_cc(std::size_t common, std::size_t generated, std::size_t manual);

struct ComparisonReport {
  std::string case_name;
  double cc_percent = 0.0;
  std::string cc_text;
  std::size_t generated_count = 0;
  std::size_t manual_count = 0;
  std::size_t common_count = 0;
  std::set<std::string> common_labels;
};

/// An empty comparison (both sides empty) reports 0.
ComparisonReport compare(const ontology::Ontology& automatic, const std::set<std::string>& manual,
                         const wordnet::WordnetDb& db, std::string_view case_name = "comparison");

std::string to_json(const ComparisonReport& report);
/// One header line and one row, in the column order case, cc%, generated,
/// manual, common.
std::string format_table(const ComparisonReport& report);

/// |retrieved ∩ relevant| / |retrieved|; throws InvalidInput on empty retrieved.
double precision(const std::set<std::string>& retrieved, const std::set<std::string>& relevant);
/// |retrieved ∩ relevant| / |relevant|; throws InvalidInput on empty relevant.
double recall(const std::set<std::string>& retrieved, const std::set<std::string>& relevant);

}  // namespace ontoforge::evaluation
