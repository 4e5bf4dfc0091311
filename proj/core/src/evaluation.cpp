#include "ontoforge/evaluation.hpp"

#include <algorithm>
#include <iterator>

#include <json.hpp>

#include "ontoforge/error.hpp"

namespace ontoforge::evaluation {

std::set<std::string> common_concepts(const std::set<std::string>& automatic,
                                      const std::set<std::string>& manual,
                                      const wordnet::WordnetDb& db) {
  std::set<std::string> out;
  for (const auto& a : automatic) {
    if (manual.contains(a)) {
      out.insert(a);
      continue;
    }
    const auto syns = db.synonyms(a);
    if (std::any_of(syns.begin(), syns.end(), [&](const std::string& s) { return manual.contains(s); }))
      out.insert(a);
  }
  return out;
}

long long cc_thousandths(std::size_t common, std::size_t generated, std::size_t manual) {
  const std::size_t total = generated + manual;
  if (total == 0) throw InvalidInput("cc% is undefined for two empty ontologies");
  // The published figures drop digits past the third decimal rather than
  // rounding, so the value is computed exactly in integers.
  return static_cast<long long>((100000ULL * common) / total);
}

double cc_percent(std::size_t common, std::size_t generated, std::size_t manual) {
  return static_cast<double>(cc_thousandths(common, generated, manual)) / 1000.0;
}

std::string format_cc(std::size_t common, std::size_t generated, std::size_t manual) {
  const long long t = cc_thousandths(common, generated, manual);
  std::string frac = std::to_string(t % 1000);
  frac.insert(0, 3 - frac.size(), '0');
  return std::to_string(t / 1000) + "." + frac;
}

ComparisonReport compare(const ontology::Ontology& automatic, const std::set<std::string>& manual,
                         const wordnet::WordnetDb& db, std::string_view case_name) {
  ComparisonReport r;
  r.case_name = std::string(case_name);
  std::set<std::string> labels;
  for (const auto& [label, _] : automatic.concepts) labels.insert(label);
  r.generated_count = labels.size();
  r.manual_count = manual.size();
  r.common_labels = common_concepts(labels, manual, db);
  r.common_count = r.common_labels.size();
  if (r.generated_count + r.manual_count == 0) {
    r.cc_text = "0.000";
    return r;
  }
  r.cc_percent = cc_percent(r.common_count, r.generated_count, r.manual_count);
  r.cc_text = format_cc(r.common_count, r.generated_count, r.manual_count);
  return r;
}

std::string to_json(const ComparisonReport& report) {
  nlohmann::ordered_json j;
  j["case"] = report.case_name;
  j["cc_percent"] = report.cc_percent;
  j["generated"] = report.generated_count;
  j["manual"] = report.manual_count;
  j["common"] = report.common_count;
  j["common_labels"] = report.common_labels;
  return j.dump();
}

std::string format_table(const ComparisonReport& report) {
  return "case\tcommon concepts (%)\tgenerated\tmanual\tcommon\n" + report.case_name + '\t' +
         report.cc_text + '\t' + std::to_string(report.generated_count) + '\t' +
         std::to_string(report.manual_count) + '\t' + std::to_string(report.common_count) + '\n';
}

namespace {

std::size_t intersection_size(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::size_t n = 0;
  for (const auto& x : a) n += b.contains(x) ? 1 : 0;
  return n;
}

}  // namespace

double precision(const std::set<std::string>& retrieved, const std::set<std::string>& relevant) {
  if (retrieved.empty()) throw InvalidInput("precision is undefined for an empty result set");
  return static_cast<double>(intersection_size(retrieved, relevant)) / static_cast<double>(retrieved.size());
}

double recall(const std::set<std::string>& retrieved, const std::set<std::string>& relevant) {
  if (relevant.empty()) throw InvalidInput("recall is undefined without relevant documents");
  return static_cast<double>(intersection_size(retrieved, relevant)) / static_cast<double>(relevant.size());
}

}  // namespace ontoforge::evaluation
