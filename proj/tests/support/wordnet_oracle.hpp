#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ontoforge/text.hpp"

namespace ontoforge::fixtures {

// Independent reading of data.noun: lemma -> set of synset offsets it appears
// in. Two lemmas are synonyms iff their offset sets intersect.
struct OffsetOracle {
  std::map<std::string, std::set<std::string>> synsets_of;
  std::map<std::string, std::vector<std::string>> members_of;

  explicit OffsetOracle(const std::filesystem::path& dir) {
    std::ifstream in(dir / "data.noun");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == ' ') continue;
      std::istringstream fields(line);
      std::string offset, lex_filenum, ss_type, w_cnt_hex;
      fields >> offset >> lex_filenum >> ss_type >> w_cnt_hex;
      const int w_cnt = std::stoi(w_cnt_hex, nullptr, 16);
      for (int i = 0; i < w_cnt; ++i) {
        std::string word, lex_id;
        fields >> word >> lex_id;
        // Adjective markers like "(a)" are not part of noun lemmas but keep
        // the oracle honest if one slips in.
        if (auto p = word.find('('); p != std::string::npos) word.resize(p);
        synsets_of[text::to_lower(word)].insert(offset);
        members_of[offset].push_back(text::to_lower(word));
      }
    }
  }

  bool synonyms(const std::string& a, const std::string& b) const {
    if (a == b) return true;
    auto ia = synsets_of.find(a), ib = synsets_of.find(b);
    if (ia == synsets_of.end() || ib == synsets_of.end()) return false;
    for (const auto& off : ia->second)
      if (ib->second.contains(off)) return true;
    return false;
  }

  std::vector<std::string> lemmas() const {
    std::vector<std::string> out;
    for (const auto& [l, _] : synsets_of) out.push_back(l);
    return out;
  }
};

}  // namespace ontoforge::fixtures
