#include "ontoforge/nlp.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

#include "lexicon_data.hpp"
#include "ontoforge/error.hpp"
#include "ontoforge/text.hpp"

namespace ontoforge::nlp {

namespace {

constexpr std::array<std::string_view, kPosTagCount> kTagNames = {
    "NN", "NNS", "NNP", "NNPS", "VB", "VBD", "VBG", "VBN", "VBP", "VBZ",
    "JJ", "IN",  "DT",  "PRP",  "CC", "RB",  "CD",  "TO",  "OTHER",
};

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }
bool is_consonant(char c) { return is_alpha(c) && !is_vowel(c); }

bool has_vowel(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) { return is_vowel(c) || c == 'y'; });
}

bool is_split_punct(char c) {
  switch (c) {
    case '.': case ',': case ';': case ':': case '!': case '?': case '(': case ')':
    case '[': case ']': case '{': case '}': case '"': case '\'': case '`':
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Lemmatizer tables

struct Pair {
  std::string_view from;
  std::string_view to;
};

constexpr Pair kIrregularPlurals[] = {
    {"people", "person"},   {"men", "man"},           {"women", "woman"},
    {"children", "child"},  {"feet", "foot"},         {"teeth", "tooth"},
    {"mice", "mouse"},      {"geese", "goose"},       {"analyses", "analysis"},
    {"crises", "crisis"},   {"criteria", "criterion"}, {"phenomena", "phenomenon"},
    {"indices", "index"},   {"matrices", "matrix"},   {"vertices", "vertex"},
    {"lives", "life"},      {"wives", "wife"},        {"knives", "knife"},
    {"leaves", "leaf"},     {"halves", "half"},       {"shelves", "shelf"},
    {"thieves", "thief"},   {"wolves", "wolf"},       {"policies", "policy"},
    {"movies", "movie"},    {"cookies", "cookie"},    {"caches", "cache"},
    {"niches", "niche"},    {"diagnoses", "diagnosis"}, {"hypotheses", "hypothesis"},
    {"theses", "thesis"},   {"bases", "base"},        {"buses", "bus"},
};

constexpr std::string_view kPluralInvariant[] = {
    "news", "series", "species", "means", "gas", "lens", "physics", "mathematics",
    "economics", "always", "thus", "this", "his", "its", "yes", "plus", "chaos",
    "canvas", "atlas", "alias", "bias", "corps", "diabetes", "headquarters",
    "premises", "aids", "whereas", "perhaps", "sometimes", "nevertheless", "towards",
    "afterwards", "besides", "ethics", "logistics", "electronics", "analytics",
};

// Past tense and participle forms.
constexpr Pair kIrregularPast[] = {
    {"was", "be"},        {"were", "be"},       {"been", "be"},        {"had", "have"},
    {"did", "do"},        {"done", "do"},       {"made", "make"},      {"paid", "pay"},
    {"said", "say"},      {"went", "go"},       {"gone", "go"},        {"took", "take"},
    {"taken", "take"},    {"gave", "give"},     {"given", "give"},     {"got", "get"},
    {"gotten", "get"},    {"rose", "rise"},     {"risen", "rise"},     {"chose", "choose"},
    {"chosen", "choose"}, {"wrote", "write"},   {"written", "write"},  {"bought", "buy"},
    {"sold", "sell"},     {"told", "tell"},     {"found", "find"},     {"kept", "keep"},
    {"left", "leave"},    {"meant", "mean"},    {"brought", "bring"},  {"thought", "think"},
    {"held", "hold"},     {"ran", "run"},       {"began", "begin"},    {"begun", "begin"},
    {"became", "become"}, {"came", "come"},     {"saw", "see"},        {"seen", "see"},
    {"knew", "know"},     {"known", "know"},    {"grew", "grow"},      {"grown", "grow"},
    {"fell", "fall"},     {"fallen", "fall"},   {"spent", "spend"},    {"sent", "send"},
    {"built", "build"},   {"lost", "lose"},     {"met", "meet"},       {"led", "lead"},
    {"understood", "understand"}, {"stood", "stand"}, {"drove", "drive"},
    {"driven", "drive"},  {"broke", "break"},   {"broken", "break"},   {"spoke", "speak"},
    {"spoken", "speak"},  {"stole", "steal"},   {"stolen", "steal"},   {"won", "win"},
    {"felt", "feel"},     {"heard", "hear"},    {"laid", "lay"},       {"lent", "lend"},
    {"dealt", "deal"},    {"sought", "seek"},   {"taught", "teach"},   {"caught", "catch"},
    {"fought", "fight"},  {"shown", "show"},    {"drew", "draw"},      {"drawn", "draw"},
    {"threw", "throw"},   {"thrown", "throw"},  {"flew", "fly"},       {"flown", "fly"},
    {"forgot", "forget"}, {"forgotten", "forget"}, {"hid", "hide"},    {"hidden", "hide"},
    {"rode", "ride"},     {"ridden", "ride"},   {"shook", "shake"},    {"shaken", "shake"},
    {"struck", "strike"}, {"swore", "swear"},   {"sworn", "swear"},    {"tore", "tear"},
    {"torn", "tear"},     {"wore", "wear"},     {"worn", "wear"},      {"woke", "wake"},
    {"woken", "wake"},    {"froze", "freeze"},  {"frozen", "freeze"},  {"arose", "arise"},
    {"arisen", "arise"},  {"undertook", "undertake"}, {"undertaken", "undertake"},
    {"withdrew", "withdraw"}, {"withdrawn", "withdraw"}, {"overcame", "overcome"},
    {"bore", "bear"},     {"borne", "bear"},    {"bound", "bind"},     {"fed", "feed"},
    {"fled", "flee"},     {"bled", "bleed"},    {"sped", "speed"},     {"stuck", "stick"},
    {"shot", "shoot"},    {"slept", "sleep"},   {"swept", "sweep"},    {"dug", "dig"},
    {"hung", "hang"},     {"lit", "light"},     {"sat", "sit"},        {"underwrote", "underwrite"},
    {"underwritten", "underwrite"}, {"lay", "lie"}, {"lain", "lie"},   {"agreed", "agree"},
    {"freed", "free"},    {"guaranteed", "guarantee"}, {"refereed", "referee"},
};

constexpr Pair kIrregularPresent[] = {
    {"is", "be"}, {"are", "be"}, {"am", "be"}, {"has", "have"}, {"does", "do"},
    {"goes", "go"},
};

constexpr Pair kIrregularGerund[] = {
    {"being", "be"},    {"having", "have"}, {"dying", "die"},       {"lying", "lie"},
    {"tying", "tie"},   {"making", "make"}, {"taking", "take"},     {"coming", "come"},
    {"giving", "give"}, {"using", "use"},   {"becoming", "become"}, {"writing", "write"},
    {"driving", "drive"}, {"doing", "do"},  {"seeing", "see"},      {"agreeing", "agree"},
};

// Stems whose final doubled consonant belongs to the base form.
constexpr std::string_view kKeepDouble[] = {"add", "odd", "err", "ebb", "purr", "egg", "inn"};

// Stems ending in "ll" that drop one l (controlled -> control).
constexpr std::string_view kDropDoubleL[] = {
    "controll", "patroll", "cancell", "modell", "labell", "travell", "signall",
    "levell", "fuell", "totall", "compell", "propell", "expell", "repell",
    "excell", "dispell", "rebell", "channell", "counsell", "equall",
};

// Stems that take a restored silent e even though the ending rules say no.
constexpr std::string_view kRestoreE[] = {
    "refus", "accus", "abus", "confus", "excus", "amus", "diffus", "fus", "infus",
    "invit", "unit", "recit", "incit", "ignit", "excit", "cit", "expedit",
    "explor", "stor", "restor", "ignor", "scor", "ador", "bor", "snor", "implor",
    "deplor", "phon", "zon", "clon", "hon", "aton", "condon", "postpon", "dron",
    "typ", "cop", "scop", "hop", "shap", "escap", "rop", "grop", "wip", "swip",
    "pip", "tap", "drap", "reshap", "tast", "wast", "hast", "past", "delet",
    "complet", "compet", "deplet", "quot", "scal", "inhal", "exhal", "interfer",
    "adher", "coher", "persever", "creat", "recreat", "procreat", "prob",
    "baptiz", "gaug", "us",
};

// Stems that must not take an e although the ending rules would add one.
constexpr std::string_view kNoRestoreE[] = {
    "focus", "bias", "pivot", "develop", "summon", "gallop", "envelop", "wallop",
    "gossip", "worship", "kidnap", "combat", "chat", "whisk", "belong", "hang",
    "long",
};

template <std::size_t N>
bool contains(const std::string_view (&list)[N], std::string_view s) {
  return std::find(std::begin(list), std::end(list), s) != std::end(list);
}

template <std::size_t N>
std::optional<std::string_view> lookup(const Pair (&table)[N], std::string_view s) {
  for (const auto& p : table)
    if (p.from == s) return p.to;
  return std::nullopt;
}

bool needs_silent_e(std::string_view stem) {
  if (contains(kRestoreE, stem)) return true;
  if (contains(kNoRestoreE, stem)) return false;
  const std::size_t n = stem.size();
  if (n < 2) return false;
  const char c = stem[n - 1];
  const char p = stem[n - 2];
  const char pp = n >= 3 ? stem[n - 3] : '\0';
  switch (c) {
    case 's':
      if (p == 's' || p == 'u') return false;
      return true;  // raise, increase, license, lapse
    case 'v':
    case 'c':
      return true;  // involve, produce
    case 'z':
      return p != 'z';  // analyze
    case 'g':
      if (p == 'd' || p == 'r' || p == 'l') return true;  // judge, charge
      if (p == 'n') return pp == 'a' || pp == 'e';         // change, challenge
      if ((p == 'a' || p == 'u') && n >= 4 && !is_vowel(pp)) return true;  // manage
      return false;
    case 't':
      if (p == 'a') {
        if (pp == 'o' || pp == 'e') return false;  // float, treat
        return true;                              // calculate
      }
      if (p == 'u') return pp != 'o';             // compute
      if (p == 'o') return is_consonant(pp);      // promote, vote
      return false;
    case 'r':
      if (p == 'i') return pp != 'a' && pp != 'o';  // require
      if (p == 'u') return pp != 'o';               // secure, insure
      if (p == 'a') return is_consonant(pp);        // declare, compare
      return false;
    case 'n':
      if (p == 'i') return is_consonant(pp);  // define, combine
      if (p == 'u') return is_consonant(pp);  // tune
      return false;
    case 'd':
      if (p == 'i' || p == 'u' || p == 'o') return is_consonant(pp);  // provide, include
      return false;
    case 'k':
      return (p == 'i' || p == 'o' || p == 'a' || p == 'u') && is_consonant(pp);  // like
    case 'l':
      if (is_consonant(p) && p != 'r' && p != 'l' && p != 'w' && p != 'n') return true;
      if (p == 'i' || p == 'u' || p == 'o') return is_consonant(pp);  // compile, schedule
      return false;
    case 'm':
      return is_vowel(p) && is_consonant(pp);  // name, assume
    case 'b':
      return p == 'i';  // describe
    default:
      return false;
  }
}

bool is_double_consonant_end(std::string_view stem) {
  const std::size_t n = stem.size();
  if (n < 3) return false;
  const char c = stem[n - 1];
  if (c != stem[n - 2]) return false;
  switch (c) {
    case 'b': case 'd': case 'g': case 'm': case 'n': case 'p': case 'r': case 't':
      return true;
    default:
      return false;
  }
}

// Restores a base form from a stem left after removing -ed or -ing.
std::string restore_stem(std::string stem) {
  if (contains(kDropDoubleL, stem)) {
    stem.pop_back();
    return stem;
  }
  if (is_double_consonant_end(stem) && !contains(kKeepDouble, stem)) {
    stem.pop_back();
    return stem;
  }
  if (needs_silent_e(stem)) stem += 'e';
  return stem;
}

std::string noun_step(const std::string& w) {
  if (auto irr = lookup(kIrregularPlurals, w)) return std::string(*irr);
  if (contains(kPluralInvariant, w)) return w;
  const std::size_t n = w.size();
  if (n <= 3) return w;
  if (w.ends_with("ss") || w.ends_with("us") || w.ends_with("is")) return w;
  if (w.ends_with("sses")) return w.substr(0, n - 2);
  if (w.ends_with("ies") && n > 4) return w.substr(0, n - 3) + "y";
  if (w.ends_with("xes") || w.ends_with("ches") || w.ends_with("shes") || w.ends_with("zzes"))
    return w.substr(0, n - 2);
  if (w.ends_with("s")) return w.substr(0, n - 1);
  return w;
}

bool known_verb(const std::string& w);

// Prefers a base form the open-class lexicon knows as a verb.
std::optional<std::string> known_base(const std::string& stem) {
  if (known_verb(stem)) return stem;
  if (known_verb(stem + "e")) return stem + "e";
  if (is_double_consonant_end(stem) && known_verb(stem.substr(0, stem.size() - 1)))
    return stem.substr(0, stem.size() - 1);
  return std::nullopt;
}

std::string verb_step(const std::string& w, PosTag tag) {
  const std::size_t n = w.size();
  switch (tag) {
    case PosTag::VB:
    case PosTag::VBP:
      if (auto irr = lookup(kIrregularPresent, w)) return std::string(*irr);
      return w;
    case PosTag::VBZ: {
      if (auto irr = lookup(kIrregularPresent, w)) return std::string(*irr);
      if (n <= 2) return w;
      if (w.ends_with("ss") || w.ends_with("us") || w.ends_with("is")) return w;
      if (w.ends_with("ies") && n > 4) return w.substr(0, n - 3) + "y";
      if (w.ends_with("sses") || w.ends_with("xes") || w.ends_with("ches") ||
          w.ends_with("shes") || w.ends_with("zzes") || w.ends_with("oes"))
        return w.substr(0, n - 2);
      if (w.ends_with("s")) return w.substr(0, n - 1);
      return w;
    }
    case PosTag::VBD:
    case PosTag::VBN: {
      if (auto irr = lookup(kIrregularPast, w)) return std::string(*irr);
      if (!w.ends_with("ed") || w.ends_with("eed")) return w;
      std::string stem = w.substr(0, n - 2);
      if (stem.size() < 2 || !has_vowel(stem)) return w;
      if (w.ends_with("ied") && n > 4) return w.substr(0, n - 3) + "y";
      if (auto base = known_base(stem)) return *base;
      return restore_stem(std::move(stem));
    }
    case PosTag::VBG: {
      if (auto irr = lookup(kIrregularGerund, w)) return std::string(*irr);
      if (!w.ends_with("ing")) return w;
      std::string stem = w.substr(0, n - 3);
      if (stem.size() < 2 || !has_vowel(stem)) return w;
      if (stem.ends_with("e") || stem.ends_with("y")) return stem;  // seeing, paying
      if (auto base = known_base(stem)) return *base;
      return restore_stem(std::move(stem));
    }
    default:
      return w;
  }
}

// ---------------------------------------------------------------------------
// Tagger lexicon

struct Lexicon {
  std::unordered_map<std::string, PosTag> closed;
  std::unordered_map<std::string, std::vector<PosTag>> open;
  std::unordered_set<std::string> modals;
};

const Lexicon& shipped_lexicon() {
  static const Lexicon lex = [] {
    Lexicon l;
    for (const auto& w : detail::closed_class_words())
      l.closed[std::string(w.word)] = *parse_tag(w.tag);
    for (const auto& w : detail::open_class_words()) {
      std::vector<PosTag> tags;
      for (const auto& t : text::split_whitespace(w.tags)) tags.push_back(*parse_tag(t));
      l.open[std::string(w.word)] = std::move(tags);
    }
    for (auto m : detail::modal_words()) l.modals.emplace(m);
    return l;
  }();
  return lex;
}

bool known_verb(const std::string& w) {
  const auto& open = shipped_lexicon().open;
  auto it = open.find(w);
  return it != open.end() && std::any_of(it->second.begin(), it->second.end(), is_verb);
}

bool is_auxiliary(std::string_view lw) {
  static const std::unordered_set<std::string_view> aux = {
      "be", "is", "are", "was", "were", "been", "being", "am",
      "has", "have", "had", "having", "get", "gets", "got"};
  return aux.contains(lw);
}

bool all_punct(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::ispunct(static_cast<unsigned char>(c)) != 0;
  });
}

bool looks_numeric(std::string_view s) {
  if (s.empty() || !std::any_of(s.begin(), s.end(), is_digit)) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return is_digit(c) || c == ',' || c == '.' || c == '%' || c == '-' || c == '/';
  });
}

struct Context {
  std::optional<PosTag> tag;  // nearest previous non-adverb tag
  std::string word;           // its lowercased surface
};

PosTag verb_form_for(const Context& ctx, const Lexicon& lex) {
  if (!ctx.tag) return PosTag::VB;
  if (*ctx.tag == PosTag::TO || lex.modals.contains(ctx.word)) return PosTag::VB;
  if (ctx.word == "do" || ctx.word == "does" || ctx.word == "did") return PosTag::VB;
  switch (*ctx.tag) {
    case PosTag::PRP:
    case PosTag::NNS:
    case PosTag::NNPS:
    case PosTag::NN:
    case PosTag::NNP:
      return PosTag::VBP;
    default:
      return PosTag::VB;
  }
}

PosTag past_form_for(const Context& ctx) {
  if (ctx.tag && is_auxiliary(ctx.word)) return PosTag::VBN;
  if (ctx.tag && (is_noun(*ctx.tag) || *ctx.tag == PosTag::PRP)) return PosTag::VBD;
  return PosTag::VBN;
}

bool prefers_noun(const Context& ctx) {
  if (!ctx.tag) return false;
  switch (*ctx.tag) {
    case PosTag::DT:
    case PosTag::JJ:
    case PosTag::IN:
    case PosTag::CD:
    case PosTag::NN:
    case PosTag::NNP:
      return true;
    default:
      return is_verb(*ctx.tag);
  }
}

PosTag resolve_open(const std::vector<PosTag>& tags, const Context& ctx, const Lexicon& lex) {
  auto has = [&](auto pred) { return std::any_of(tags.begin(), tags.end(), pred); };
  auto first_of = [&](auto pred) { return *std::find_if(tags.begin(), tags.end(), pred); };
  const bool noun = has(is_noun);
  const bool verb = has(is_verb);

  if (noun && verb) {
    if (prefers_noun(ctx)) return first_of(is_noun);
    if (ctx.tag) {
      PosTag v = first_of(is_verb);
      return v == PosTag::VB ? verb_form_for(ctx, lex) : v;
    }
    PosTag first = tags.front();
    return first == PosTag::VB ? verb_form_for(ctx, lex) : first;
  }
  PosTag first = tags.front();
  if (first == PosTag::VB) return verb_form_for(ctx, lex);
  if (has([](PosTag t) { return t == PosTag::VBD; }) &&
      has([](PosTag t) { return t == PosTag::VBN; }))
    return past_form_for(ctx);
  return first;
}

// -s forms: a noun reading when the stem is a known noun only, a verb reading
// when it's a known verb only, otherwise decided by the preceding tag.
PosTag resolve_s_form(const std::string& lw, const Context& ctx, const Lexicon& lex,
                      std::string_view next) {
  auto classify = [&](const std::string& stem) -> std::optional<std::vector<PosTag>> {
    if (auto it = lex.open.find(stem); it != lex.open.end()) return it->second;
    return std::nullopt;
  };
  auto noun_stem = classify(noun_step(lw));
  auto verb_stem = classify(verb_step(lw, PosTag::VBZ));
  const bool noun_known = noun_stem && std::any_of(noun_stem->begin(), noun_stem->end(), is_noun);
  const bool verb_known = verb_stem && std::any_of(verb_stem->begin(), verb_stem->end(), is_verb);
  const bool after_modifier = ctx.tag && (*ctx.tag == PosTag::DT || *ctx.tag == PosTag::JJ);
  // "... and pays the compensation": a verb stem directly before a determiner.
  if (verb_known && !after_modifier) {
    auto c = lex.closed.find(std::string(next));
    if (c != lex.closed.end() && c->second == PosTag::DT) return PosTag::VBZ;
  }
  if (noun_known && !verb_known) return PosTag::NNS;
  if (verb_known && !noun_known) {
    if (ctx.tag && (*ctx.tag == PosTag::DT || *ctx.tag == PosTag::JJ)) return PosTag::NNS;
    return PosTag::VBZ;
  }
  if (ctx.tag && (*ctx.tag == PosTag::NN || *ctx.tag == PosTag::NNP ||
                  (*ctx.tag == PosTag::PRP &&
                   (ctx.word == "he" || ctx.word == "she" || ctx.word == "it"))))
    return PosTag::VBZ;
  return PosTag::NNS;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(PosTag tag) { return kTagNames[static_cast<std::size_t>(tag)]; }

std::optional<PosTag> parse_tag(std::string_view name) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i)
    if (kTagNames[i] == name) return static_cast<PosTag>(i);
  return std::nullopt;
}

PosTag parse_penn_tag(std::string_view name) { return parse_tag(name).value_or(PosTag::OTHER); }

std::size_t token_count(const TaggedCorpus& corpus) {
  std::size_t n = 0;
  for (const auto& doc : corpus)
    for (const auto& s : doc.sentences) n += s.tokens.size();
  return n;
}

const std::vector<std::string>& default_abbreviations() {
  static const std::vector<std::string> abbrevs = {
      "e.g.", "i.e.", "mr.", "mrs.", "ms.", "dr.", "prof.", "etc.", "vs.", "inc.",
      "ltd.", "co.", "corp.", "st.", "no.", "jr.", "sr.", "approx.", "dept.", "fig."};
  return abbrevs;
}

std::vector<std::string> split_sentences(std::string_view text) {
  return split_sentences(text, default_abbreviations());
}

std::vector<std::string> split_sentences(std::string_view text,
                                         std::span<const std::string> abbreviations) {
  std::vector<std::string> out;
  std::size_t start = 0;
  const std::size_t n = text.size();

  auto emit = [&](std::size_t end) {
    std::string s = text::trim(text.substr(start, end - start));
    if (!s.empty()) out.push_back(std::move(s));
    start = end;
  };

  for (std::size_t i = 0; i < n; ++i) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    // Absorb runs like "?!" and closing quotes/brackets.
    std::size_t end = i + 1;
    while (end < n && (text[end] == '.' || text[end] == '!' || text[end] == '?' ||
                       text[end] == '"' || text[end] == '\'' || text[end] == ')'))
      ++end;
    std::size_t j = end;
    while (j < n && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const bool at_end = j == n;
    const bool boundary = at_end || (j > end && (is_upper(text[j]) || text[j] == '"'));
    if (!boundary) continue;
    if (c == '.') {
      std::size_t w = i;
      while (w > start && !std::isspace(static_cast<unsigned char>(text[w - 1]))) --w;
      const std::string word = text::to_lower(text.substr(w, i + 1 - w));
      if (std::find(abbreviations.begin(), abbreviations.end(), word) != abbreviations.end() &&
          !at_end)
        continue;
    }
    emit(end);
    i = end - 1;
  }
  if (start < n) emit(n);
  return out;
}

std::vector<std::string> tokenize(std::string_view sentence) {
  std::vector<std::string> out;
  for (const auto& chunk : text::split_whitespace(sentence)) {
    std::string_view w = chunk;
    std::vector<std::string> trailing;
    while (!w.empty() && is_split_punct(w.front())) {
      out.emplace_back(1, w.front());
      w.remove_prefix(1);
    }
    while (!w.empty() && is_split_punct(w.back())) {
      trailing.emplace_back(1, w.back());
      w.remove_suffix(1);
    }
    if (!w.empty()) {
      // Split clause punctuation glued to letters ("premium,and").
      std::size_t s = 0;
      for (std::size_t k = 0; k < w.size(); ++k) {
        const char c = w[k];
        if ((c == ',' || c == ';' || c == ':') && k > 0 && k + 1 < w.size() &&
            !(is_digit(w[k - 1]) && is_digit(w[k + 1]))) {
          if (k > s) out.emplace_back(w.substr(s, k - s));
          out.emplace_back(1, c);
          s = k + 1;
        }
      }
      if (s < w.size()) out.emplace_back(w.substr(s));
    }
    out.insert(out.end(), trailing.rbegin(), trailing.rend());
  }
  return out;
}

std::string lemmatize(std::string_view surface, PosTag tag) {
  std::string w = text::to_lower(surface);
  if (!w.empty() && !std::any_of(w.begin(), w.end(), is_alpha)) return w;
  auto step = [tag](const std::string& s) -> std::string {
    if (is_noun(tag)) return noun_step(s);
    if (is_verb(tag)) return verb_step(s, tag);
    return s;
  };
  for (int i = 0; i < 16; ++i) {
    std::string next = step(w);
    if (next == w || next.empty()) break;
    w = std::move(next);
  }
  return w;
}

// ---------------------------------------------------------------------------

Tagger::Tagger() { (void)shipped_lexicon(); }

void Tagger::extend_lexicon(std::span<const LexiconEntry> entries) {
  for (const auto& e : entries) {
    exact_[e.surface] = e.tag;
    folded_[text::to_lower(e.surface)] = e.tag;
  }
}

Tagger extend_lexicon(Tagger tagger, std::span<const LexiconEntry> entries) {
  tagger.extend_lexicon(entries);
  return tagger;
}

TaggedSentence Tagger::pos_tag(std::span<const std::string> tokens,
                               std::size_t sentence_index) const {
  const Lexicon& lex = shipped_lexicon();
  TaggedSentence out;
  out.tokens.reserve(tokens.size());
  Context ctx;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& w = tokens[i];
    const std::string lw = text::to_lower(w);
    PosTag tag = PosTag::NN;

    if (auto it = exact_.find(w); it != exact_.end()) {
      tag = it->second;
    } else if (auto it2 = folded_.find(lw); it2 != folded_.end()) {
      tag = it2->second;
    } else if (all_punct(w)) {
      tag = PosTag::OTHER;
    } else if (looks_numeric(w)) {
      tag = PosTag::CD;
    } else if (auto c = lex.closed.find(lw); c != lex.closed.end()) {
      tag = c->second;
    } else if (auto o = lex.open.find(lw); o != lex.open.end()) {
      tag = resolve_open(o->second, ctx, lex);
      // "is insured by": a participle reading after an auxiliary.
      if (!is_verb(tag) && lw.ends_with("ed") && ctx.tag && is_auxiliary(ctx.word) &&
          known_verb(verb_step(lw, PosTag::VBN)))
        tag = PosTag::VBN;
    } else if (i > 0 && is_upper(w.front())) {
      tag = PosTag::NNP;
    } else if (lw.size() > 4 && lw.ends_with("ing") && has_vowel(lw.substr(0, lw.size() - 3))) {
      tag = PosTag::VBG;
    } else if (lw.size() > 3 && lw.ends_with("ed")) {
      tag = past_form_for(ctx);
    } else if (lw.size() > 3 && lw.ends_with("ly")) {
      tag = PosTag::RB;
    } else if (lw.size() > 2 && lw.ends_with("s") && !lw.ends_with("ss") && !lw.ends_with("us") &&
               !lw.ends_with("is")) {
      tag = resolve_s_form(lw, ctx, lex, i + 1 < tokens.size() ? text::to_lower(tokens[i + 1]) : "");
    } else if (lw.size() > 5 && (lw.ends_with("ous") || lw.ends_with("ful") ||
                                 lw.ends_with("less") || lw.ends_with("able") ||
                                 lw.ends_with("ible") || lw.ends_with("ive"))) {
      tag = PosTag::JJ;
    }

    TaggedToken tok;
    tok.surface = w;
    tok.tag = tag;
    tok.lemma = lemmatize(w, tag);
    tok.sentence_index = sentence_index;
    tok.token_index = i;
    out.tokens.push_back(std::move(tok));

    if (tag != PosTag::RB) {
      ctx.tag = tag;
      ctx.word = lw;
    }
  }
  return out;
}

std::vector<TaggedSentence> Tagger::analyze(std::string_view text) const {
  std::vector<TaggedSentence> out;
  for (const auto& sentence : split_sentences(text)) {
    auto tokens = tokenize(sentence);
    if (tokens.empty()) continue;
    out.push_back(pos_tag(tokens, out.size()));
  }
  return out;
}

std::vector<LexiconEntry> parse_lexicon(std::string_view text) {
  std::vector<LexiconEntry> out;
  std::size_t line_no = 0;
  for (const auto& raw : text::split(text, '\n')) {
    ++line_no;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty() || text::trim(line).front() == '#') continue;
    auto cols = text::split(line, '\t');
    if (cols.size() != 2) throw ParseError("expected surface<TAB>TAG", line_no);
    auto tag = parse_tag(text::trim(cols[1]));
    if (!tag) throw ParseError("unknown tag '" + text::trim(cols[1]) + "'", line_no);
    std::string surface = text::trim(cols[0]);
    if (surface.empty()) throw ParseError("empty surface", line_no);
    out.push_back({std::move(surface), *tag});
  }
  return out;
}

std::vector<TaggedSentence> parse_pretagged(std::string_view text) {
  std::vector<TaggedSentence> out;
  std::size_t line_no = 0;
  for (const auto& line : text::split(text, '\n')) {
    ++line_no;
    auto items = text::split_whitespace(line);
    if (items.empty()) continue;
    TaggedSentence sentence;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto& item = items[i];
      const auto slash = item.rfind('/');
      if (slash == std::string::npos || slash == 0 || slash + 1 == item.size())
        throw ParseError("expected surface/TAG, got '" + item + "'", line_no);
      TaggedToken tok;
      tok.surface = item.substr(0, slash);
      tok.tag = parse_penn_tag(item.substr(slash + 1));
      tok.lemma = lemmatize(tok.surface, tok.tag);
      tok.sentence_index = out.size();
      tok.token_index = i;
      sentence.tokens.push_back(std::move(tok));
    }
    out.push_back(std::move(sentence));
  }
  return out;
}

}  // namespace ontoforge::nlp
