#include "lexicon_data.hpp"

#include <array>

namespace ontoforge::nlp::detail {

namespace {

constexpr ClosedWord kClosed[] = {
    // determiners, possessive determiners folded in
    {"the", "DT"}, {"a", "DT"}, {"an", "DT"}, {"this", "DT"}, {"that", "DT"},
    {"these", "DT"}, {"those", "DT"}, {"every", "DT"}, {"each", "DT"}, {"any", "DT"},
    {"some", "DT"}, {"no", "DT"}, {"all", "DT"}, {"both", "DT"}, {"either", "DT"},
    {"neither", "DT"}, {"another", "DT"}, {"my", "DT"}, {"your", "DT"}, {"his", "DT"},
    {"her", "DT"}, {"its", "DT"}, {"our", "DT"}, {"their", "DT"}, {"such", "DT"},
    {"many", "DT"}, {"several", "DT"}, {"most", "DT"}, {"few", "DT"}, {"whose", "DT"},
    // prepositions and subordinating conjunctions
    {"of", "IN"}, {"in", "IN"}, {"on", "IN"}, {"at", "IN"}, {"by", "IN"}, {"for", "IN"},
    {"with", "IN"}, {"from", "IN"}, {"into", "IN"}, {"onto", "IN"}, {"about", "IN"},
    {"against", "IN"}, {"between", "IN"}, {"through", "IN"}, {"throughout", "IN"},
    {"during", "IN"}, {"before", "IN"}, {"after", "IN"}, {"above", "IN"}, {"below", "IN"},
    {"under", "IN"}, {"over", "IN"}, {"without", "IN"}, {"within", "IN"}, {"upon", "IN"},
    {"via", "IN"}, {"per", "IN"}, {"among", "IN"}, {"across", "IN"}, {"if", "IN"},
    {"because", "IN"}, {"while", "IN"}, {"although", "IN"}, {"though", "IN"},
    {"unless", "IN"}, {"whether", "IN"}, {"since", "IN"}, {"as", "IN"}, {"than", "IN"},
    {"until", "IN"}, {"towards", "IN"}, {"toward", "IN"}, {"beyond", "IN"},
    {"despite", "IN"}, {"except", "IN"}, {"including", "IN"}, {"regarding", "IN"},
    {"whereas", "IN"}, {"around", "IN"}, {"behind", "IN"}, {"along", "IN"},
    // pronouns
    {"i", "PRP"}, {"you", "PRP"}, {"he", "PRP"}, {"she", "PRP"}, {"it", "PRP"},
    {"we", "PRP"}, {"they", "PRP"}, {"me", "PRP"}, {"him", "PRP"}, {"us", "PRP"},
    {"them", "PRP"}, {"myself", "PRP"}, {"yourself", "PRP"}, {"itself", "PRP"},
    {"himself", "PRP"}, {"herself", "PRP"}, {"themselves", "PRP"}, {"ourselves", "PRP"},
    // coordinating conjunctions
    {"and", "CC"}, {"or", "CC"}, {"but", "CC"}, {"nor", "CC"}, {"plus", "CC"},
    {"to", "TO"},
    // modals and wh-words have no tag of their own
    {"can", "OTHER"}, {"could", "OTHER"}, {"may", "OTHER"}, {"might", "OTHER"},
    {"must", "OTHER"}, {"shall", "OTHER"}, {"should", "OTHER"}, {"will", "OTHER"},
    {"would", "OTHER"}, {"which", "OTHER"}, {"who", "OTHER"}, {"whom", "OTHER"},
    {"what", "OTHER"}, {"where", "OTHER"}, {"when", "OTHER"}, {"why", "OTHER"},
    {"how", "OTHER"}, {"there", "OTHER"},
    // frequent adverbs
    {"not", "RB"}, {"also", "RB"}, {"very", "RB"}, {"only", "RB"}, {"often", "RB"},
    {"always", "RB"}, {"never", "RB"}, {"usually", "RB"}, {"however", "RB"}, {"then", "RB"},
    {"here", "RB"}, {"too", "RB"}, {"so", "RB"}, {"even", "RB"}, {"still", "RB"},
    {"already", "RB"}, {"soon", "RB"}, {"again", "RB"}, {"almost", "RB"}, {"just", "RB"},
    {"perhaps", "RB"}, {"therefore", "RB"}, {"thus", "RB"}, {"instead", "RB"},
    {"otherwise", "RB"}, {"sometimes", "RB"}, {"together", "RB"}, {"rather", "RB"},
    {"quite", "RB"}, {"now", "RB"}, {"once", "RB"}, {"far", "RB"}, {"away", "RB"},
    {"less", "RB"}, {"more", "RB"}, {"yet", "RB"}, {"ever", "RB"}, {"else", "RB"},
};

constexpr OpenWord kOpen[] = {
    // auxiliaries
    {"be", "VB"}, {"am", "VBP"}, {"is", "VBZ"}, {"are", "VBP"}, {"was", "VBD"},
    {"were", "VBD"}, {"been", "VBN"}, {"being", "VBG"},
    {"have", "VB"}, {"has", "VBZ"}, {"had", "VBD VBN"}, {"having", "VBG"},
    {"do", "VB"}, {"does", "VBZ"}, {"did", "VBD"}, {"done", "VBN"},
    // irregular past forms
    {"made", "VBD VBN"}, {"paid", "VBD VBN"}, {"said", "VBD VBN"}, {"went", "VBD"},
    {"gone", "VBN"}, {"took", "VBD"}, {"taken", "VBN"}, {"gave", "VBD"}, {"given", "VBN"},
    {"got", "VBD VBN"}, {"rose", "VBD"}, {"risen", "VBN"}, {"chose", "VBD"},
    {"chosen", "VBN"}, {"wrote", "VBD"}, {"written", "VBN"}, {"bought", "VBD VBN"},
    {"sold", "VBD VBN"}, {"told", "VBD VBN"}, {"found", "VBD VBN"}, {"kept", "VBD VBN"},
    {"left", "VBD VBN"}, {"meant", "VBD VBN"}, {"brought", "VBD VBN"},
    {"thought", "VBD VBN"}, {"held", "VBD VBN"}, {"ran", "VBD"}, {"began", "VBD"},
    {"begun", "VBN"}, {"became", "VBD"}, {"came", "VBD"}, {"saw", "VBD"}, {"seen", "VBN"},
    {"knew", "VBD"}, {"known", "VBN"}, {"grew", "VBD"}, {"grown", "VBN"}, {"fell", "VBD"},
    {"fallen", "VBN"}, {"spent", "VBD VBN"}, {"sent", "VBD VBN"}, {"built", "VBD VBN"},
    {"lost", "VBD VBN"}, {"met", "VBD VBN"}, {"led", "VBD VBN"}, {"drove", "VBD"},
    {"driven", "VBN"}, {"broke", "VBD"}, {"broken", "VBN"}, {"stolen", "VBN"},
    {"stole", "VBD"}, {"understood", "VBD VBN"}, {"felt", "VBD VBN"}, {"heard", "VBD VBN"},
    {"shown", "VBN"}, {"arose", "VBD"}, {"arisen", "VBN"}, {"undertaken", "VBN"},
    {"withdrawn", "VBN"}, {"borne", "VBN"}, {"bound", "VBN"}, {"sought", "VBD VBN"},
    {"taught", "VBD VBN"}, {"caught", "VBD VBN"}, {"won", "VBD VBN"}, {"struck", "VBD VBN"},
    {"worn", "VBN"},
    // verbs, base forms
    {"raise", "VB NN"}, {"rise", "VB NN"}, {"make", "VB"}, {"cover", "VB NN"},
    {"pay", "VB NN"}, {"insure", "VB"}, {"protect", "VB"}, {"provide", "VB"},
    {"include", "VB"}, {"offer", "VB NN"}, {"require", "VB"}, {"reduce", "VB"},
    {"increase", "VB NN"}, {"decrease", "VB NN"}, {"charge", "VB NN"}, {"apply", "VB"},
    {"file", "VB NN"}, {"claim", "NN VB"}, {"compensate", "VB"}, {"reimburse", "VB"},
    {"assess", "VB"}, {"calculate", "VB"}, {"determine", "VB"}, {"depend", "VB"},
    {"affect", "VB"}, {"buy", "VB"}, {"sell", "VB"}, {"renew", "VB"}, {"cancel", "VB"},
    {"choose", "VB"}, {"select", "VB"}, {"receive", "VB"}, {"settle", "VB"},
    {"exclude", "VB"}, {"extend", "VB"}, {"limit", "VB NN"}, {"damage", "NN VB"},
    {"repair", "VB NN"}, {"replace", "VB"}, {"drive", "VB NN"}, {"own", "VB JJ"},
    {"use", "VB NN"}, {"need", "VB NN"}, {"want", "VB"}, {"help", "VB NN"},
    {"allow", "VB"}, {"give", "VB"}, {"take", "VB"}, {"get", "VB"}, {"go", "VB"},
    {"know", "VB"}, {"see", "VB"}, {"find", "VB"}, {"keep", "VB"}, {"lose", "VB"},
    {"suffer", "VB"}, {"cause", "VB NN"}, {"lead", "VB"}, {"result", "NN VB"},
    {"cost", "NN VB"}, {"save", "VB"}, {"spend", "VB"}, {"estimate", "VB NN"},
    {"report", "NN VB"}, {"contact", "VB NN"}, {"inform", "VB"}, {"notify", "VB"},
    {"submit", "VB"}, {"approve", "VB"}, {"reject", "VB"}, {"accept", "VB"},
    {"verify", "VB"}, {"check", "VB NN"}, {"compare", "VB"}, {"review", "NN VB"},
    {"manage", "VB"}, {"handle", "VB"}, {"process", "NN VB"}, {"store", "VB NN"},
    {"run", "VB NN"}, {"install", "VB"}, {"execute", "VB"}, {"deploy", "VB"},
    {"develop", "VB"}, {"design", "NN VB"}, {"test", "NN VB"}, {"build", "VB"},
    {"support", "NN VB"}, {"implement", "VB"}, {"update", "NN VB"}, {"upgrade", "NN VB"},
    {"compile", "VB"}, {"debug", "VB"}, {"call", "VB NN"}, {"return", "VB NN"},
    {"contain", "VB"}, {"define", "VB"}, {"describe", "VB"}, {"represent", "VB"},
    {"consider", "VB"}, {"analyze", "VB"}, {"analyse", "VB"}, {"mean", "VB"},
    {"become", "VB"}, {"remain", "VB"}, {"seem", "VB"}, {"appear", "VB"},
    {"occur", "VB"}, {"happen", "VB"}, {"exist", "VB"}, {"differ", "VB"},
    {"say", "VB"}, {"tell", "VB"}, {"ask", "VB"}, {"show", "VB NN"}, {"explain", "VB"},
    {"follow", "VB"}, {"begin", "VB"}, {"start", "VB NN"}, {"stop", "VB"},
    {"continue", "VB"}, {"change", "NN VB"}, {"improve", "VB"}, {"create", "VB"},
    {"add", "VB"}, {"remove", "VB"}, {"enable", "VB"}, {"prevent", "VB"},
    {"avoid", "VB"}, {"ensure", "VB"}, {"recommend", "VB"}, {"encourage", "VB"},
    {"benefit", "NN VB"}, {"depreciate", "VB"}, {"exceed", "VB"}, {"fall", "VB NN"},
    {"deduct", "VB"}, {"purchase", "NN VB"}, {"transfer", "NN VB"}, {"lend", "VB"},
    {"borrow", "VB"}, {"invest", "VB"}, {"earn", "VB"}, {"owe", "VB"}, {"sign", "VB NN"},
    {"agree", "VB"}, {"hold", "VB"}, {"work", "VB NN"}, {"move", "VB NN"},
    {"arrive", "VB"}, {"travel", "VB NN"}, {"injure", "VB"}, {"steal", "VB"},
    {"crash", "NN VB"}, {"hit", "VB NN"}, {"park", "VB NN"}, {"read", "VB"},
    {"write", "VB"}, {"send", "VB"}, {"look", "VB NN"}, {"like", "IN VB"},
    {"rate", "NN VB"}, {"price", "NN VB"}, {"quote", "NN VB"}, {"list", "NN VB"},
    {"plan", "NN VB"}, {"schedule", "NN VB"}, {"request", "NN VB"}, {"respond", "VB"},
    {"develop", "VB"}, {"maintain", "VB"}, {"measure", "VB NN"}, {"vary", "VB"},
    {"matter", "NN VB"}, {"register", "VB NN"}, {"underwrite", "VB"},
    // nouns that the suffix rules would otherwise misread
    {"insurance", "NN"}, {"policy", "NN"}, {"premium", "NN"}, {"vehicle", "NN"},
    {"person", "NN"}, {"incident", "NN"}, {"excess", "NN"}, {"someone", "NN"},
    {"somebody", "NN"}, {"anyone", "NN"}, {"everyone", "NN"}, {"something", "NN"},
    {"nothing", "NN"}, {"anything", "NN"}, {"everything", "NN"}, {"accident", "NN"},
    {"driver", "NN"}, {"car", "NN"}, {"insurer", "NN"}, {"insured", "NN JJ"},
    {"policyholder", "NN"}, {"coverage", "NN"}, {"deductible", "NN"}, {"loss", "NN"},
    {"theft", "NN"}, {"fire", "NN"}, {"flood", "NN"}, {"property", "NN"},
    {"liability", "NN"}, {"company", "NN"}, {"customer", "NN"}, {"agent", "NN"},
    {"broker", "NN"}, {"contract", "NN"}, {"value", "NN"}, {"amount", "NN"},
    {"money", "NN"}, {"year", "NN"}, {"month", "NN"}, {"day", "NN"}, {"time", "NN"},
    {"risk", "NN"}, {"business", "NN"}, {"family", "NN"}, {"health", "NN"},
    {"life", "NN"}, {"home", "NN"}, {"house", "NN"}, {"building", "NN"},
    {"motor", "NN"}, {"idv", "NN"}, {"bonus", "NN"}, {"discount", "NN"},
    {"difference", "NN"}, {"lot", "NN"}, {"party", "NN"}, {"third", "JJ"},
    {"software", "NN"}, {"program", "NN"}, {"computer", "NN"}, {"system", "NN"},
    {"user", "NN"}, {"data", "NN"}, {"code", "NN"}, {"application", "NN"},
    {"server", "NN"}, {"database", "NN"}, {"network", "NN"}, {"interface", "NN"},
    {"module", "NN"}, {"component", "NN"}, {"version", "NN"}, {"developer", "NN"},
    {"programming", "NN"}, {"engineering", "NN"}, {"testing", "NN"}, {"training", "NN"},
    {"underwriting", "NN"}, {"pricing", "NN"}, {"marketing", "NN"}, {"morning", "NN"},
    {"evening", "NN"}, {"ceiling", "NN"}, {"thing", "NN"}, {"king", "NN"},
    {"ring", "NN"}, {"string", "NN"}, {"spring", "NN"}, {"news", "NN"},
    {"series", "NN"}, {"species", "NN"}, {"means", "NN"}, {"status", "NN"},
    {"analysis", "NN"}, {"basis", "NN"}, {"crisis", "NN"}, {"bus", "NN"},
    {"gas", "NN"}, {"lens", "NN"}, {"apply", "VB"}, {"supply", "NN VB"},
    {"family", "NN"}, {"reply", "NN VB"}, {"ally", "NN"}, {"rally", "NN"},
    {"assembly", "NN"}, {"italy", "NNP"}, {"july", "NNP"}, {"anomaly", "NN"},
    {"monopoly", "NN"}, {"belly", "NN"}, {"jelly", "NN"}, {"bully", "NN"},
    {"holly", "NN"}, {"lily", "NN"}, {"folly", "NN"}, {"bodily", "JJ"},
    {"fee", "NN"}, {"tax", "NN"}, {"law", "NN"}, {"rule", "NN"}, {"state", "NN"},
    {"market", "NN"}, {"industry", "NN"}, {"product", "NN"}, {"service", "NN"},
    {"example", "NN"}, {"case", "NN"}, {"way", "NN"}, {"part", "NN"}, {"number", "NN"},
    {"type", "NN"}, {"kind", "NN"}, {"form", "NN"}, {"option", "NN"},
    // adjectives
    {"whole", "JJ"}, {"high", "JJ"}, {"higher", "JJ"}, {"highest", "JJ"}, {"low", "JJ"},
    {"lower", "JJ"}, {"lowest", "JJ"}, {"new", "JJ"}, {"old", "JJ"}, {"good", "JJ"},
    {"better", "JJ"}, {"best", "JJ"}, {"bad", "JJ"}, {"worse", "JJ"}, {"large", "JJ"},
    {"small", "JJ"}, {"big", "JJ"}, {"little", "JJ"}, {"other", "JJ"}, {"same", "JJ"},
    {"different", "JJ"}, {"important", "JJ"}, {"possible", "JJ"}, {"full", "JJ"},
    {"comprehensive", "JJ"}, {"annual", "JJ"}, {"monthly", "JJ"}, {"total", "JJ"},
    {"personal", "JJ"}, {"commercial", "JJ"}, {"private", "JJ"}, {"public", "JJ"},
    {"financial", "JJ"}, {"legal", "JJ"}, {"medical", "JJ"}, {"natural", "JJ"},
    {"additional", "JJ"}, {"optional", "JJ"}, {"mandatory", "JJ"}, {"voluntary", "JJ"},
    {"current", "JJ"}, {"previous", "JJ"}, {"next", "JJ"}, {"last", "JJ"},
    {"first", "JJ"}, {"second", "JJ"}, {"major", "JJ"}, {"minor", "JJ"},
    {"specific", "JJ"}, {"general", "JJ"}, {"common", "JJ"}, {"certain", "JJ"},
    {"available", "JJ"}, {"responsible", "JJ"}, {"eligible", "JJ"}, {"liable", "JJ"},
    {"expensive", "JJ"}, {"cheap", "JJ"}, {"safe", "JJ"}, {"fair", "JJ"},
    {"accidental", "JJ"}, {"mechanical", "JJ"}, {"electrical", "JJ"}, {"digital", "JJ"},
    {"open", "JJ VB"}, {"free", "JJ"}, {"clear", "JJ VB"}, {"simple", "JJ"},
    {"easy", "JJ"}, {"main", "JJ"}, {"real", "JJ"}, {"key", "JJ NN"}, {"early", "JJ"},
    {"daily", "JJ"}, {"likely", "JJ"}, {"only", "RB"}, {"able", "JJ"}, {"due", "JJ"},
    {"necessary", "JJ"}, {"standard", "JJ NN"}, {"basic", "JJ"}, {"typical", "JJ"},
    {"entire", "JJ"}, {"various", "JJ"}, {"reliable", "JJ"}, {"secure", "JJ VB"},
    {"modern", "JJ"}, {"distributed", "JJ"}, {"serious", "JJ"},
};

constexpr std::string_view kModals[] = {"can", "could", "may", "might", "must",
                                        "shall", "should", "will", "would"};

}  // namespace

std::span<const ClosedWord> closed_class_words() { return kClosed; }
std::span<const OpenWord> open_class_words() { return kOpen; }
std::span<const std::string_view> modal_words() { return kModals; }

}  // namespace ontoforge::nlp::detail
