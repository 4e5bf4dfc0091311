#include <gtest/gtest.h>

#include <thread>

#include <httplib.h>

#include "ontoforge/error.hpp"
#include "ontoforge/ingest.hpp"
#include "ontoforge/nlp.hpp"
#include "ontoforge/text.hpp"
#include "test_support.hpp"

using namespace ontoforge;

TEST(StripMarkup, RemovesTagsScriptsAndEntities) {
  ingest::RawDocument doc{"page.html",
                          "<html><head><style>p{}</style><script>var x = '<p>';</script></head>"
                          "<body><h1>Motor&nbsp;cover</h1><p>The premium &amp; the <b>excess</b>.</p>"
                          "<!-- hidden --><p>&#73;DV</p></body></html>",
                          ingest::MediaHint::html};
  const std::string out = ingest::strip_markup(doc);
  EXPECT_EQ(out.find('<'), std::string::npos);
  EXPECT_EQ(out.find("var x"), std::string::npos);
  EXPECT_EQ(out.find("hidden"), std::string::npos);
  EXPECT_NE(out.find("Motor cover"), std::string::npos);
  EXPECT_NE(out.find("The premium & the excess."), std::string::npos);
  EXPECT_NE(out.find("IDV"), std::string::npos);
}

TEST(StripMarkup, PlainTextCollapsesWhitespace) {
  ingest::RawDocument doc{"a.txt", "  one   two\n\n\nthree\t four ", ingest::MediaHint::plain};
  EXPECT_EQ(ingest::strip_markup(doc), "one two\nthree four");
}

TEST(StripMarkup, Idempotent) {
  ingest::RawDocument doc{"p.html", "<p>A  car</p>\n<p>is a <i>vehicle</i></p>", ingest::MediaHint::html};
  const std::string once = ingest::strip_markup(doc);
  const std::string twice = ingest::strip_markup({"p", once, ingest::MediaHint::plain});
  EXPECT_EQ(once, twice);
}

TEST(Corpus, AddDocumentCountsTokens) {
  auto corpus = ingest::add_document({}, "one two three", "d1");
  EXPECT_EQ(corpus.total_tokens(), 3u);
  EXPECT_EQ(corpus.total_chars(), 13u);
  EXPECT_THROW(corpus.add_document("again", "d1"), InvalidInput);
}

TEST(Corpus, TotalsEqualSumOfDocuments) {
  ingest::Corpus corpus;
  corpus.add_document("If you raise the IDV, the premium rises.", "a");
  corpus.add_document("A car is a vehicle. The excess applies!", "b");
  std::size_t chars = 0, tokens = 0;
  for (const auto& d : corpus.documents()) {
    chars += d.char_count;
    tokens += d.token_count;
    EXPECT_EQ(d.token_count, ingest::count_tokens(d.text));
  }
  EXPECT_EQ(corpus.total_chars(), chars);
  EXPECT_EQ(corpus.total_tokens(), tokens);
  EXPECT_EQ(corpus.documents()[0].token_count, 10u);
}

TEST(Corpus, BudgetCheck) {
  auto corpus = ingest::add_document({}, std::string(100, 'x'), "d");
  EXPECT_TRUE(ingest::corpus_budget_check(corpus, 100).within_budget);
  EXPECT_FALSE(ingest::corpus_budget_check(corpus, 99).within_budget);
  EXPECT_THROW(ingest::corpus_budget_check(corpus, 0), InvalidInput);
}

TEST(Corpus, SaveLoadRoundTrip) {
  fixtures::TempDir dir;
  ingest::Corpus corpus;
  corpus.add_document("The premium rises.", ingest::make_doc_id("http://x.org/Premium Page.html", corpus), "u1");
  corpus.add_document("The premium falls.", ingest::make_doc_id("http://x.org/Premium Page.html", corpus), "u2");
  ingest::save_corpus(corpus, dir.path());
  const auto loaded = ingest::load_corpus(dir.path());
  ASSERT_EQ(loaded.documents().size(), 2u);
  EXPECT_NE(loaded.documents()[0].doc_id, loaded.documents()[1].doc_id);
  EXPECT_EQ(loaded.documents()[1].text, "The premium falls.");
  EXPECT_EQ(loaded.total_tokens(), corpus.total_tokens());
}

TEST(Corpus, DocIdsAreFilesystemSafe) {
  ingest::Corpus corpus;
  const std::string id = ingest::make_doc_id("https://example.com/a/b/Motor Cover?x=1", corpus);
  EXPECT_FALSE(id.empty());
  for (char c : id) EXPECT_TRUE(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') << id;
}

TEST(SourceList, SkipsCommentsAndBlanks) {
  EXPECT_EQ(ingest::parse_source_list("# seeds\n\na.txt\n  http://x/y \n"),
            (std::vector<std::string>{"a.txt", "http://x/y"}));
}

TEST(Fetch, AllSourcesFailingThrows) {
  EXPECT_THROW(ingest::fetch_documents({"/nonexistent/ontoforge/file.txt"}), IoError);
}

TEST(Fetch, MixedSourcesAgainstStubServer) {
  httplib::Server server;
  server.Get("/page.html", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("<p>The insurer pays the claim.</p>", "text/html");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread t([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  fixtures::TempDir dir;
  text::write_file(dir / "local.txt", "A car is a vehicle.");
  const std::string base = "http://127.0.0.1:" + std::to_string(port);
  const auto result = ingest::fetch_documents(
      {base + "/page.html", base + "/missing", (dir / "local.txt").string(), "http://127.0.0.1:1/unreachable"});
  server.stop();
  t.join();

  ASSERT_EQ(result.documents.size(), 2u);
  EXPECT_EQ(result.documents[0].media_hint, ingest::MediaHint::html);
  EXPECT_EQ(ingest::strip_markup(result.documents[0]), "The insurer pays the claim.\n");
  EXPECT_EQ(result.documents[1].bytes, "A car is a vehicle.");
  ASSERT_EQ(result.errors.size(), 2u);
  EXPECT_EQ(result.errors[0].source_id, base + "/missing");
  EXPECT_EQ(result.errors[1].source_id, "http://127.0.0.1:1/unreachable");
}
