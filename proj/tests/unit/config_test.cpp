#include <gtest/gtest.h>

#include "ontoforge/config.hpp"
#include "ontoforge/error.hpp"
#include "ontoforge/text.hpp"
#include "test_support.hpp"

using namespace ontoforge;

TEST(Config, Defaults) {
  const config::PipelineConfig cfg;
  EXPECT_DOUBLE_EQ(cfg.static_theta, 0.00142);
  EXPECT_DOUBLE_EQ(cfg.sim_threshold, 0.95);
  EXPECT_EQ(cfg.window, 5u);
  EXPECT_EQ(cfg.separator, '#');
  EXPECT_EQ(cfg.max_distance, 2u);
  EXPECT_DOUBLE_EQ(cfg.decay, 0.5);
  EXPECT_DOUBLE_EQ(cfg.boost_factor, 1.5);
  EXPECT_EQ(cfg.max_chars, 90000u);
  EXPECT_NO_THROW(config::validate(cfg));
  EXPECT_EQ(config::listen_address(cfg), (std::pair<std::string, int>{"127.0.0.1", 7700}));
}

TEST(Config, KeyValueParsing) {
  const auto kv = config::parse_key_values("# comment\n\nwindow = 7\nbase_iri = \"http://x.org/a b\"\nwindow=9\n");
  EXPECT_EQ(kv.at("window"), "9");
  EXPECT_EQ(kv.at("base_iri"), "http://x.org/a b");
  try {
    config::parse_key_values("window = 1\n\njust words\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Config, SettingsAndDomains) {
  config::PipelineConfig cfg;
  config::apply_setting(cfg, "static_theta", "0.5");
  config::apply_setting(cfg, "separator", "|");
  config::apply_setting(cfg, "dev_mode", "true");
  EXPECT_DOUBLE_EQ(cfg.static_theta, 0.5);
  EXPECT_EQ(cfg.separator, '|');
  EXPECT_TRUE(cfg.dev_mode);
  EXPECT_THROW(config::apply_setting(cfg, "colour", "red"), InvalidInput);
  EXPECT_THROW(config::apply_setting(cfg, "window", "-3"), InvalidInput);
  EXPECT_THROW(config::apply_setting(cfg, "decay", "half"), InvalidInput);
  EXPECT_THROW(config::apply_setting(cfg, "separator", "##"), InvalidInput);

  auto bad = [](const char* key, const char* value) {
    config::PipelineConfig c;
    config::apply_setting(c, key, value);
    return c;
  };
  EXPECT_THROW(config::validate(bad("decay", "1")), InvalidInput);
  EXPECT_THROW(config::validate(bad("decay", "0")), InvalidInput);
  EXPECT_THROW(config::validate(bad("boost_factor", "1")), InvalidInput);
  EXPECT_THROW(config::validate(bad("max_distance", "0")), InvalidInput);
  EXPECT_THROW(config::validate(bad("sim_threshold", "1.5")), InvalidInput);
  EXPECT_THROW(config::validate(bad("separator", " ")), InvalidInput);
  EXPECT_THROW(config::listen_address(bad("listen", "nohost")), InvalidInput);
  EXPECT_THROW(config::listen_address(bad("listen", "h:70000")), InvalidInput);
}

TEST(Config, FileRelativePaths) {
  fixtures::TempDir dir;
  std::filesystem::create_directories(dir / "conf");
  text::write_file(dir / "conf" / "ontoforge.conf",
                   "corpus_dir = ../corpus\nwork_dir = out\nwordnet_dir = /abs/wn\ndecay = 0.25\n");
  const auto cfg = config::load_config(dir / "conf" / "ontoforge.conf");
  EXPECT_EQ(cfg.corpus_dir.lexically_normal(), (dir / "corpus").lexically_normal());
  EXPECT_EQ(cfg.work_dir, dir / "conf" / "out");
  EXPECT_EQ(cfg.wordnet_dir, "/abs/wn");
  EXPECT_DOUBLE_EQ(cfg.decay, 0.25);
  EXPECT_EQ(cfg.pom_path(), dir / "conf" / "out" / "pom.json");

  text::write_file(dir / "bad.conf", "decay = 2\n");
  EXPECT_THROW(config::load_config(dir / "bad.conf"), InvalidInput);
  EXPECT_THROW(config::load_config(dir / "missing.conf"), IoError);
}
