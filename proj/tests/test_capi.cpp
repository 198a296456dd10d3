#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "crowsim/crowsim.h"

TEST_CASE("version and preset listing") {
  CHECK(std::string(crowsim_version()) == "0.1.0");
  std::string names = crowsim_preset_names();
  CHECK(names.find("fig2") != std::string::npos);
  CHECK(names.find("fig5") != std::string::npos);
}

TEST_CASE("preset load, run, write") {
  crowsim_config* cfg = nullptr;
  REQUIRE(crowsim_config_preset("fig2", &cfg) == CROWSIM_OK);
  REQUIRE(cfg != nullptr);
  CHECK(crowsim_config_set(cfg, "time.points", "64") == CROWSIM_OK);
  CHECK(crowsim_config_set(cfg, "output.timestamp", "false") == CROWSIM_OK);

  crowsim_result* res = nullptr;
  REQUIRE(crowsim_run(cfg, &res) == CROWSIM_OK);
  REQUIRE(res != nullptr);

  std::string summary = crowsim_result_summary(res);
  CHECK(summary.find("cavity 0") != std::string::npos);
  CHECK(summary.find("pair (0,1)") != std::string::npos);

  const char* path = "/tmp/crowsim_capi_out.csv";
  CHECK(crowsim_result_write(res, path, "csv") == CROWSIM_OK);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("t_raw,t_scaled,", 0) == 0);
  std::remove(path);

  const char* jpath = "/tmp/crowsim_capi_out.json";
  CHECK(crowsim_result_write(res, jpath, "json") == CROWSIM_OK);
  std::remove(jpath);

  crowsim_result_free(res);
  crowsim_config_free(cfg);
}

TEST_CASE("error reporting") {
  crowsim_config* cfg = nullptr;

  SUBCASE("unknown preset") {
    CHECK(crowsim_config_preset("fig99", &cfg) == CROWSIM_ERR_CONFIG);
    CHECK(cfg == nullptr);
    CHECK(std::string(crowsim_last_error()).find("fig99") != std::string::npos);
  }

  SUBCASE("missing config file") {
    CHECK(crowsim_config_load("/no/such/file.ini", &cfg) == CROWSIM_ERR_CONFIG);
  }

  SUBCASE("invalid override") {
    REQUIRE(crowsim_config_preset("fig2", &cfg) == CROWSIM_OK);
    CHECK(crowsim_config_set(cfg, "state.u", "banana") == CROWSIM_ERR_CONFIG);
    CHECK(crowsim_config_set(cfg, "no.such.key", "1") == CROWSIM_ERR_CONFIG);
    CHECK(std::string(crowsim_last_error()).find("no.such.key") != std::string::npos);
    crowsim_config_free(cfg);
  }

  SUBCASE("unwritable output path") {
    REQUIRE(crowsim_config_preset("fig2", &cfg) == CROWSIM_OK);
    REQUIRE(crowsim_config_set(cfg, "time.points", "8") == CROWSIM_OK);
    crowsim_result* res = nullptr;
    REQUIRE(crowsim_run(cfg, &res) == CROWSIM_OK);
    CHECK(crowsim_result_write(res, "/nonexistent_dir/out.csv", nullptr) == CROWSIM_ERR_IO);
    CHECK(std::string(crowsim_last_error()).find("nonexistent_dir") != std::string::npos);
    crowsim_result_free(res);
    crowsim_config_free(cfg);
  }

  SUBCASE("null arguments") {
    CHECK(crowsim_config_load(nullptr, &cfg) == CROWSIM_ERR_CONFIG);
    CHECK(crowsim_run(nullptr, nullptr) == CROWSIM_ERR_CONFIG);
    CHECK(crowsim_result_write(nullptr, "x", "csv") == CROWSIM_ERR_IO);
  }
}

TEST_CASE("successful call clears the error message") {
  crowsim_config* cfg = nullptr;
  CHECK(crowsim_config_preset("fig99", &cfg) == CROWSIM_ERR_CONFIG);
  CHECK(std::string(crowsim_last_error()).size() > 0);
  REQUIRE(crowsim_config_preset("fig3", &cfg) == CROWSIM_OK);
  CHECK(std::string(crowsim_last_error()).empty());
  crowsim_config_free(cfg);
}
