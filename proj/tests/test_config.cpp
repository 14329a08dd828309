#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aerosim/config.hpp"
#include "aerosim/errors.hpp"
#include "aerosim/scenario.hpp"

using namespace aerosim;
using config::ConfigDocument;

TEST_CASE("parses key=value with sections, comments and blanks") {
    const auto doc = ConfigDocument::parse(
        "# comment\n"
        "tdma.slot_duration_s = 0.01\n"
        "\n"
        "name=plain\n"
        "list = 1, 2.5, 3\n");
    CHECK(doc.get_double("tdma.slot_duration_s") == 0.01);
    CHECK(doc.get_string("name") == "plain");
    CHECK(doc.get_double_list("list") == std::vector<double>{1.0, 2.5, 3.0});
    doc.reject_unknown();
}

TEST_CASE("unknown keys are rejected with their line numbers") {
    const auto doc = ConfigDocument::parse("known = 1\ntypo_key = 2\n", "cfg");
    CHECK(doc.get_int("known") == 1);
    CHECK_THROWS_WITH_AS(doc.reject_unknown(), doctest::Contains("typo_key"), ConfigError);
    CHECK_THROWS_WITH_AS(doc.reject_unknown(), doctest::Contains("line 2"), ConfigError);
}

TEST_CASE("missing required key names the key") {
    const auto doc = ConfigDocument::parse("a = 1\n");
    CHECK_THROWS_WITH_AS(doc.get_string("missing"), doctest::Contains("missing"), ConfigError);
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(ConfigDocument::parse("no equals sign\n"), FormatError);
    CHECK_THROWS_AS(ConfigDocument::parse("= value\n"), FormatError);
    CHECK_THROWS_AS(ConfigDocument::parse("a=1\na=2\n"), FormatError); // duplicate
    const auto doc = ConfigDocument::parse("x = abc\n");
    CHECK_THROWS_AS(doc.get_double("x"), ConfigError);
    CHECK_THROWS_AS(doc.get_int("x"), ConfigError);
}

TEST_CASE("defaults apply when keys are absent") {
    const auto doc = ConfigDocument::parse("");
    CHECK(doc.get_double("nope", 4.5) == 4.5);
    CHECK(doc.get_int("nope2", 7) == 7);
    CHECK(doc.get_string("nope3", "d") == "d");
    doc.reject_unknown();
}

TEST_CASE("scenario config reads table-1 style settings") {
    const auto doc = ConfigDocument::parse(
        "scenario.user_counts = 100, 200, 300, 400, 500\n"
        "tdma.slot_duration_s = 0.01\n"
        "tdma.slots_per_frame = 10\n"
        "tdma.retransmission_attempts = 0\n"
        "radio.range_km = 400\n"
        "oca.range_km = 370.4\n"
        "sim.end_s = 10000\n"
        "sim.runs = 10\n");
    const auto cfg = scenario::read_scenario_config(doc);
    doc.reject_unknown();
    CHECK(cfg.user_counts == std::vector<int>{100, 200, 300, 400, 500});
    CHECK(cfg.tdma.slot_duration_s == 0.01);
    CHECK(cfg.tdma.slots_per_frame == 10);
    CHECK(cfg.tdma.retransmission_attempts == 0);
    CHECK(cfg.radio_range_km == 400.0);
    CHECK(cfg.oca.range_km == 370.4);
    CHECK(cfg.sim_end_s == 10000.0);
    CHECK(cfg.runs == 10);
    CHECK(cfg.snr_table.rows.size() == 41);
}

TEST_CASE("scenario config validation") {
    auto with = [](const std::string& extra) {
        return ConfigDocument::parse(extra + "\n");
    };
    CHECK_THROWS_AS(scenario::read_scenario_config(with("tdma.slots_per_frame = 0")), ConfigError);
    CHECK_THROWS_AS(scenario::read_scenario_config(with("tdma.retransmission_attempts = 2")),
                    ConfigError);
    CHECK_THROWS_AS(scenario::read_scenario_config(with("sim.runs = 0")), ConfigError);
    CHECK_THROWS_AS(scenario::read_scenario_config(with("sim.end_s = -1")), ConfigError);
    CHECK_THROWS_AS(scenario::read_scenario_config(with("mobility.source = teleport")),
                    ConfigError);
    CHECK_THROWS_AS(scenario::read_scenario_config(with("radio.snr_table = /no/such/file.csv")),
                    ConfigError);
}

TEST_CASE("loading the shipped configs") {
    const std::string base = std::string(AEROSIM_SOURCE_DIR) + "/configs/";
    SUBCASE("evaluation.cfg parses and validates") {
        const auto doc = ConfigDocument::load(base + "evaluation.cfg");
        const auto cfg = scenario::read_scenario_config(doc);
        doc.reject_unknown();
        CHECK(cfg.user_counts.size() == 5);
        CHECK(cfg.snr_table.rows.size() == 41);
    }
    SUBCASE("missing file names the path") {
        CHECK_THROWS_WITH_AS(ConfigDocument::load(base + "does_not_exist.cfg"),
                             doctest::Contains("does_not_exist.cfg"), ConfigError);
    }
}
