#include <cstdio>
#include <fstream>
#include <string>

#include "mvdual/commands.hpp"
#include "support.hpp"

using namespace mvdual;

TEST_CASE("classify") {
  const CommandResult r = cmd_classify("L2 * Linf");
  REQUIRE(r.ok());
  CHECK(r.payload["projective"] == true);
  CHECK(r.payload["stone"] == false);
  CHECK(r.payload["hyperarchimedean"] == true);
  CHECK(cmd_classify("{a:1}").payload["urysohn_strauss"] == true);
  CHECK(cmd_classify("profile{2:omega}").payload["extremally_disconnected"] == false);
  const CommandResult bad = cmd_classify("L1");
  CHECK_FALSE(bad.ok());
  CHECK(bad.exit_code == 1);
  CHECK_FALSE(bad.diagnostics.empty());
}

TEST_CASE("dual") {
  CHECK(cmd_dual("{a:1,b:3}").text == "[a:L2, b:L4]");
  CHECK(cmd_dual("{x1:1,x2:3}").text == "L2 * L4");
  CHECK(cmd_dual("L3 * Linf").text == "{x1:2, x2:inf}");
  CHECK(cmd_dual("{}").text == "[]");
  CHECK(cmd_dual("profile{1:2}").exit_code == 1);
}

TEST_CASE("homs") {
  CHECK(cmd_homs("{a:2}", "{b:1,c:2}", HomsMode::count).payload["count"] == 2);
  CHECK(cmd_homs("L2*L2", "L2", HomsMode::count).payload["count"] == 2);
  CHECK(cmd_homs("{a:1}", "{b:2}", HomsMode::count).payload["count"] == 0);
  const CommandResult listed = cmd_homs("{a:2}", "{b:1,c:2}", HomsMode::list);
  CHECK(listed.payload["homs"].size() == 2);
  CHECK(cmd_homs("{a:1}", "L2", HomsMode::count).exit_code == 1);
}

TEST_CASE("eval") {
  const CommandResult r = cmd_eval("~x (+) x", "L3", {"x=1/2"});
  REQUIRE(r.ok());
  CHECK(r.text == "(1)");
  CHECK(cmd_eval("x (.) y", "L4 * L3", {"x=(2/3, 1)", "y=(2/3, 1/2)"}).text == "(1/3, 1/2)");
  CHECK(cmd_eval("y", "L3", {"x=1/2"}).exit_code == 1);
  CHECK(cmd_eval("x", "L3", {"x"}).exit_code == 1);
}

TEST_CASE("output formats") {
  const CommandResult r = cmd_dual("{a:2}");
  const Json j = Json::parse(r.render(OutputFormat::json));
  CHECK(j["status"] == "ok");
  CHECK(j["payload"].is_object());
  CHECK(r.render(OutputFormat::text).find("[a:L3]") != std::string::npos);
  const Json err = Json::parse(cmd_dual("L0").render(OutputFormat::json));
  CHECK(err["status"] == "error");
  CHECK(err["diagnostics"].size() >= 1);
}

TEST_CASE("selftest command") {
  SelftestOptions options;
  options.only = {1, 10};
  CHECK(cmd_selftest(options).exit_code == 0);
  options.inject_fault = true;
  const CommandResult failed = cmd_selftest(options);
  CHECK(failed.exit_code == 2);
  CHECK_FALSE(failed.ok());
}

TEST_CASE("file arguments") {
  const std::string path = "mvdual_test_input.txt";
  {
    std::ofstream out(path);
    out << "{a:1}\n";
  }
  CHECK(resolve_input("@" + path) == "{a:1}");
  CHECK(resolve_input("{b:2}") == "{b:2}");
  std::remove(path.c_str());
}
