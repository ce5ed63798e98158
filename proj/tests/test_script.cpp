#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shadow/canonical.hpp"
#include "shadow/moves.hpp"
#include "shadow/script.hpp"
#include "support.hpp"

using namespace shadow;
using namespace shadow::testing;

namespace {

int error_line(const Shadow& s, const std::string& script) {
  try {
    run_script(s, script);
  } catch (const ScriptError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("empty script returns the input") {
  const Shadow s = example("two_circles");
  const ScriptRun run = run_script(s, "");
  CHECK(run.transcript.empty());
  CHECK(canonical_form(run.result) == canonical_form(s));
  CHECK(run_script(s, "# comment only\n\n").transcript.empty());
}

TEST_CASE("bubble then undo") {
  const Shadow s = example("cp2_sphere");
  const ScriptRun run = run_script(s, "apply bubble0 r0\nassert chi 3\nundo\nassert chi 2\nassert vertices 0\n");
  const std::vector<std::string> expected = {
      "apply bubble0 r0: chi 2 -> 3, parity ok",
      "assert chi 3: ok",
      "undo: chi 2",
      "assert chi 2: ok",
      "assert vertices 0: ok",
  };
  CHECK(run.transcript == expected);
  CHECK(canonical_form(run.result) == canonical_form(s));
}

TEST_CASE("equivalence chain keeps chi") {
  const Shadow s = example("two_circles");
  const auto site = enumerate_sites(s, *MoveKind::parse("twothree")).front();
  const ScriptRun run = run_script(s, "apply twothree " + site.anchor + "\nassert chi 4\nassert vertices 3\n");
  REQUIRE(run.transcript.size() == 3);
  CHECK(run.transcript[0] == "apply twothree " + site.anchor + ": chi 4 -> 4, parity ok");
  CHECK(run.result.poly.num_vertices() == 3);
}

TEST_CASE("failures name their line") {
  const Shadow s = example("cp2_sphere");
  CHECK(error_line(s, "apply bubble0 r0\n\nassert chi 7\n") == 3);
  CHECK(error_line(s, "undo\n") == 1);
  CHECK(error_line(s, "# c\napply sideways r0\n") == 2);
  CHECK(error_line(s, "apply twothree e9\n") == 1);
  CHECK(error_line(s, "assert chi two\n") == 1);
  CHECK(error_line(s, "jump\n") == 1);
  try {
    run_script(s, "assert chi 5\n");
    FAIL("no error");
  } catch (const ScriptError& e) {
    CHECK(std::string(e.what()) == "line 1: assertion failed: chi is 2, expected 5");
  }
}

TEST_CASE("transcripts are deterministic") {
  const Shadow s = example("two_circles");
  const std::string script = "apply bubble0 D1\napply bubble0 D2\nundo\nassert chi 5\n";
  CHECK(run_script(s, script).transcript == run_script(s, script).transcript);
}
