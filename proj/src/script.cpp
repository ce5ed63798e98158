#include "shadow/script.hpp"

#include <charconv>
#include <sstream>

#include "shadow/moves.hpp"

namespace shadow {

ScriptError::ScriptError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string> words(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

int parse_int(const std::string& text, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw ScriptError(line, "expected an integer, got '" + text + "'");
  return value;
}

}  // namespace

ScriptSession::ScriptSession(Shadow start) { history_.push_back(std::move(start)); }

std::string ScriptSession::execute(std::string_view line, int n) {
  const auto w = words(line);
  if (w.empty() || w[0][0] == '#') return {};
  if (w[0] == "apply") {
    if (w.size() != 3) throw ScriptError(n, "usage: apply <kind> <anchor>");
    const auto kind = MoveKind::parse(w[1]);
    if (!kind) throw ScriptError(n, "unknown move kind '" + w[1] + "'");
    const int before = euler_characteristic(current().poly);
    MoveResult r = [&] {
      try {
        return apply_move(current(), {*kind, w[2]});
      } catch (const MoveError& e) {
        throw ScriptError(n, e.what());
      }
    }();
    const int after = euler_characteristic(r.shadow.poly);
    const bool parity = check_parity(r.shadow.poly, r.shadow.gleams).ok();
    history_.push_back(std::move(r.shadow));
    return "apply " + kind->name() + " " + w[2] + ": chi " + std::to_string(before) + " -> " + std::to_string(after) +
           ", parity " + (parity ? "ok" : "violated");
  }
  if (w[0] == "undo") {
    if (w.size() != 1) throw ScriptError(n, "usage: undo");
    if (history_.size() == 1) throw ScriptError(n, "nothing to undo");
    history_.pop_back();
    return "undo: chi " + std::to_string(euler_characteristic(current().poly));
  }
  if (w[0] == "assert") {
    if (w.size() != 3 || (w[1] != "chi" && w[1] != "vertices")) throw ScriptError(n, "usage: assert chi|vertices <int>");
    const int expected = parse_int(w[2], n);
    const int actual = w[1] == "chi" ? euler_characteristic(current().poly) : current().poly.num_vertices();
    if (actual != expected)
      throw ScriptError(n, "assertion failed: " + w[1] + " is " + std::to_string(actual) + ", expected " + w[2]);
    return "assert " + w[1] + " " + w[2] + ": ok";
  }
  throw ScriptError(n, "unknown command '" + w[0] + "'");
}

ScriptRun run_script(const Shadow& start, std::string_view script) {
  ScriptSession session(start);
  ScriptRun run{start, {}};
  std::istringstream in{std::string(script)};
  int n = 0;
  for (std::string line; std::getline(in, line);) {
    std::string entry = session.execute(line, ++n);
    if (!entry.empty()) run.transcript.push_back(std::move(entry));
  }
  run.result = session.current();
  return run;
}

}  // namespace shadow
