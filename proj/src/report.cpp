#include "uniformpt/report.hpp"

#include <cstdio>

namespace uniformpt {

  std::string to_string(Status s) {
    switch (s) {
      case Status::pass:
        return "pass";
      case Status::fail:
        return "fail";
      case Status::skipped:
        return "skipped";
    }
    return "fail";
  }

  bool RunReport::passed() const noexcept {
    for (auto const& c : checks) {
      if (c.status == Status::fail) {
        return false;
      }
    }
    return true;
  }

  std::string RunReport::to_text(bool timing) const {
    std::string out = "command: " + command + '\n';
    out += "n=" + std::to_string(n) + " m=" + std::to_string(m) + '\n';
    if (value) {
      out += "value: " + *value + '\n';
    }
    for (auto const& c : checks) {
      std::string tag = c.status == Status::pass   ? "[PASS]"
                        : c.status == Status::fail ? "[FAIL]"
                                                   : "[SKIP]";
      out += tag + ' ' + c.name;
      for (auto const& [key, val] : c.measured) {
        out += "  " + key + '=' + val;
      }
      if (!c.note.empty()) {
        out += "  (" + c.note + ')';
      }
      if (timing) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "  [%.1f ms]", c.elapsed_ms);
        out += buf;
      }
      out += '\n';
    }
    out += std::string("result: ") + (passed() ? "PASS" : "FAIL") + '\n';
    return out;
  }

  nlohmann::json RunReport::to_json(bool timing) const {
    nlohmann::json j;
    j["command"] = command;
    j["n"]       = n;
    j["m"]       = m;
    if (value) {
      j["value"] = *value;
    }
    j["result"] = passed() ? "pass" : "fail";
    j["checks"] = nlohmann::json::array();
    for (auto const& c : checks) {
      nlohmann::json jc;
      jc["name"]     = c.name;
      jc["status"]   = to_string(c.status);
      jc["measured"] = nlohmann::json::object();
      for (auto const& [key, val] : c.measured) {
        jc["measured"][key] = val;
      }
      if (!c.note.empty()) {
        jc["note"] = c.note;
      }
      if (timing) {
        jc["elapsed_ms"] = c.elapsed_ms;
      }
      j["checks"].push_back(std::move(jc));
    }
    return j;
  }

}  // namespace uniformpt
