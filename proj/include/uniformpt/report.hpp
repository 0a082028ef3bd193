#ifndef UNIFORMPT_REPORT_HPP_
#define UNIFORMPT_REPORT_HPP_

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace uniformpt {

  enum class Status { pass, fail, skipped };

  std::string to_string(Status s);

  struct Check {
    std::string                                      name;
    Status                                           status = Status::pass;
    std::vector<std::pair<std::string, std::string>> measured;
    std::string                                      note;
    double                                           elapsed_ms = 0;

    Check& measure(std::string key, std::string value) {
      measured.emplace_back(std::move(key), std::move(value));
      return *this;
    }
  };

  //! Result of one CLI command.  Exit code 0 iff no check failed.
  struct RunReport {
    std::string                command;
    std::size_t                n = 0;
    std::size_t                m = 0;
    std::optional<std::string> value;
    std::vector<Check>         checks;

    bool passed() const noexcept;

    int exit_code() const noexcept {
      return passed() ? 0 : 1;
    }

    std::string    to_text(bool timing = true) const;
    nlohmann::json to_json(bool timing = true) const;
  };

  // Wall-clock stopwatch for Check::elapsed_ms.
  class Stopwatch {
   public:
    Stopwatch() : _start(std::chrono::steady_clock::now()) {}

    double elapsed_ms() const {
      return std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - _start)
          .count();
    }

   private:
    std::chrono::steady_clock::time_point _start;
  };

}  // namespace uniformpt

#endif  // UNIFORMPT_REPORT_HPP_
