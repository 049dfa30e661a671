#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace superalg::cli {

// Exit statuses.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kInputError = 2;

// Ordered key/value lines. Machine mode prints key=value, human mode
// aligns the keys.
class Report {
 public:
  void add(const std::string& key, const std::string& value) { lines_.emplace_back(key, value); }
  void add(const std::string& key, long value) { add(key, std::to_string(value)); }
  void add_flag(const std::string& key, bool pass) { add(key, std::string(pass ? "PASS" : "FAIL")); }
  void print(std::ostream& out, bool machine) const;

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace superalg::cli
