#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace symlift::report {

struct Record {
  std::string name;
  std::string inputs;
  std::string expected;
  std::string got;
  bool pass = false;
};

/// Ordered collection of check records with summary counts. Output is
/// deterministic: records sort by name, and the machine variant emits one
/// record per line with the fixed field order
/// name / pass / inputs / expected / got, tab-separated key=value pairs.
class Report {
 public:
  explicit Report(std::string command_echo) : echo_(std::move(command_echo)) {}

  void add(Record r);
  void check(const std::string& name, const std::string& inputs,
             const std::string& expected, const std::string& got);
  void check_true(const std::string& name, const std::string& inputs, bool ok);

  const std::vector<Record>& records() const { return records_; }
  std::size_t total() const { return records_.size(); }
  std::size_t passed() const;
  std::size_t failed() const { return total() - passed(); }
  bool all_pass() const { return passed() == total(); }

  std::string to_text(bool machine) const;

 private:
  std::string echo_;
  std::vector<Record> records_;
};

/// Run parameters shared by the command-line entry points. Resolution
/// order is flag over config file over default.
struct RunConfig {
  std::uint64_t window = 0;  // 0 = size automatically
  std::uint64_t horizon = 200;
  std::uint64_t stages = 1600;
  std::uint64_t threshold = 10;
  std::uint64_t seed = 0;
  std::uint64_t nmax = 16;
  std::string set_name = "evens";
  std::string pred_name = "always";
  std::string field_name = "q";
  std::string out_path;
  bool machine = false;
};

/// key=value lines, '#' comments.
std::map<std::string, std::string> load_config_file(const std::string& path);

}  // namespace symlift::report
