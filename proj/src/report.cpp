#include "symlift/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace symlift::report {

namespace {
std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return s;
}
}  // namespace

void Report::add(Record r) { records_.push_back(std::move(r)); }

void Report::check(const std::string& name, const std::string& inputs,
                   const std::string& expected, const std::string& got) {
  add({name, inputs, expected, got, expected == got});
}

void Report::check_true(const std::string& name, const std::string& inputs,
                        bool ok) {
  add({name, inputs, "true", ok ? "true" : "false", ok});
}

std::size_t Report::passed() const {
  std::size_t n = 0;
  for (const auto& r : records_)
    if (r.pass) ++n;
  return n;
}

std::string Report::to_text(bool machine) const {
  auto sorted = records_;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Record& a, const Record& b) { return a.name < b.name; });
  std::ostringstream out;
  if (machine) {
    out << "command=" << sanitize(echo_) << "\n";
    for (const auto& r : sorted) {
      out << "name=" << sanitize(r.name) << "\tpass=" << (r.pass ? 1 : 0)
          << "\tinputs=" << sanitize(r.inputs)
          << "\texpected=" << sanitize(r.expected) << "\tgot=" << sanitize(r.got)
          << "\n";
    }
    out << "summary\ttotal=" << total() << "\tpassed=" << passed()
        << "\tfailed=" << failed() << "\n";
    return out.str();
  }
  out << "command: " << echo_ << "\n";
  for (const auto& r : sorted) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.inputs.empty()) out << " | inputs: " << r.inputs;
    out << " | expected: " << r.expected << " | got: " << r.got << "\n";
  }
  out << "summary: total=" << total() << " passed=" << passed()
      << " failed=" << failed() << "\n";
  return out.str();
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = value;
  }
  return kv;
}

}  // namespace symlift::report
