#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace aqg {

/// Flat `key = value` configuration text: UTF-8, one pair per line,
/// '#' starts a comment. Unknown and duplicate keys are errors; messages
/// cite the offending line.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ConfigFile {
  public:
    static ConfigFile parse_file(const std::string& path);
    static ConfigFile parse_text(const std::string& text, const std::string& name);

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key);
    long get_long(const std::string& key);
    double get_double(const std::string& key);
    std::vector<double> get_double_list(const std::string& key);

    std::optional<std::string> maybe_string(const std::string& key);
    std::optional<long> maybe_long(const std::string& key);
    std::optional<double> maybe_double(const std::string& key);

    /// Throws if any key was never consumed by a getter ("no silent typos").
    void reject_unused() const;

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  private:
    struct Entry {
        std::string value;
        int line = 0;
        bool used = false;
    };
    std::string name_;
    std::map<std::string, Entry> values_;
    std::vector<std::pair<std::string, std::string>> entries_;  // file order

    Entry& require(const std::string& key);
    [[noreturn]] void fail(int line, const std::string& message) const;
};

}  // namespace aqg
