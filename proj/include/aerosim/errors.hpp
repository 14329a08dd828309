#ifndef AEROSIM_ERRORS_HPP
#define AEROSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace aerosim {

/// Bad configuration or unusable input files. CLI maps this to exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed trace/table content. Carries file context and line number where known.
class FormatError : public ConfigError {
public:
    FormatError(const std::string& source, int line, const std::string& what)
        : ConfigError(source + ":" + std::to_string(line) + ": " + what),
          line_(line) {}
    explicit FormatError(const std::string& what) : ConfigError(what), line_(0) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace aerosim

#endif
