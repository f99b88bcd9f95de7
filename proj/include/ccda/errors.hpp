#pragma once

#include <stdexcept>
#include <string>

namespace ccda {

// Error families map 1:1 onto CLI exit codes.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BackendError : std::runtime_error {
    explicit BackendError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitConfig = 2,
    kExitBackend = 3,
    kExitData = 4,
};

}  // namespace ccda
