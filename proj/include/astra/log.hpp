#pragma once

#include <string>

namespace astra {

// Diagnostics go to stderr. The level comes from ASTRA_LOG
// (off, error, warn, info, debug); the default is warn.
void log_debug(const std::string& message);
void log_info(const std::string& message);
void log_warn(const std::string& message);
void log_error(const std::string& message);

}  // namespace astra
