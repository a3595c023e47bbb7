#include "astra/log.hpp"

#include <cstdlib>
#include <memory>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

namespace astra {
namespace {

spdlog::logger& logger() {
    static const std::shared_ptr<spdlog::logger> instance = [] {
        auto l = spdlog::stderr_logger_st("astra");
        l->set_pattern("[%l] %v");
        spdlog::level::level_enum level = spdlog::level::warn;
        if (const char* env = std::getenv("ASTRA_LOG")) level = spdlog::level::from_str(env);
        l->set_level(level);
        return l;
    }();
    return *instance;
}

}  // namespace

void log_debug(const std::string& message) { logger().debug(message); }
void log_info(const std::string& message) { logger().info(message); }
void log_warn(const std::string& message) { logger().warn(message); }
void log_error(const std::string& message) { logger().error(message); }

}  // namespace astra
