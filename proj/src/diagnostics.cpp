#include "svo/diagnostics.hpp"

#include <mutex>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

namespace svo {

namespace {

std::mutex g_mutex;
std::shared_ptr<spdlog::logger> g_logger;

std::shared_ptr<spdlog::logger> make_default() {
  auto logger = std::make_shared<spdlog::logger>(
      "svo", std::make_shared<spdlog::sinks::stderr_sink_mt>());
  logger->set_pattern("svo: %l: %v");
  return logger;
}

}  // namespace

std::shared_ptr<spdlog::logger> diagnostics() {
  std::lock_guard lock(g_mutex);
  if (!g_logger) g_logger = make_default();
  return g_logger;
}

void set_diagnostics(std::shared_ptr<spdlog::logger> logger) {
  std::lock_guard lock(g_mutex);
  g_logger = std::move(logger);
}

void warn(std::string_view message) { diagnostics()->warn("{}", message); }

}  // namespace svo
