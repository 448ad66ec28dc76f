#pragma once

#include <memory>
#include <string_view>

#include <spdlog/logger.h>

namespace svo {

// All warnings go through this logger (stderr by default). Tests swap in
// their own sink to observe diagnostics.
std::shared_ptr<spdlog::logger> diagnostics();
void set_diagnostics(std::shared_ptr<spdlog::logger> logger);

void warn(std::string_view message);

}  // namespace svo
