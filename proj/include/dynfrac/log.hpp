#pragma once

#include <string>

namespace dynfrac {

// Warnings from numerical routines go to stderr unless silenced.
void log_warning(const std::string& msg);
void set_warnings_enabled(bool on);

}  // namespace dynfrac
