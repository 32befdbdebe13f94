#include "dynfrac/log.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

namespace dynfrac {

namespace {
std::atomic<bool> g_enabled{true};
std::mutex g_mutex;
}  // namespace

void set_warnings_enabled(bool on) { g_enabled = on; }

void log_warning(const std::string& msg) {
    if (!g_enabled) return;
    std::lock_guard<std::mutex> lock(g_mutex);
    std::cerr << "warning: " << msg << '\n';
}

}  // namespace dynfrac
