#include "faultpath/validation.hpp"

#include <atomic>

namespace faultpath {

namespace {
std::atomic<bool> g_validation{false};
}

bool validation_enabled() { return g_validation.load(std::memory_order_relaxed); }
void set_validation(bool on) { g_validation.store(on, std::memory_order_relaxed); }

}  // namespace faultpath
