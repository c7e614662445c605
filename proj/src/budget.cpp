#include "shadowchi/budget.hpp"

#include <cstdlib>
#include <string>

namespace shadowchi {

Budget Budget::from_environment() {
    const char* raw = std::getenv("SHADOWCHI_BUDGET_MS");
    if (raw == nullptr || *raw == '\0') return unlimited();
    try {
        auto ms = std::stoll(raw);
        if (ms > 0) return milliseconds(ms);
    } catch (const std::exception&) {
    }
    return unlimited();
}

}  // namespace shadowchi
