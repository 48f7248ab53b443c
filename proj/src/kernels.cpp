#include "bncheck/kernels.hpp"

#include <atomic>
#include <cstdlib>

#include "kernels_detail.hpp"

namespace bncheck::kern {

namespace {

const Kernels kScalar{"scalar", detail::dot_scalar, detail::cost_scan_scalar};

#if defined(__x86_64__) || defined(_M_X64)
const Kernels kAvx2{"avx2", detail::dot_avx2, detail::cost_scan_avx2};
#endif

const Kernels* find(std::string_view name) {
    if (name == "scalar") return &kScalar;
#if defined(__x86_64__) || defined(_M_X64)
    if (name == "avx2" && detail::avx2_supported()) return &kAvx2;
#endif
    return nullptr;
}

const Kernels* pick_default() {
    if (const char* env = std::getenv("BNCHECK_KERNELS")) {
        if (const Kernels* k = find(env)) return k;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (detail::avx2_supported()) return &kAvx2;
#endif
    return &kScalar;
}

std::atomic<const Kernels*>& slot() {
    static std::atomic<const Kernels*> current{pick_default()};
    return current;
}

}  // namespace

const Kernels& scalar() { return kScalar; }

const Kernels& active() { return *slot().load(std::memory_order_relaxed); }

std::vector<std::string> available() {
    std::vector<std::string> names{"scalar"};
#if defined(__x86_64__) || defined(_M_X64)
    if (detail::avx2_supported()) names.emplace_back("avx2");
#endif
    return names;
}

bool set_active(std::string_view name) {
    if (const Kernels* k = find(name)) {
        slot().store(k, std::memory_order_relaxed);
        return true;
    }
    return false;
}

}  // namespace bncheck::kern
