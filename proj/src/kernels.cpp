#include "ringlat/kernels.hpp"

namespace ringlat::kernels {

namespace {
bool g_parallel = true;
}

bool parallel_enabled() {
#ifdef RINGLAT_HAVE_OPENMP
    return g_parallel;
#else
    return false;
#endif
}

void set_parallel(bool on) { g_parallel = on; }

}  // namespace ringlat::kernels
