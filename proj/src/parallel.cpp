#include "apuniform/parallel.hpp"

namespace apu {
namespace {
std::atomic<unsigned> g_threads{1};
}

void set_thread_count(unsigned count) noexcept { g_threads.store(count == 0 ? 1 : count); }

unsigned thread_count() noexcept { return g_threads.load(); }

}  // namespace apu
