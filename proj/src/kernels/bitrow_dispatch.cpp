#include <atomic>

#include "cograph/bitrow.hpp"
#include "cograph/errors.hpp"

namespace cograph::bitrow {

#ifndef COGRAPH_HAVE_AVX2
const Kernels* avx2_kernels() { return nullptr; }
#endif

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

Backend detect() { return (avx2_kernels() != nullptr && cpu_has_avx2()) ? Backend::Avx2 : Backend::Scalar; }

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
  if (backend == Backend::Avx2 && (avx2_kernels() == nullptr || !cpu_has_avx2()))
    throw InvalidArgument("AVX2 kernels are not available on this machine");
  current().store(backend, std::memory_order_relaxed);
}

std::string_view backend_name(Backend backend) { return backend == Backend::Avx2 ? "avx2" : "scalar"; }

const Kernels& active() {
  return active_backend() == Backend::Avx2 ? *avx2_kernels() : scalar_kernels();
}

}  // namespace cograph::bitrow
