#ifndef LGF_FFT_INTERNAL_HPP
#define LGF_FFT_INTERNAL_HPP

#include <mutex>

namespace lgf::detail {

// FFTW's planner is not thread-safe; every plan/destroy goes through this.
std::mutex& fftw_mutex();

}  // namespace lgf::detail

#endif
