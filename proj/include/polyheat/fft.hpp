#ifndef POLYHEAT_FFT_HPP
#define POLYHEAT_FFT_HPP

#include <complex>
#include <memory>
#include <vector>

#include "polyheat/grid.hpp"

namespace polyheat {

// Real-to-complex FFT pair for one GridSpec. FFTW plan creation is guarded by
// a global planner mutex; execution on distinct objects is concurrency-safe.
// Distinct objects may be used from different threads.
class SpectralTransform {
  public:
    explicit SpectralTransform(const GridSpec& spec);
    ~SpectralTransform();
    SpectralTransform(const SpectralTransform&) = delete;
    SpectralTransform& operator=(const SpectralTransform&) = delete;

    const GridSpec& spec() const { return spec_; }
    std::size_t spectral_size() const { return freq_sq_.size(); }

    // unnormalized forward r2c transform
    void forward(const GridField& in, std::vector<std::complex<double>>& out) const;
    // inverse c2r transform including the 1/n^N normalization
    void inverse(const std::vector<std::complex<double>>& in, GridField& out) const;

    // |xi|^2 per spectral bin, xi = 2*pi*k/L with integer frequencies k
    const std::vector<double>& freq_sq() const { return freq_sq_; }
    // 2/3-rule mask: true where every axis index satisfies |k| <= n/3
    const std::vector<bool>& dealias_mask() const { return dealias_; }

  private:
    GridSpec spec_;
    std::vector<double> freq_sq_;
    std::vector<bool> dealias_;
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace polyheat

#endif
