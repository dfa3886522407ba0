#include "polyheat/fft.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace polyheat {

namespace {
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

struct SpectralTransform::Impl {
    double* real = nullptr;
    fftw_complex* cplx = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    std::size_t n_real = 0, n_cplx = 0;

    ~Impl() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
        if (real) fftw_free(real);
        if (cplx) fftw_free(cplx);
    }
};

SpectralTransform::SpectralTransform(const GridSpec& spec) : spec_(spec), impl_(new Impl) {
    const int n = spec.points_per_axis;
    const int dim = spec.dimension;
    const std::size_t half = static_cast<std::size_t>(n / 2 + 1);

    impl_->n_real = spec.total_points();
    impl_->n_cplx = half;
    for (int i = 0; i < dim - 1; ++i) impl_->n_cplx *= static_cast<std::size_t>(n);

    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        impl_->real = fftw_alloc_real(impl_->n_real);
        impl_->cplx = fftw_alloc_complex(impl_->n_cplx);
        int dims[3] = {n, n, n};
        impl_->fwd = fftw_plan_dft_r2c(dim, dims, impl_->real, impl_->cplx, FFTW_ESTIMATE);
        impl_->bwd = fftw_plan_dft_c2r(dim, dims, impl_->cplx, impl_->real, FFTW_ESTIMATE);
    }
    if (!impl_->fwd || !impl_->bwd) throw std::runtime_error("SpectralTransform: FFTW plan failed");

    // integer frequencies: full range on leading axes, [0, n/2] on the last
    freq_sq_.resize(impl_->n_cplx);
    dealias_.resize(impl_->n_cplx);
    const double k0 = 2.0 * M_PI / spec.box_length;
    const int kmax_keep = n / 3;
    for (std::size_t flat = 0; flat < impl_->n_cplx; ++flat) {
        std::size_t rem = flat;
        int idx[3] = {0, 0, 0};
        idx[dim - 1] = static_cast<int>(rem % half);
        rem /= half;
        for (int axis = dim - 2; axis >= 0; --axis) {
            idx[axis] = static_cast<int>(rem % n);
            rem /= n;
        }
        double ksq = 0.0;
        bool keep = true;
        for (int axis = 0; axis < dim; ++axis) {
            int k = idx[axis];
            if (axis < dim - 1 && k > n / 2) k -= n; // negative frequencies
            ksq += static_cast<double>(k) * k;
            if (std::abs(k) > kmax_keep) keep = false;
        }
        freq_sq_[flat] = ksq * k0 * k0;
        dealias_[flat] = keep;
    }
}

SpectralTransform::~SpectralTransform() = default;

void SpectralTransform::forward(const GridField& in, std::vector<std::complex<double>>& out) const {
    if (!(in.spec == spec_)) throw std::invalid_argument("SpectralTransform: spec mismatch");
    out.resize(impl_->n_cplx);
    std::copy(in.values.begin(), in.values.end(), impl_->real);
    fftw_execute(impl_->fwd);
    for (std::size_t i = 0; i < impl_->n_cplx; ++i)
        out[i] = {impl_->cplx[i][0], impl_->cplx[i][1]};
}

void SpectralTransform::inverse(const std::vector<std::complex<double>>& in, GridField& out) const {
    if (in.size() != impl_->n_cplx)
        throw std::invalid_argument("SpectralTransform: spectral size mismatch");
    for (std::size_t i = 0; i < impl_->n_cplx; ++i) {
        impl_->cplx[i][0] = in[i].real();
        impl_->cplx[i][1] = in[i].imag();
    }
    fftw_execute(impl_->bwd); // c2r destroys its input; we own the buffer
    out.spec = spec_;
    out.values.resize(impl_->n_real);
    const double scale = 1.0 / static_cast<double>(impl_->n_real);
    for (std::size_t i = 0; i < impl_->n_real; ++i) out.values[i] = impl_->real[i] * scale;
}

} // namespace polyheat
