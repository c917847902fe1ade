#include "qaw/parameters.hpp"

#include <cmath>

namespace qaw {

cplx qpow(cplx base, int n) {
    if (n < 0) return cplx(1.0, 0.0) / qpow(base, -n);
    cplx out(1.0, 0.0);
    for (int j = 0; j < n; ++j) out *= base;
    return out;
}

cplx QParameters::v(int n) const {
    return cplx(static_cast<double>(n), 0.0) + std::log(epsilon) / std::log(q);
}

void QParameters::validate() const {
    if (std::abs(q) >= 1.0) throw DomainError("QParameters: |q| >= 1");
    if (epsilon == cplx(0.0, 0.0)) throw DomainError("QParameters: epsilon = 0");
}

SpectralPoint SpectralPoint::from_z(cplx z) {
    SpectralPoint pt;
    pt.z = z;
    if (z.imag() == 0.0 && std::abs(z.real()) <= 1.0) {
        // boundary value from the upper half-plane: u = e^{-i theta}
        const double th = std::acos(z.real());
        pt.theta = -th;
        pt.u = std::polar(1.0, -th);
        return pt;
    }
    const cplx one(1.0, 0.0);
    pt.u = z + std::sqrt(z - one) * std::sqrt(z + one);
    if (std::abs(pt.u) < 1.0) pt.u = one / pt.u;  // rounding safety near the cut
    if (std::abs(std::abs(pt.u) - 1.0) < 1e-14) pt.theta = std::arg(pt.u);
    return pt;
}

SpectralPoint SpectralPoint::from_u(cplx u) {
    if (u == cplx(0.0, 0.0)) throw DomainError("SpectralPoint: u = 0");
    SpectralPoint pt;
    if (std::abs(u) < 1.0) u = cplx(1.0, 0.0) / u;  // exterior-branch normalization
    pt.u = u;
    pt.z = (u + cplx(1.0, 0.0) / u) / 2.0;
    if (std::abs(std::abs(u) - 1.0) < 1e-14) pt.theta = std::arg(u);
    return pt;
}

SpectralPoint SpectralPoint::from_theta(double theta) {
    SpectralPoint pt;
    pt.u = std::polar(1.0, theta);
    pt.z = cplx(std::cos(theta), 0.0);
    pt.theta = theta;
    return pt;
}

bool SpectralPoint::on_cut(double band) const {
    return std::abs(std::abs(u) - 1.0) <= band;
}

}  // namespace qaw
