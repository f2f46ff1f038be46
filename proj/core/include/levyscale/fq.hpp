#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "levyscale/inversion.hpp"
#include "levyscale/model.hpp"

namespace levyscale {

/// The transform F(z) = 1/(psi'(Phi)(z - Phi)) - 1/(psi(z) - q), i.e. the
/// Laplace transform of the bounded potential density that remains after the
/// exponential part of the scale function is split off. The singularity at
/// z = Phi is removable; inside `switch_radius` a two-term Taylor value is
/// used instead of the difference of two large terms.
class FqTransform {
public:
    FqTransform(Model model, double q);

    const Model& model() const { return model_; }
    double q() const { return q_; }
    double phi() const { return phi_; }
    double psi_prime_at_phi() const { return a1_; }
    double a1() const { return a1_; }
    double a2() const { return a2_; }
    double a3() const { return a3_; }
    double switch_radius() const { return switch_radius_; }

    std::complex<double> value(std::complex<double> z) const;
    MpComplex value_mp(const MpComplex& z) const;
    MpReal value_mp_real(const MpReal& z) const;

    MpReal phi_mp(mpfr_prec_t prec) const;
    MpReal a1_mp(mpfr_prec_t prec) const;

private:
    struct MpData {
        MpReal phi, a1, a2, a3, radius;
    };
    const MpData& mp_data(mpfr_prec_t prec) const;

    Model model_;
    double q_;
    double phi_, a1_, a2_, a3_, switch_radius_;
    mutable std::mutex mu_;
    mutable std::map<mpfr_prec_t, std::shared_ptr<const MpData>> mp_cache_;
};

std::shared_ptr<const FqTransform> make_fq(const Model& model, double q);

/// F(q)(z) at a point (double field).
std::complex<double> f_q(const FqTransform& t, std::complex<double> z);

/// Transforms fed to the inversion backends:
///   u-hat        <- F(z)
///   u-hat prime  <- z F(z) + W(0+) - 1/psi'(Phi)
///   v            <- F(z)/z
TransformFn transform_u(std::shared_ptr<const FqTransform> t);
TransformFn transform_u_prime(std::shared_ptr<const FqTransform> t, double w0);
TransformFn transform_v(std::shared_ptr<const FqTransform> t);

} // namespace levyscale
