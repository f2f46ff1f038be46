#include "levyscale/fq.hpp"

namespace levyscale {

FqTransform::FqTransform(Model model, double q) : model_(std::move(model)), q_(q) {
    if (q < 0.0) throw DomainError("FqTransform: need q >= 0");
    phi_ = phi_q(model_, q);
    if (!(phi_ > 0.0))
        throw DomainError("FqTransform: Phi(q) must be positive for the potential-density "
                          "route; use the direct inversion route when q = Phi(q) = 0");
    Jet<double> j = psi_jet(model_, phi_);
    a1_ = j.d1;
    a2_ = j.d2;
    a3_ = j.d3;
    switch_radius_ = 1e-3 * std::max(1.0, phi_);
}

std::complex<double> FqTransform::value(std::complex<double> z) const {
    std::complex<double> d = z - phi_;
    if (std::abs(d) > switch_radius_) {
        return 1.0 / (a1_ * d) - 1.0 / (psi(model_, z) - q_);
    }
    double c0 = 0.5 * a2_ / (a1_ * a1_);
    double c1 = a3_ / (6.0 * a1_ * a1_) - 0.25 * a2_ * a2_ / (a1_ * a1_ * a1_);
    return c0 + c1 * d;
}

const FqTransform::MpData& FqTransform::mp_data(mpfr_prec_t prec) const {
    std::lock_guard lock(mu_);
    auto it = mp_cache_.find(prec);
    if (it == mp_cache_.end()) {
        auto d = std::make_shared<MpData>();
        d->phi = phi_q_mp(model_, q_, prec);
        Jet<MpReal> j = psi_jet(model_, d->phi);
        d->a1 = j.d1;
        d->a2 = j.d2;
        d->a3 = j.d3;
        // balance the cancellation of the direct formula against the Taylor
        // truncation: radius ~ 10^(-digits/3)
        double digits = static_cast<double>(prec) / 3.3219280948873626;
        d->radius = MpReal(std::max(1.0, phi_), prec) * std::pow(10.0, -digits / 3.0);
        it = mp_cache_.emplace(prec, std::move(d)).first;
    }
    return *it->second;
}

MpComplex FqTransform::value_mp(const MpComplex& z) const {
    mpfr_prec_t prec = z.prec();
    const MpData& d = mp_data(prec);
    MpComplex diff = z - d.phi;
    if (abs(diff) > d.radius) {
        MpComplex one(1.0, 0.0, prec);
        return one / (d.a1 * diff) - one / (psi(model_, z) - MpReal(q_, prec));
    }
    MpReal c0 = 0.5 * d.a2 / (d.a1 * d.a1);
    MpReal c1 = d.a3 / (6.0 * (d.a1 * d.a1)) - 0.25 * (d.a2 * d.a2) / (d.a1 * d.a1 * d.a1);
    return MpComplex(c0) + MpComplex(c1) * diff;
}

MpReal FqTransform::value_mp_real(const MpReal& z) const {
    mpfr_prec_t prec = z.prec();
    const MpData& d = mp_data(prec);
    MpReal diff = z - d.phi;
    if (abs(diff) > d.radius) {
        return 1.0 / (d.a1 * diff) - 1.0 / (psi(model_, z) - MpReal(q_, prec));
    }
    MpReal c0 = 0.5 * d.a2 / (d.a1 * d.a1);
    MpReal c1 = d.a3 / (6.0 * (d.a1 * d.a1)) - 0.25 * (d.a2 * d.a2) / (d.a1 * d.a1 * d.a1);
    return c0 + c1 * diff;
}

std::shared_ptr<const FqTransform> make_fq(const Model& model, double q) {
    return std::make_shared<FqTransform>(model, q);
}

std::complex<double> f_q(const FqTransform& t, std::complex<double> z) { return t.value(z); }

TransformFn transform_u(std::shared_ptr<const FqTransform> t) {
    TransformFn f;
    f.analytic_halfplane = 0.0;
    f.real_symmetric = true;
    f.eval = [t](std::complex<double> z) { return t->value(z); };
    f.eval_mp = [t](const MpComplex& z) { return t->value_mp(z); };
    f.eval_mp_real = [t](const MpReal& z) { return t->value_mp_real(z); };
    return f;
}

TransformFn transform_u_prime(std::shared_ptr<const FqTransform> t, double w0) {
    TransformFn f;
    f.analytic_halfplane = 0.0;
    f.real_symmetric = true;
    double shift = w0 - 1.0 / t->psi_prime_at_phi();
    f.eval = [t, shift](std::complex<double> z) { return z * t->value(z) + shift; };
    f.eval_mp = [t, w0](const MpComplex& z) {
        mpfr_prec_t prec = z.prec();
        MpReal a1 = psi_derivative(t->model(), phi_q_mp(t->model(), t->q(), prec), 1);
        MpReal sh = MpReal(w0, prec) - 1.0 / a1;
        return z * t->value_mp(z) + MpComplex(sh);
    };
    f.eval_mp_real = [t, w0](const MpReal& z) {
        mpfr_prec_t prec = z.prec();
        MpReal a1 = psi_derivative(t->model(), phi_q_mp(t->model(), t->q(), prec), 1);
        MpReal sh = MpReal(w0, prec) - 1.0 / a1;
        return z * t->value_mp_real(z) + sh;
    };
    return f;
}

TransformFn transform_v(std::shared_ptr<const FqTransform> t) {
    TransformFn f;
    f.analytic_halfplane = 0.0;
    f.real_symmetric = true;
    f.eval = [t](std::complex<double> z) { return t->value(z) / z; };
    f.eval_mp = [t](const MpComplex& z) { return t->value_mp(z) / z; };
    f.eval_mp_real = [t](const MpReal& z) { return t->value_mp_real(z) / z; };
    return f;
}

} // namespace levyscale
