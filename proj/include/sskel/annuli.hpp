#pragma once

// Input of the covering construction: A = B[x_0,x_1]/(x_0 x_1 - pi_1 *
// t_0^{n_0}...t_m^{n_m}) over the model base B = k°[t_0..t_l]/(t_0...t_m -
// pi_0), together with the reference radius r fixing the coset lattice
// r^Q.

#include <sskel/model.hpp>

#include <utility>
#include <vector>

namespace sskel {

struct AnnuliModel {
    ModelAlgebra base;                        // l, m, pi_0
    std::vector<unsigned> fiber_exponents;    // n_0..n_m
    Value pi1;
    Value ref_radius;                         // r, strictly inside (0, 1)

    AnnuliModel() = default;
    AnnuliModel(ModelAlgebra base_, std::vector<unsigned> n, Value pi1_, Value r)
        : base(std::move(base_)), fiber_exponents(std::move(n)), pi1(std::move(pi1_)), ref_radius(std::move(r)) {
        validate();
    }

    void validate() const {
        base.validate();
        if (fiber_exponents.size() != base.m + 1)
            throw std::invalid_argument("annuli model: expected m+1 fiber exponents");
        if (pi1.is_zero()) throw std::invalid_argument("annuli model: pi_1 must be nonzero");
        if (cmp(pi1, Value::one()) == Order::greater)
            throw std::invalid_argument("annuli model: pi_1 must lie in the unit ball");
        if (ref_radius.is_zero() || cmp(ref_radius, Value::one()) != Order::less)
            throw std::invalid_argument("annuli model: reference radius must lie strictly in (0, 1)");
    }

    // True when every n_i coincides; then |pi_1 t^n| is constant on the
    // base simplex and the fiber block of the skeleton is a product.
    bool uniform_fiber_exponents() const {
        for (std::size_t i = 1; i < fiber_exponents.size(); ++i)
            if (fiber_exponents[i] != fiber_exponents[0]) return false;
        return true;
    }

    // |pi_1| * |t_0...t_m|^c = |pi_1| * |pi_0|^c for uniform exponent c:
    // the inner fiber radius over the whole base.
    Value effective_fiber_radius() const {
        if (!uniform_fiber_exponents())
            throw std::domain_error("annuli model: effective fiber radius needs uniform exponents");
        return pi1 * pow(base.pi, Rational(fiber_exponents.empty() ? 0 : fiber_exponents[0]));
    }

    friend bool operator==(const AnnuliModel& a, const AnnuliModel& b) {
        return a.base == b.base && a.fiber_exponents == b.fiber_exponents && a.pi1 == b.pi1 &&
               a.ref_radius == b.ref_radius;
    }
};

}  // namespace sskel
