#pragma once

#include "stellat/func_element.hpp"

namespace stellat {

/// Element base + mu*1 with the unit coefficient tracked separately.
///
/// When base lies in the decaying class (empty almost periodic part) a
/// nonzero mu witnesses that the element has left that non-unital class:
/// the function tends to mu at infinity instead of 0. Adjoining the formal
/// unit this way is exactly the "borrowed" unit that repairs continuity
/// arguments over the non-unital algebra.
class UnitalElement {
public:
    explicit UnitalElement(FuncElement base = FuncElement(1), CScalar unit_coeff = {0.0, 0.0})
        : base_(std::move(base)), unit_(unit_coeff) {}

    static UnitalElement unit(int dim = 1) { return UnitalElement(FuncElement::zero(dim), {1.0, 0.0}); }

    const FuncElement& base() const { return base_; }
    CScalar unit_coeff() const { return unit_; }
    int dim() const { return base_.dim(); }
    bool is_zero() const { return base_.is_zero() && unit_ == CScalar{0.0, 0.0}; }

    friend UnitalElement operator+(const UnitalElement& a, const UnitalElement& b) {
        return UnitalElement(a.base_ + b.base_, a.unit_ + b.unit_);
    }
    friend UnitalElement operator-(const UnitalElement& a, const UnitalElement& b) {
        return UnitalElement(a.base_ - b.base_, a.unit_ - b.unit_);
    }
    friend UnitalElement operator*(const UnitalElement& a, const UnitalElement& b) {
        // (x + mu 1)(y + nu 1) = xy + nu x + mu y + mu nu 1
        FuncElement cross = (a.base_ * b.base_) + a.base_.scaled(b.unit_) + b.base_.scaled(a.unit_);
        return UnitalElement(std::move(cross), a.unit_ * b.unit_);
    }

    UnitalElement star() const { return UnitalElement(base_.star(), std::conj(unit_)); }
    UnitalElement derivative(int direction = 0) const {
        return UnitalElement(base_.derivative(direction), {0.0, 0.0});
    }
    CScalar eval(double x) const { return base_.eval(x) + unit_; }
    CScalar eval(const std::vector<double>& x) const { return base_.eval(x) + unit_; }

    bool is_self_adjoint() const { return unit_.imag() == 0.0 && base_.is_self_adjoint(); }

    /// Merge the unit coefficient into the constant trigonometric term;
    /// used when a plain function-algebra view is needed (norms, states).
    FuncElement to_func_element() const {
        return base_ + FuncElement::unit(base_.dim()).scaled(unit_);
    }

    friend bool operator==(const UnitalElement& a, const UnitalElement& b) {
        return a.unit_ == b.unit_ && a.base_ == b.base_;
    }

private:
    FuncElement base_;
    CScalar unit_;
};

} // namespace stellat
