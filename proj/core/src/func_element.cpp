#include "stellat/func_element.hpp"

#include "stellat/errors.hpp"

#include <cmath>

namespace stellat {

FuncElement::FuncElement(int dim) : dim_(dim), ap_(dim) {
    if (dim < 1 || dim > 3) throw DimensionMismatch("FuncElement: dimension must be 1..3");
}

FuncElement::FuncElement(ModRatSum c0, TrigPoly ap) : dim_(ap.dim()), c0_(std::move(c0)), ap_(std::move(ap)) {
    if (dim_ > 1 && !c0_.is_zero())
        throw DimensionMismatch("FuncElement: decaying part requires dimension 1");
}

FuncElement operator+(const FuncElement& a, const FuncElement& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("FuncElement: add with different dimensions");
    return {a.c0_ + b.c0_, a.ap_ + b.ap_};
}

FuncElement operator-(const FuncElement& a, const FuncElement& b) { return a + (-b); }

FuncElement FuncElement::operator-() const { return {-c0_, -ap_}; }

FuncElement operator*(const FuncElement& a, const FuncElement& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("FuncElement: mul with different dimensions");
    // c0 <- a.c0 b.c0 + a.c0 b.ap + a.ap b.c0 ; ap <- a.ap b.ap
    ModRatSum c0 = (a.c0_ * b.c0_) + a.c0_.mul_trig(b.ap_) + b.c0_.mul_trig(a.ap_);
    return {std::move(c0), a.ap_ * b.ap_};
}

FuncElement FuncElement::scaled(CScalar s) const { return {c0_.scaled(s), ap_.scaled(s)}; }

FuncElement FuncElement::star() const { return {c0_.star(), ap_.star()}; }

FuncElement FuncElement::derivative(int direction) const {
    if (direction < 0 || direction >= dim_)
        throw DimensionMismatch("FuncElement: derivative direction out of range");
    if (dim_ == 1) return {c0_.derivative(), ap_.derivative(0)};
    return {ModRatSum::zero(), ap_.derivative(direction)};
}

CScalar FuncElement::eval(const std::vector<double>& x) const {
    CScalar v = ap_.eval(x);
    if (!c0_.is_zero()) v += c0_.eval(x[0]);
    return v;
}

CScalar FuncElement::eval(double x) const { return eval(std::vector<double>{x}); }

double FuncElement::max_coeff_magnitude() const {
    double m = 0.0;
    for (const auto& [f, c] : ap_.terms()) {
        (void)f;
        m = std::max(m, std::abs(c));
    }
    for (const auto& [f, r] : c0_.terms()) {
        (void)f;
        m = std::max(m, r.max_abs_num_coeff());
    }
    return m;
}

void FuncElement::check_invariants() const {
    if (dim_ > 1 && !c0_.is_zero())
        throw InvariantViolation("FuncElement: decaying part present in dimension > 1");
    if (ap_.dim() != dim_) throw InvariantViolation("FuncElement: ap part dimension mismatch");
    ap_.check_invariants();
    c0_.check_invariants();
}

} // namespace stellat
