#pragma once

#include "stellat/scalar.hpp"

#include <map>
#include <vector>

namespace stellat {

/// Monomial in the coordinate projections x_n of the infinite product cube
/// [0,1]^N: a nonempty multiset of generator indices (x_2 x_2 x_5 = [2,2,5]).
/// Nonempty because the generated *-algebra is non-unital: the constant
/// function 1 is not a combination of coordinate products.
class Monomial {
public:
    explicit Monomial(std::vector<unsigned> gens);
    static Monomial generator(unsigned n) { return Monomial({n}); }

    const std::vector<unsigned>& generators() const { return gens_; }
    int degree() const { return static_cast<int>(gens_.size()); }

    friend Monomial operator*(const Monomial& a, const Monomial& b);

    /// sup over the cube of the coordinate product; attained where every
    /// participating coordinate is 1, so exactly 1.
    static double sup_norm() { return 1.0; }

    friend bool operator<(const Monomial& a, const Monomial& b) { return a.gens_ < b.gens_; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.gens_ == b.gens_; }

private:
    std::vector<unsigned> gens_; // sorted, nonempty
};

/// Element of the *-algebra generated by the coordinate projections:
/// finite complex combination of monomials. star conjugates coefficients
/// (the generators are real valued).
class CubeAlgebraElement {
public:
    CubeAlgebraElement() = default;
    static CubeAlgebraElement generator(unsigned n) { return term(Monomial::generator(n), {1.0, 0.0}); }
    static CubeAlgebraElement term(Monomial m, CScalar c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, CScalar>& terms() const { return terms_; }
    int max_degree() const;

    friend CubeAlgebraElement operator+(const CubeAlgebraElement& a, const CubeAlgebraElement& b);
    friend CubeAlgebraElement operator-(const CubeAlgebraElement& a, const CubeAlgebraElement& b);
    friend CubeAlgebraElement operator*(const CubeAlgebraElement& a, const CubeAlgebraElement& b);
    CubeAlgebraElement operator-() const;
    CubeAlgebraElement scaled(CScalar s) const;
    CubeAlgebraElement star() const;

    /// Coefficient-sum upper bound for the sup norm (each monomial has sup 1).
    double norm_upper() const;

private:
    std::map<Monomial, CScalar> terms_;
};

} // namespace stellat
