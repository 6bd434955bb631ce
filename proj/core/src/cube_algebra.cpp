#include "stellat/cube_algebra.hpp"

#include "stellat/config.hpp"
#include "stellat/errors.hpp"

#include <algorithm>
#include <cmath>

namespace stellat {

Monomial::Monomial(std::vector<unsigned> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw InvariantViolation("Monomial: empty generator list (degree >= 1 required)");
    std::sort(gens_.begin(), gens_.end());
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<unsigned> g = a.gens_;
    g.insert(g.end(), b.gens_.begin(), b.gens_.end());
    return Monomial(std::move(g));
}

CubeAlgebraElement CubeAlgebraElement::term(Monomial m, CScalar c) {
    CubeAlgebraElement e;
    if (std::abs(c) > canon::drop_tol()) e.terms_.emplace(std::move(m), c);
    return e;
}

int CubeAlgebraElement::max_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        (void)c;
        d = std::max(d, m.degree());
    }
    return d;
}

CubeAlgebraElement operator+(const CubeAlgebraElement& a, const CubeAlgebraElement& b) {
    CubeAlgebraElement r = a;
    for (const auto& [m, c] : b.terms_) {
        auto [it, inserted] = r.terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (std::abs(it->second) <= canon::drop_tol()) r.terms_.erase(it);
        }
    }
    return r;
}

CubeAlgebraElement operator-(const CubeAlgebraElement& a, const CubeAlgebraElement& b) { return a + (-b); }

CubeAlgebraElement CubeAlgebraElement::operator-() const {
    CubeAlgebraElement r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

CubeAlgebraElement operator*(const CubeAlgebraElement& a, const CubeAlgebraElement& b) {
    CubeAlgebraElement r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            const Monomial m = ma * mb;
            const CScalar c = ca * cb;
            auto [it, inserted] = r.terms_.emplace(m, c);
            if (!inserted) it->second += c;
        }
    for (auto it = r.terms_.begin(); it != r.terms_.end();) {
        if (std::abs(it->second) <= canon::drop_tol())
            it = r.terms_.erase(it);
        else
            ++it;
    }
    return r;
}

CubeAlgebraElement CubeAlgebraElement::scaled(CScalar s) const {
    CubeAlgebraElement r;
    for (const auto& [m, c] : terms_) {
        const CScalar v = c * s;
        if (std::abs(v) > canon::drop_tol()) r.terms_.emplace(m, v);
    }
    return r;
}

CubeAlgebraElement CubeAlgebraElement::star() const {
    CubeAlgebraElement r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, std::conj(c));
    return r;
}

double CubeAlgebraElement::norm_upper() const {
    double s = 0.0;
    for (const auto& [m, c] : terms_) {
        (void)m;
        s += std::abs(c);
    }
    return s;
}

} // namespace stellat
