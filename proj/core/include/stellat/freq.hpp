#pragma once

#include "stellat/interval.hpp"
#include "stellat/rational.hpp"

#include <string>
#include <variant>
#include <vector>

namespace stellat {

/// One frequency component. Exact components carry a rational and support
/// exact merging and period reduction; irrational-mode components carry an
/// opaque double, elements containing them are representable but their
/// norms are only enclosed, never certified.
class Freq {
public:
    Freq() : Freq(Rational(0)) {}
    explicit Freq(Rational r) : exact_(true), rat_(std::move(r)), approx_(rat_.to_double()) {}
    static Freq irrational(double v) {
        Freq f;
        f.exact_ = false;
        f.rat_ = Rational(0);
        f.approx_ = v;
        return f;
    }

    bool is_exact() const { return exact_; }
    const Rational& rational() const { return rat_; }
    double approx() const { return approx_; }
    bool is_zero() const { return exact_ ? rat_.is_zero() : approx_ == 0.0; }

    Freq operator-() const {
        if (exact_) return Freq(-rat_);
        return irrational(-approx_);
    }
    friend Freq operator+(const Freq& a, const Freq& b) {
        if (a.exact_ && b.exact_) return Freq(a.rat_ + b.rat_);
        return irrational(a.approx_ + b.approx_);
    }

    friend bool operator==(const Freq& a, const Freq& b) {
        if (a.exact_ != b.exact_) return false;
        return a.exact_ ? a.rat_ == b.rat_ : a.approx_ == b.approx_;
    }
    friend bool operator<(const Freq& a, const Freq& b) {
        if (a.exact_ != b.exact_) return a.exact_; // exact sorts first
        return a.exact_ ? a.rat_ < b.rat_ : a.approx_ < b.approx_;
    }

    /// Enclosure of the frequency value; exact mode pads the conversion,
    /// irrational mode is definitionally the stored double.
    Ivl enclosure() const { return exact_ ? ivl::from_rational(rat_) : Ivl::point(approx_); }

    std::string str() const { return exact_ ? rat_.str() : std::to_string(approx_); }

private:
    bool exact_ = true;
    Rational rat_;
    double approx_ = 0.0;
};

/// Frequency vector; size equals the element dimension d (d <= 3).
using FreqVec = std::vector<Freq>;

inline bool all_exact(const FreqVec& f) {
    for (const auto& c : f)
        if (!c.is_exact()) return false;
    return true;
}

inline bool is_zero(const FreqVec& f) {
    for (const auto& c : f)
        if (!c.is_zero()) return false;
    return true;
}

inline FreqVec negated(const FreqVec& f) {
    FreqVec r;
    r.reserve(f.size());
    for (const auto& c : f) r.push_back(-c);
    return r;
}

inline FreqVec sum(const FreqVec& a, const FreqVec& b) {
    FreqVec r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
    return r;
}

struct FreqVecLess {
    bool operator()(const FreqVec& a, const FreqVec& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (b[i] < a[i]) return false;
        }
        return false;
    }
};

inline FreqVec freq1(Rational r) { return FreqVec{Freq(std::move(r))}; }

} // namespace stellat
