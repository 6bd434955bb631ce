#include "stellat/norm.hpp"

#include "stellat/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <queue>
#include <vector>

namespace stellat {

namespace {

double sqrt_up(double x) { return x <= 0.0 ? 0.0 : ivl::next_up(std::sqrt(x)); }
double sqrt_dn(double x) { return x <= 0.0 ? 0.0 : std::max(0.0, ivl::next_down(std::sqrt(x))); }

// ---------------------------------------------------------------------------
// Evaluation plan.
//
// Terms are grouped by the canonical absolute frequency mu (lambda = sigma*mu
// with the first nonzero component of mu positive). An exact conjugate pair
// {c e^{i lam x}, conj(c) e^{-i lam x}} is a real function and contributes
//   2*re(c) cos(theta) - 2*im(c at +mu) sin(theta),  theta = mu.x,
// with exactly zero imaginary part. Unpaired terms contribute
//   re   += a cos(theta) - sb sin(theta)
//   im   += sigma * (a sin(theta) + sb cos(theta)),   sb = sigma * im(c).
// Under the star involution a term maps to (-lambda, conj c): a and sb are
// unchanged and only sigma flips, so the star'd plan is positionally
// identical with the imaginary contributions exactly negated. That makes the
// computed enclosures of a and star(a) bit-identical.
// ---------------------------------------------------------------------------

struct TrigGroup {
    std::array<Ivl, 3> mu_ivl{};
    double ca = 0.0;  // re coefficient of cos(theta) in the re part
    double csb = 0.0; // coefficient of sin(theta) in the re part
    int sigma = 1;
    bool real_pair = false;
};

struct C0Group {
    Ivl mu_ivl;
    RPoly re_poly;   // real part of the numerator (doubled for pairs)
    RPoly sim_poly;  // sigma * imag part of the numerator (doubled for pairs)
    std::vector<RationalFn::Factor> den;
    int sigma = 1;
    bool real_pair = false;
};

struct Evaluator {
    int dim = 1;
    std::vector<TrigGroup> trig;
    std::vector<C0Group> c0;

    Ivl eval_sq(const std::array<Ivl, 3>& x) const {
        Ivl re = Ivl::point(0.0), im = Ivl::point(0.0);
        for (const auto& g : trig) {
            Ivl theta = Ivl::point(0.0);
            for (int k = 0; k < dim; ++k) theta = ivl::add(theta, ivl::mul(g.mu_ivl[k], x[k]));
            const Ivl c = ivl::cos(theta), s = ivl::sin(theta);
            re = ivl::add(re, ivl::sub(ivl::scale(c, g.ca), ivl::scale(s, g.csb)));
            if (!g.real_pair) {
                const Ivl inner = ivl::add(ivl::scale(s, g.ca), ivl::scale(c, g.csb));
                im = ivl::add(im, g.sigma > 0 ? inner : ivl::neg(inner));
            }
        }
        for (const auto& g : c0) {
            Ivl den = Ivl::point(1.0);
            for (const auto& [f, m] : g.den) {
                const Ivl fv = eval_ivl(f, x[0]);
                for (int k = 0; k < m; ++k) den = ivl::mul(den, fv);
            }
            const Ivl R = ivl::div(eval_ivl(g.re_poly, x[0]), den);
            const Ivl SIM = ivl::div(eval_ivl(g.sim_poly, x[0]), den);
            const Ivl theta = ivl::mul(g.mu_ivl, x[0]);
            const Ivl c = ivl::cos(theta), s = ivl::sin(theta);
            re = ivl::add(re, ivl::sub(ivl::mul(R, c), ivl::mul(SIM, s)));
            if (!g.real_pair) {
                const Ivl inner = ivl::add(ivl::mul(R, s), ivl::mul(SIM, c));
                im = ivl::add(im, g.sigma > 0 ? inner : ivl::neg(inner));
            }
        }
        return ivl::add(ivl::sqr(re), ivl::sqr(im));
    }
};

int canonical_sign(const FreqVec& f) {
    for (const auto& c : f) {
        if (c.is_zero()) continue;
        const bool neg = c.is_exact() ? c.rational().sign() < 0 : c.approx() < 0.0;
        return neg ? -1 : 1;
    }
    return 1;
}

FreqVec abs_canonical(const FreqVec& f) { return canonical_sign(f) < 0 ? negated(f) : f; }

std::vector<TrigGroup> build_trig_plan(const TrigPoly& ap) {
    struct Member {
        FreqVec lambda;
        CScalar c;
        int sigma;
    };
    std::map<FreqVec, std::vector<Member>, FreqVecLess> groups;
    for (const auto& [f, c] : ap.terms())
        groups[abs_canonical(f)].push_back({f, c, canonical_sign(f)});

    std::vector<TrigGroup> plan;
    for (const auto& [mu, members] : groups) {
        TrigGroup base;
        for (int k = 0; k < static_cast<int>(mu.size()); ++k) base.mu_ivl[k] = mu[k].enclosure();
        if (members.size() == 2 && members[0].c.real() == members[1].c.real() &&
            members[0].c.imag() == -members[1].c.imag()) {
            const Member& plus = members[0].sigma > 0 ? members[0] : members[1];
            TrigGroup g = base;
            g.real_pair = true;
            g.ca = 2.0 * plus.c.real();
            g.csb = 2.0 * plus.c.imag();
            plan.push_back(g);
            continue;
        }
        std::vector<TrigGroup> singles;
        for (const Member& m : members) {
            TrigGroup g = base;
            g.ca = m.c.real();
            g.csb = m.sigma > 0 ? m.c.imag() : -m.c.imag();
            g.sigma = m.sigma;
            singles.push_back(g);
        }
        std::sort(singles.begin(), singles.end(), [](const TrigGroup& a, const TrigGroup& b) {
            if (a.ca != b.ca) return a.ca < b.ca;
            if (a.csb != b.csb) return a.csb < b.csb;
            return a.sigma < b.sigma;
        });
        for (auto& g : singles) plan.push_back(std::move(g));
    }
    return plan;
}

std::vector<C0Group> build_c0_plan(const ModRatSum& c0) {
    struct Member {
        Freq lambda;
        const RationalFn* r;
        int sigma;
    };
    std::map<Freq, std::vector<Member>> groups;
    for (const auto& [f, r] : c0.terms()) {
        const bool neg = f.is_exact() ? f.rational().sign() < 0 : f.approx() < 0.0;
        groups[neg ? -f : f].push_back({f, &r, neg ? -1 : 1});
    }
    std::vector<C0Group> plan;
    for (const auto& [mu, members] : groups) {
        C0Group base;
        base.mu_ivl = mu.enclosure();
        if (members.size() == 2 && *members[0].r == members[1].r->conj()) {
            const Member& plus = members[0].sigma > 0 ? members[0] : members[1];
            C0Group g = base;
            g.real_pair = true;
            g.re_poly = real_part(plus.r->num()).scaled(2.0);
            g.sim_poly = imag_part(plus.r->num()).scaled(2.0);
            g.den = plus.r->den_factors();
            plan.push_back(std::move(g));
            continue;
        }
        std::vector<C0Group> singles;
        for (const Member& m : members) {
            C0Group g = base;
            g.re_poly = real_part(m.r->num());
            g.sim_poly = m.sigma > 0 ? imag_part(m.r->num()) : -imag_part(m.r->num());
            g.den = m.r->den_factors();
            g.sigma = m.sigma;
            singles.push_back(std::move(g));
        }
        std::sort(singles.begin(), singles.end(), [](const C0Group& a, const C0Group& b) {
            if (a.re_poly.coeffs() != b.re_poly.coeffs()) return a.re_poly.coeffs() < b.re_poly.coeffs();
            if (a.sim_poly.coeffs() != b.sim_poly.coeffs()) return a.sim_poly.coeffs() < b.sim_poly.coeffs();
            return a.sigma < b.sigma;
        });
        for (auto& g : singles) plan.push_back(std::move(g));
    }
    return plan;
}

// ---------------------------------------------------------------------------
// Period of the almost periodic part, one axis at a time. For frequencies
// p_i/q_i (not all zero along the axis) the minimal common period is
// 2*pi * L / g with L = lcm(q_i) and g = gcd(p_i * L / q_i); covering the
// upper bound of one period is enough for the sup.
// ---------------------------------------------------------------------------
std::array<Ivl, 3> torus_domain(const TrigPoly& ap) {
    std::array<Ivl, 3> dom{Ivl::point(0.0), Ivl::point(0.0), Ivl::point(0.0)};
    for (int axis = 0; axis < ap.dim(); ++axis) {
        BigInt L = 1, g = 0;
        bool any = false;
        for (const auto& [f, c] : ap.terms()) {
            (void)c;
            const Rational& lam = f[axis].rational();
            if (lam.is_zero()) continue;
            any = true;
            L = lcm(L, lam.denominator());
        }
        if (!any) continue;
        for (const auto& [f, c] : ap.terms()) {
            (void)c;
            const Rational& lam = f[axis].rational();
            if (lam.is_zero()) continue;
            BigInt scaled = lam.numerator() * (L / lam.denominator());
            if (scaled < 0) scaled = -scaled;
            g = gcd(g, scaled);
        }
        const Ivl period = ivl::mul(ivl::two_pi(), ivl::from_rational(Rational(L, g)));
        dom[axis] = Ivl(0.0, period.hi);
    }
    return dom;
}

// ---------------------------------------------------------------------------
// Branch and bound maximization of F(x) = |a(x)|^2.
// ---------------------------------------------------------------------------

struct TailSpec {
    double r0 = 0.0;    // envelope validity radius
    double env_c = 0.0; // |c0(x)| <= env_c / |x| for |x| >= r0
    double ap_hi = 0.0; // certified upper bound of sup |ap|
};

struct Entry {
    double ub = 0.0;
    std::array<Ivl, 3> x{};
    bool is_tail = false;
    double tail_u = 0.0;
};

struct EntryLess {
    bool operator()(const Entry& a, const Entry& b) const {
        if (a.ub != b.ub) return a.ub < b.ub;
        if (a.is_tail != b.is_tail) return a.is_tail;
        for (int k = 0; k < 3; ++k) {
            if (a.x[k].lo != b.x[k].lo) return a.x[k].lo < b.x[k].lo;
            if (a.x[k].hi != b.x[k].hi) return a.x[k].hi < b.x[k].hi;
        }
        return a.tail_u < b.tail_u;
    }
};

struct BbResult {
    double f_lo = 0.0;
    double f_ub = 0.0;
    std::array<double, 3> witness{};
    bool witness_probed = false;
};

double tail_bound_sq(const TailSpec& t, double u) {
    const double env = ivl::next_up(t.env_c / u);
    const double s = ivl::next_up(t.ap_hi + env);
    return ivl::next_up(s * s);
}

BbResult bb_max(const Evaluator& ev, const std::array<Ivl, 3>& domain, double tol,
                std::int64_t& budget, const TailSpec* tail, double seed_f_lo) {
    std::priority_queue<Entry, std::vector<Entry>, EntryLess> queue;
    BbResult out;
    double best = seed_f_lo;
    double best_probe = -1.0;
    double resolved = seed_f_lo;

    auto spend = [&budget]() {
        if (--budget < 0)
            throw ToleranceUnreachable("norm_enclosure: subdivision budget exhausted");
    };

    auto eval_box = [&](const std::array<Ivl, 3>& bx) {
        spend();
        Ivl f = ev.eval_sq(bx);
        double ub = f.hi;
        if (tail != nullptr) {
            const double lo_abs =
                (bx[0].lo <= 0.0 && bx[0].hi >= 0.0) ? 0.0 : std::min(std::fabs(bx[0].lo), std::fabs(bx[0].hi));
            if (lo_abs >= tail->r0) ub = std::min(ub, tail_bound_sq(*tail, lo_abs));
        }
        spend();
        const std::array<double, 3> mid{bx[0].mid(), bx[1].mid(), bx[2].mid()};
        const std::array<Ivl, 3> m{Ivl::point(mid[0]), Ivl::point(mid[1]), Ivl::point(mid[2])};
        const double probe = ev.eval_sq(m).lo;
        if (probe > best_probe) {
            best_probe = probe;
            out.witness = mid;
            out.witness_probed = true;
        }
        best = std::max(best, probe);
        if (ub > best) queue.push(Entry{ub, bx, false, 0.0});
    };

    if (tail != nullptr)
        queue.push(Entry{tail_bound_sq(*tail, tail->r0), {}, true, tail->r0});
    eval_box(domain);

    while (!queue.empty()) {
        const Entry top = queue.top();
        queue.pop();
        const double global_ub = std::max({top.ub, resolved, best});
        if (sqrt_up(global_ub) - sqrt_dn(best) <= tol) {
            out.f_lo = best;
            out.f_ub = global_ub;
            return out;
        }
        if (top.is_tail) {
            const double u = top.tail_u;
            eval_box({Ivl(u, 2 * u), {}, {}});
            eval_box({Ivl(-2 * u, -u), {}, {}});
            queue.push(Entry{tail_bound_sq(*tail, 2 * u), {}, true, 2 * u});
            continue;
        }
        if (top.ub <= best) continue;
        int widest = 0;
        for (int k = 1; k < ev.dim; ++k)
            if (top.x[k].width() > top.x[widest].width()) widest = k;
        const double m = top.x[widest].mid();
        if (!(m > top.x[widest].lo) || !(m < top.x[widest].hi)) {
            // box is no longer splittable; its upper bound is final
            resolved = std::max(resolved, top.ub);
            if (sqrt_up(resolved) - sqrt_dn(best) > tol)
                throw ToleranceUnreachable("norm_enclosure: unsplittable box above tolerance");
            continue;
        }
        std::array<Ivl, 3> left = top.x, right = top.x;
        left[widest] = Ivl(top.x[widest].lo, m);
        right[widest] = Ivl(m, top.x[widest].hi);
        eval_box(left);
        eval_box(right);
    }
    out.f_lo = best;
    out.f_ub = std::max(best, resolved);
    return out;
}

// ---------------------------------------------------------------------------
// Uncertified fallback for irrational-mode elements: dense-sampling lower
// bound, coefficient-sum upper bound.
// ---------------------------------------------------------------------------
NormEnclosure uncertified_enclosure(const FuncElement& a, double tol) {
    const auto [r0, env_c] = a.c0().decay_envelope();
    double min_freq = 0.0;
    for (const auto& [f, c] : a.ap().terms()) {
        (void)c;
        for (const auto& comp : f) {
            const double v = std::fabs(comp.approx());
            if (v > 0.0 && (min_freq == 0.0 || v < min_freq)) min_freq = v;
        }
    }
    const double span = std::max({2.0 * r0, 32.0, min_freq > 0.0 ? 64.0 / min_freq : 0.0});

    double lower = 0.0;
    std::vector<double> witness(static_cast<std::size_t>(a.dim()), 0.0);
    if (a.dim() == 1) {
        const int n = 10000;
        for (int i = 0; i <= n; ++i) {
            const double x = -span + 2.0 * span * i / n;
            const double v = std::abs(a.eval(x));
            if (v > lower) {
                lower = v;
                witness[0] = x;
            }
        }
    } else {
        const int n = 24;
        std::vector<double> x(static_cast<std::size_t>(a.dim()));
        const int total = static_cast<int>(std::pow(n + 1, a.dim()));
        for (int idx = 0; idx < total; ++idx) {
            int rest = idx;
            for (int k = 0; k < a.dim(); ++k) {
                x[static_cast<std::size_t>(k)] = -span + 2.0 * span * (rest % (n + 1)) / n;
                rest /= (n + 1);
            }
            const double v = std::abs(a.eval(x));
            if (v > lower) {
                lower = v;
                witness = x;
            }
        }
    }

    Ivl upper = Ivl::point(0.0);
    for (const auto& [f, c] : a.ap().terms()) {
        (void)f;
        upper = ivl::add(upper, Ivl(0.0, ivl::next_up(std::abs(c))));
    }
    for (const auto& [f, r] : a.c0().terms()) {
        (void)f;
        const auto [tr0, tc] = r.decay_envelope();
        double peak = ivl::next_up(tc / tr0);
        const int slices = 256;
        for (int i = 0; i < slices; ++i) {
            const Ivl seg(-tr0 + 2 * tr0 * i / slices, -tr0 + 2 * tr0 * (i + 1) / slices);
            const auto [re, im] = r.eval_ivl(seg);
            peak = std::max(peak, ivl::sqrt(ivl::add(ivl::sqr(re), ivl::sqr(im))).hi);
        }
        upper = ivl::add(upper, Ivl(0.0, peak));
    }
    return {lower, std::max(upper.hi, lower), false, tol, std::move(witness)};
}

} // namespace

NormEnclosure norm_enclosure(const FuncElement& a, double tol, const BbConfig& cfg) {
    if (!(tol > 0.0)) throw ConfigError("norm_enclosure: tol must be positive");
    if (a.is_zero())
        return {0.0, 0.0, true, tol, std::vector<double>(static_cast<std::size_t>(a.dim()), 0.0)};
    if (!a.all_freqs_exact()) return uncertified_enclosure(a, tol);

    std::int64_t budget = cfg.budget;

    Evaluator ap_ev;
    ap_ev.dim = a.dim();
    ap_ev.trig = build_trig_plan(a.ap());

    BbResult q;
    const bool mixed = !a.c0_empty();
    if (!a.ap_empty()) {
        const double ap_tol = mixed ? tol / 4.0 : tol;
        q = bb_max(ap_ev, torus_domain(a.ap()), ap_tol, budget, nullptr, 0.0);
    }
    if (!mixed) {
        std::vector<double> w(q.witness.begin(), q.witness.begin() + a.dim());
        return {sqrt_dn(q.f_lo), sqrt_up(q.f_ub), true, tol, std::move(w)};
    }

    // Mixed element (dimension 1). The far region contributes at least the
    // ap sup (the decaying part vanishes along the period translates of any
    // near-maximum of ap), which seeds the lower bound; beyond the envelope
    // radius the cheap bound (ap_hi + C/u)^2 caps every box and the tail.
    Evaluator full_ev;
    full_ev.dim = 1;
    full_ev.trig = ap_ev.trig;
    full_ev.c0 = build_c0_plan(a.c0());

    const auto [r0, env_c] = a.c0().decay_envelope();
    TailSpec tail{r0, env_c, sqrt_up(q.f_ub)};
    const std::array<Ivl, 3> core{Ivl(-r0, r0), {}, {}};
    const BbResult f = bb_max(full_ev, core, tol, budget, &tail, q.f_lo);
    return {sqrt_dn(f.f_lo), sqrt_up(f.f_ub), true, tol, {f.witness[0]}};
}

} // namespace stellat
