#include "stellat/serialization.hpp"

#include "stellat/errors.hpp"

namespace stellat {

namespace {

Json freq_to_json(const Freq& f) {
    if (f.is_exact()) return Json(f.rational().str());
    return Json(f.approx());
}

Freq freq_from_json(const Json& j) {
    if (j.is_string()) return Freq(Rational::parse(j.get<std::string>()));
    if (j.is_number()) return Freq::irrational(j.get<double>());
    throw InvariantViolation("element json: bad frequency encoding");
}

Json coeff_to_json(const CScalar& c) {
    if (c.imag() == 0.0) return Json(c.real());
    return Json{{"re", c.real()}, {"im", c.imag()}};
}

CScalar coeff_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_object()) return {j.value("re", 0.0), j.value("im", 0.0)};
    throw InvariantViolation("element json: bad coefficient encoding");
}

} // namespace

Json to_json(const FuncElement& a) {
    Json ap = Json::array();
    for (const auto& [f, c] : a.ap().terms()) {
        Json freq;
        if (a.dim() == 1) {
            freq = freq_to_json(f[0]);
        } else {
            freq = Json::array();
            for (const auto& comp : f) freq.push_back(freq_to_json(comp));
        }
        ap.push_back(Json{{"freq", std::move(freq)}, {"re", c.real()}, {"im", c.imag()}});
    }
    Json c0 = Json::array();
    for (const auto& [f, r] : a.c0().terms()) {
        Json num = Json::array();
        for (const auto& c : r.num().coeffs()) num.push_back(coeff_to_json(c));
        Json den = Json::array();
        for (double c : r.den_expanded().coeffs()) den.push_back(c);
        c0.push_back(Json{{"num", std::move(num)}, {"den", std::move(den)}, {"freq", freq_to_json(f)}});
    }
    return Json{{"d", a.dim()}, {"ap", std::move(ap)}, {"c0", std::move(c0)}};
}

FuncElement func_element_from_json(const Json& j) {
    const int d = j.at("d").get<int>();
    if (d < 1 || d > 3) throw InvariantViolation("element json: dimension out of range");
    TrigPoly ap(d);
    for (const auto& t : j.at("ap")) {
        FreqVec f;
        const Json& fj = t.at("freq");
        if (fj.is_array()) {
            for (const auto& comp : fj) f.push_back(freq_from_json(comp));
        } else {
            f.push_back(freq_from_json(fj));
        }
        if (static_cast<int>(f.size()) != d)
            throw InvariantViolation("element json: frequency dimension mismatch");
        ap = ap + TrigPoly::term(std::move(f), CScalar(t.value("re", 0.0), t.value("im", 0.0)));
    }
    ModRatSum c0;
    for (const auto& t : j.at("c0")) {
        if (d != 1) throw InvariantViolation("element json: c0 part requires d = 1");
        std::vector<CScalar> num;
        for (const auto& c : t.at("num")) num.push_back(coeff_from_json(c));
        std::vector<double> den;
        for (const auto& c : t.at("den")) den.push_back(c.get<double>());
        RationalFn r(CPoly(std::move(num)), RPoly(std::move(den)));
        c0 = c0 + ModRatSum::term(std::move(r), freq_from_json(t.at("freq")));
    }
    return {std::move(c0), std::move(ap)};
}

Json to_json(const NormEnclosure& e) {
    return Json{{"lower", e.lower}, {"upper", e.upper}, {"certified", e.certified}, {"width_target", e.width_target}};
}

} // namespace stellat
