#include "wirtinger/params.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "wirtinger/errors.hpp"

namespace wirtinger {
namespace {

std::string format_number(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

std::string lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

Exponent Exponent::finite(double value) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw InadmissibleError("exponent must be a positive finite number or inf, got " +
                                format_number(value));
    }
    return Exponent(value);
}

Exponent Exponent::parse(std::string_view text) {
    const std::string t = lower(text);
    if (t == "inf" || t == "infinity" || t == "+inf") return infinity();
    double v = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw InadmissibleError("cannot parse exponent '" + std::string(text) + "'");
    }
    return finite(v);
}

double Exponent::value() const {
    if (infinite_) throw DomainError("exponent is infinite; no finite value");
    return value_;
}

std::string Exponent::to_string() const { return infinite_ ? "inf" : format_number(value_); }

std::string to_string(Admissibility cls) {
    switch (cls) {
        case Admissibility::Main: return "main";
        case Admissibility::Diagonal: return "diagonal";
        case Admissibility::QOne: return "q_one";
        case Admissibility::PInfinity: return "p_infinity";
        case Admissibility::QInfinity: return "q_infinity";
    }
    return "unknown";
}

Params Params::make(Exponent p, Exponent q, double r) {
    if (!std::isfinite(r)) throw InadmissibleError("r must be finite, got " + format_number(r));
    const std::string triple =
        " (p=" + p.to_string() + ", q=" + q.to_string() + ", r=" + format_number(r) + ")";

    if (p.is_infinite() && q.is_infinite()) {
        throw InadmissibleError("p and q cannot both be infinite" + triple);
    }
    if (p.is_finite() && !(p.value() > 1.0)) {
        throw InadmissibleError("p > 1 violated" + triple);
    }
    if (p.is_infinite()) {
        if (!(r - 1.0 >= 1.0)) throw InadmissibleError("r - 1 >= 1 violated" + triple);
        if (!(q.value() >= r - 1.0)) throw InadmissibleError("q >= r - 1 violated" + triple);
        return Params(p, q, r, Admissibility::PInfinity);
    }
    if (q.is_infinite()) {
        if (r != 2.0) throw InadmissibleError("q = inf requires r = 2" + triple);
        return Params(p, q, r, Admissibility::QInfinity);
    }
    const double qv = q.value();
    if (qv == 1.0 && r == 2.0) return Params(p, q, r, Admissibility::QOne);
    if (r - 1.0 >= 1.0 && qv >= r - 1.0) return Params(p, q, r, Admissibility::Main);
    if (qv == r && qv > 1.0) return Params(p, q, r, Admissibility::Diagonal);
    if (!(r - 1.0 >= 1.0)) {
        throw InadmissibleError("r - 1 >= 1 violated and q != r" + triple);
    }
    throw InadmissibleError("q >= r - 1 violated" + triple);
}

double Params::p_conj() const {
    if (p_.is_infinite()) return 1.0;
    const double pv = p_.value();
    return pv / (pv - 1.0);
}

double Params::equality_threshold() const { return r_ * p() + r_ - 1.0; }

double Params::strict_threshold() const { return (2.0 * r_ - 1.0) * p(); }

std::string Params::to_string() const {
    return "(p=" + p_.to_string() + ", q=" + q_.to_string() + ", r=" + format_number(r_) + ")";
}

void require_main(const Params& prm, const char* what) {
    if (prm.admissibility() != Admissibility::Main) {
        throw InadmissibleError(std::string(what) + " requires p > 1 finite and q >= r - 1 >= 1 " +
                                "with finite q, got " + prm.to_string() + " [" +
                                to_string(prm.admissibility()) + "]");
    }
}

}  // namespace wirtinger
