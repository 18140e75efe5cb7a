#pragma once

#include <string>
#include <string_view>

namespace wirtinger {

/// A Lebesgue exponent: a positive finite real or an explicit infinity tag.
class Exponent {
public:
    static Exponent finite(double value);
    static Exponent infinity() { return Exponent(); }
    /// Accepts a decimal literal or "inf"/"infinity" (case-insensitive).
    static Exponent parse(std::string_view text);

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    /// Throws DomainError for the infinite exponent.
    double value() const;
    /// 1/value, with 1/inf = 0.
    double reciprocal() const { return infinite_ ? 0.0 : 1.0 / value_; }
    std::string to_string() const;

    friend bool operator==(const Exponent&, const Exponent&) = default;

private:
    Exponent() = default;
    explicit Exponent(double v) : infinite_(false), value_(v) {}

    bool infinite_ = true;
    double value_ = 0.0;
};

enum class Admissibility {
    Main,       // p > 1, q >= r - 1 >= 1
    Diagonal,   // q = r > 1 outside Main (1 < q = r < 2)
    QOne,       // q = 1, r = 2
    PInfinity,  // p = inf, q >= r - 1 >= 1
    QInfinity,  // q = inf, r = 2
};

std::string to_string(Admissibility cls);

/// The exponent triple (p, q, r). Construction classifies the triple and
/// rejects anything outside the five admissibility classes.
class Params {
public:
    static Params make(Exponent p, Exponent q, double r);
    static Params finite(double p, double q, double r) {
        return make(Exponent::finite(p), Exponent::finite(q), r);
    }

    const Exponent& p_exponent() const { return p_; }
    const Exponent& q_exponent() const { return q_; }
    /// Finite values; throw DomainError when the exponent is infinite.
    double p() const { return p_.value(); }
    double q() const { return q_.value(); }
    double r() const { return r_; }
    /// Conjugate exponent p' = p / (p - 1); 1 when p = inf.
    double p_conj() const;
    /// 1/p' = 1 - 1/p.
    double inv_p_conj() const { return 1.0 - p_.reciprocal(); }
    Admissibility admissibility() const { return cls_; }

    /// The closed-form threshold r p + r - 1 (equality below or at it).
    double equality_threshold() const;
    /// (2r - 1) p (strict inequality above it).
    double strict_threshold() const;

    std::string to_string() const;

private:
    Params(Exponent p, Exponent q, double r, Admissibility cls)
        : p_(p), q_(q), r_(r), cls_(cls) {}

    Exponent p_;
    Exponent q_;
    double r_;
    Admissibility cls_;
};

/// Throws InadmissibleError unless prm is in the Main class; `what` names the
/// calling operation in the message.
void require_main(const Params& prm, const char* what);

}  // namespace wirtinger
