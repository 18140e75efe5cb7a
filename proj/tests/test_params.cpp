#include <doctest.h>

#include <string>

#include "wirtinger/errors.hpp"
#include "wirtinger/params.hpp"

using namespace wirtinger;

namespace {

std::string rejection(double p, double q, double r) {
    try {
        Params::finite(p, q, r);
    } catch (const InadmissibleError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_SUITE("params") {
    TEST_CASE("exponent parsing") {
        CHECK(Exponent::parse("inf").is_infinite());
        CHECK(Exponent::parse("INF").is_infinite());
        CHECK(Exponent::parse("2.5").value() == 2.5);
        CHECK(Exponent::infinity().reciprocal() == 0.0);
        CHECK_THROWS_AS(Exponent::parse("abc"), InadmissibleError);
        CHECK_THROWS_AS(Exponent::parse("2x"), InadmissibleError);
        CHECK_THROWS_AS(Exponent::finite(-1.0), InadmissibleError);
        CHECK_THROWS_AS(Exponent::infinity().value(), DomainError);
    }

    TEST_CASE("each admissible triple gets exactly one class") {
        CHECK(Params::finite(2, 8, 2).admissibility() == Admissibility::Main);
        CHECK(Params::finite(2, 2, 3).admissibility() == Admissibility::Main);
        CHECK(Params::finite(2, 1.5, 1.5).admissibility() == Admissibility::Diagonal);
        CHECK(Params::finite(2, 1, 2).admissibility() == Admissibility::QOne);
        CHECK(Params::make(Exponent::infinity(), Exponent::finite(3), 2).admissibility() ==
              Admissibility::PInfinity);
        CHECK(Params::make(Exponent::finite(2), Exponent::infinity(), 2).admissibility() ==
              Admissibility::QInfinity);
    }

    TEST_CASE("rejections name the violated constraint") {
        CHECK(rejection(1.0, 2, 2).find("p > 1") != std::string::npos);
        CHECK(rejection(2, 1.5, 3).find("q >= r - 1") != std::string::npos);
        CHECK(rejection(2, 1.2, 1.5).find("r - 1 >= 1") != std::string::npos);
        try {
            Params::make(Exponent::finite(2), Exponent::infinity(), 3);
            FAIL("expected rejection");
        } catch (const InadmissibleError& e) {
            CHECK(std::string(e.what()).find("q = inf requires r = 2") != std::string::npos);
        }
        CHECK_THROWS_AS(Params::make(Exponent::infinity(), Exponent::infinity(), 2),
                        InadmissibleError);
    }

    TEST_CASE("derived quantities") {
        const Params prm = Params::finite(3, 20, 2);
        CHECK(prm.p_conj() == doctest::Approx(1.5));
        CHECK(prm.inv_p_conj() == doctest::Approx(2.0 / 3.0));
        CHECK(prm.equality_threshold() == doctest::Approx(7.0));
        CHECK(prm.strict_threshold() == doctest::Approx(9.0));
        const Params inf = Params::make(Exponent::infinity(), Exponent::finite(2), 2);
        CHECK(inf.p_conj() == 1.0);
        CHECK(inf.inv_p_conj() == 1.0);
        CHECK_THROWS_AS(require_main(inf, "test"), InadmissibleError);
    }
}
