#include <doctest.h>

#include "reesdeg/filtration.hpp"

using namespace reesdeg;

namespace {

Ideal ideal_of(const RingPtr& R, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> ps;
    for (const char* g : gens) ps.push_back(parse_polynomial(R, g));
    return Ideal(R, ps);
}

}  // namespace

TEST_CASE("reduction numbers") {
    auto R = PolyRing::make({"x", "y"});
    TermOrder ord = TermOrder::grevlex();

    Ideal I = ideal_of(R, {"x^2", "x*y", "y^2"});
    CHECK(reduction_number(I, I, 3, ord) == 0u);

    Ideal J = ideal_of(R, {"x^2", "y^2"});
    CHECK(reduction_number(J, I, 3, ord) == 1u);
    // m^4 = (x^2,y^2) m^2 by a monomial check
    MonomialIdeal m2 = I.to_monomial_ideal();
    CHECK(J.to_monomial_ideal() * m2 == m2.pow(2));

    CHECK(reduction_number(J, Ideal(m2), 0, ord) == std::nullopt);
    CHECK_THROWS_AS(reduction_number(ideal_of(R, {"x^2", "y"}), I, 2, ord),
                    Error);  // y does not lie in m^2
}

TEST_CASE("the five-generator example has reduction number two") {
    auto R = PolyRing::make({"x", "y", "z"});
    TermOrder ord = TermOrder::grevlex();
    Ideal I = ideal_of(R, {"x^2", "y^2", "z^2", "x*y - x*z", "x*z - y*z"});
    Ideal J = ideal_of(R, {"x^2", "y^2", "z^2"});
    CHECK(reduction_number(J, I, 5, ord) == 2u);
}

TEST_CASE("f-sequences") {
    auto R = PolyRing::make({"x", "y", "z"});
    TermOrder ord = TermOrder::grevlex();
    Ideal I = ideal_of(R, {"x^2", "y^2", "z^2", "x*y - x*z", "x*z - y*z"});
    Ideal J = ideal_of(R, {"x^2", "y^2", "z^2"});

    FSequence f = f_sequence(I, J, 3, ord);
    CHECK(f.values == std::vector<Integer>{3, 3, 0});
    CHECK(f.reduction_number == 2u);

    auto R2 = PolyRing::make({"x", "y"});
    Ideal m2 = ideal_of(R2, {"x^2", "x*y", "y^2"});
    Ideal J2 = ideal_of(R2, {"x^2", "y^2"});
    FSequence f2 = f_sequence(m2, J2, 3, ord);
    CHECK(f2.values == std::vector<Integer>{1, 0, 0});
    CHECK(f2.reduction_number == 1u);

    FSequence f3 = f_sequence(J2, J2, 3, ord);
    CHECK(f3.values == std::vector<Integer>{0, 0, 0});
    CHECK(f3.reduction_number == 0u);
}

TEST_CASE("huckaba verdicts") {
    TermOrder ord = TermOrder::grevlex();

    auto R2 = PolyRing::make({"x", "y"});
    HuckabaReport almost = huckaba_test(ideal_of(R2, {"x^2", "x*y", "y^2"}),
                                        ideal_of(R2, {"x^2", "y^2"}), 4, ord);
    CHECK(almost.verdict == HuckabaVerdict::AlmostCM);
    CHECK(almost.e1 == 1);
    CHECK(almost.f_sum == 1);

    auto R3 = PolyRing::make({"x", "y", "z"});
    HuckabaReport not_acm = huckaba_test(
        ideal_of(R3, {"x^2", "y^2", "z^2", "x*y - x*z", "x*z - y*z"}),
        ideal_of(R3, {"x^2", "y^2", "z^2"}), 4, ord);
    CHECK(not_acm.verdict == HuckabaVerdict::NotAlmostCM);
    CHECK(not_acm.e1 == 4);
    CHECK(not_acm.f_sum == 6);
    REQUIRE(not_acm.sally_multiplicity.has_value());
    CHECK(*not_acm.sally_multiplicity == 1);

    HuckabaReport param = huckaba_test(ideal_of(R2, {"x^2", "y^2"}),
                                       ideal_of(R2, {"x^2", "y^2"}), 4, ord);
    CHECK(param.verdict == HuckabaVerdict::AlmostCM);
    CHECK(param.e1 == 0);
    CHECK(param.f_sum == 0);

    // no reduction in the window: inconclusive
    HuckabaReport inc = huckaba_test(ideal_of(R2, {"x^2", "x*y", "y^2"}),
                                     ideal_of(R2, {"x^3", "y^3"}), 3, ord);
    CHECK(inc.verdict == HuckabaVerdict::Inconclusive);
}

TEST_CASE("e1 never exceeds the f-sum") {
    TermOrder ord = TermOrder::grevlex();
    auto R2 = PolyRing::make({"x", "y"});
    std::vector<std::pair<Ideal, Ideal>> cases;
    cases.emplace_back(ideal_of(R2, {"x^3", "x^2*y", "y^3"}),
                       ideal_of(R2, {"x^3", "y^3"}));
    cases.emplace_back(ideal_of(R2, {"x^4", "x^3*y", "y^4"}),
                       ideal_of(R2, {"x^4", "y^4"}));
    cases.emplace_back(ideal_of(R2, {"x^4", "x^2*y^2", "y^4"}),
                       ideal_of(R2, {"x^4", "y^4"}));
    cases.emplace_back(ideal_of(R2, {"x^2", "x*y", "y^2"}),
                       ideal_of(R2, {"x^2", "y^2"}));
    for (auto& [I, J] : cases) {
        HuckabaReport r = huckaba_test(I, J, 8, ord);
        REQUIRE(r.verdict != HuckabaVerdict::Inconclusive);
        CHECK(r.e1 <= r.f_sum);
    }
}

TEST_CASE("multiplicity is invariant under reduction") {
    TermOrder ord = TermOrder::grevlex();
    auto R2 = PolyRing::make({"x", "y"});
    std::vector<std::pair<Ideal, Ideal>> cases;
    cases.emplace_back(ideal_of(R2, {"x^2", "x*y", "y^2"}),
                       ideal_of(R2, {"x^2", "y^2"}));
    cases.emplace_back(ideal_of(R2, {"x^4", "x^3*y", "y^4"}),
                       ideal_of(R2, {"x^4", "y^4"}));
    for (auto& [I, J] : cases) {
        CHECK(samuel_fit_auto(I, ord).e[0] == samuel_fit_auto(J, ord).e[0]);
    }
}

TEST_CASE("reduction number is monotone under enlarging J") {
    auto R = PolyRing::make({"x", "y"});
    TermOrder ord = TermOrder::grevlex();
    Ideal I = ideal_of(R, {"x^4", "x^3*y", "x*y^3", "y^4"});
    Ideal small = ideal_of(R, {"x^4", "y^4"});
    Ideal large = ideal_of(R, {"x^4", "y^4", "x^3*y"});
    auto r_small = reduction_number(small, I, 8, ord);
    auto r_large = reduction_number(large, I, 8, ord);
    REQUIRE(r_small.has_value());
    REQUIRE(r_large.has_value());
    CHECK(*r_large <= *r_small);
}

TEST_CASE("reduction bound check") {
    TermOrder ord = TermOrder::grevlex();

    auto R2 = PolyRing::make({"x", "y"});
    ReductionBoundReport b1 = reduction_bound_check(
        ideal_of(R2, {"x^2", "x*y", "y^2"}), ideal_of(R2, {"x^2", "y^2"}), ord);
    CHECK(b1.r == 1);
    CHECK(b1.bound == 5);  // 2*4 - 3
    CHECK(b1.holds);

    auto R3 = PolyRing::make({"x", "y", "z"});
    ReductionBoundReport b2 = reduction_bound_check(
        ideal_of(R3, {"x^2", "y^2", "z^2", "x*y - x*z", "x*z - y*z"}),
        ideal_of(R3, {"x^2", "y^2", "z^2"}), ord);
    CHECK(b2.r == 2);
    CHECK(b2.bound == 19);  // 3*8 - 5
    CHECK(b2.holds);

    ReductionBoundReport b3 = reduction_bound_check(
        ideal_of(R2, {"x^2", "y^2"}), ideal_of(R2, {"x^2", "y^2"}), ord);
    CHECK(b3.r == 0);
    CHECK(b3.holds);
}

TEST_CASE("default window realizes the universal bound") {
    auto R = PolyRing::make({"x", "y"});
    CHECK(default_reduction_window(Ideal(ideal_of(R, {"x^2", "y^2"})),
                                   TermOrder::grevlex()) == 5u);
}
