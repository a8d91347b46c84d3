#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pv/ideal.hpp"
#include "pv/parser.hpp"
#include "pv/random_gen.hpp"

using namespace pv;

namespace {
const OperatorSpec kShift = OperatorSpec::shift();

MPoly jp(const VarSpace& vs, const std::string& text) { return parse_jetpoly(kShift, vs, text); }

Jet diag_jet(long b1, long b2, unsigned order = 0) {
    Matrix m(2);
    m.at(0, 0) = scalar_from_int(b1);
    m.at(1, 1) = scalar_from_int(b2);
    return Jet::constant(m, order);
}

Jet antidiag_jet(unsigned order = 0) {
    Matrix m(2);
    m.at(0, 1) = scalar_from_int(1);
    m.at(1, 0) = scalar_from_int(1);
    return Jet::constant(m, order);
}

bool contains(const std::vector<MPoly>& basis, const MPoly& p) {
    return std::find(basis.begin(), basis.end(), p) != basis.end();
}
}  // namespace

TEST_CASE("substitute_gB acts by Y -> YB") {
    VarSpace vs0{0, 2};
    CHECK(substitute_gB(jp(vs0, "Y0_12"), diag_jet(3, 5)) == jp(vs0, "5*Y0_12"));
    CHECK(substitute_gB(jp(vs0, "Y0_12"), antidiag_jet()) == jp(vs0, "Y0_11"));

    Rng rng(7);
    Jet unit = Jet::unit(1, 2);
    VarSpace vs1{1, 2};
    for (const char* t : {"Y0_11*Y1_22 - 3*Y0_12", "Y1_11^2 + x*Y0_21"}) {
        MPoly p = jp(vs1, t);
        CHECK(substitute_gB(p, unit) == p);
    }

    // j=1 Leibniz rule: Y'_{11} -> (Y'B0 + Y B1)_{11}
    Jet b(1, 2);
    b.comp(0) = Matrix::identity(2);
    b.comp(0).at(0, 0) = scalar_from_int(2);
    b.comp(1).at(0, 0) = scalar_from_int(3);
    b.comp(1).at(1, 0) = scalar_from_int(4);
    CHECK(substitute_gB(jp(vs1, "Y1_11"), b) == jp(vs1, "2*Y1_11 + 3*Y0_11 + 4*Y0_12"));
}

TEST_CASE("reduced Groebner bases") {
    VarSpace vs{0, 2};
    std::vector<MPoly> offdiag = {jp(vs, "Y0_12"), jp(vs, "Y0_21")};
    auto g1 = groebner_basis(vs, offdiag);
    REQUIRE(g1.size() == 2);
    CHECK(contains(g1, jp(vs, "Y0_12")));
    CHECK(contains(g1, jp(vs, "Y0_21")));

    auto g2 = groebner_basis(vs, {jp(vs, "Y0_11 - 1"), jp(vs, "Y0_11*Y0_22 - 1")});
    CHECK(contains(g2, jp(vs, "Y0_22 - 1")));

    CHECK(groebner_basis(vs, {}).empty());

    // idempotent
    auto g3 = groebner_basis(vs, g2);
    CHECK(g3 == g2);
}

TEST_CASE("ideal membership") {
    VarSpace vs{0, 2};
    IdealGens I(vs, {jp(vs, "Y0_12"), jp(vs, "Y0_21")});
    CHECK(ideal_member(jp(vs, "Y0_12*Y0_22"), I));
    CHECK_FALSE(ideal_member(jp(vs, "Y0_11"), I));

    MPoly det1 = jp(vs, "Y0_11*Y0_22 - Y0_12*Y0_21 - 1");
    IdealGens sl(vs, {det1});
    CHECK(ideal_member(det1, sl));

    CHECK_THROWS_AS((void)groebner_basis(vs, {jp(vs, "Y0_11"), jp(vs, "Y0_11 + Y0_12")},
                                         GroebnerOptions{0}),
                    BudgetExceeded);
}

TEST_CASE("invariance of the off-diagonal ideal") {
    VarSpace vs{0, 2};
    IdealGens zero(vs, {});
    CHECK(invariance_check(zero, antidiag_jet()));

    IdealGens I(vs, {jp(vs, "Y0_12"), jp(vs, "Y0_21")});
    CHECK(invariance_check(I, diag_jet(2, -3)));
    std::optional<size_t> failing;
    CHECK_FALSE(invariance_check(I, antidiag_jet(), &failing));
    REQUIRE(failing.has_value());
    CHECK(*failing == 0);
}

TEST_CASE("stabilization scan") {
    VarSpace vs0{0, 2};
    VarSpace vs1{1, 2};

    std::vector<IdealGens> flat = {IdealGens(vs0, {}), IdealGens(vs1, {})};
    auto r1 = stabilization_scan(flat, {antidiag_jet(1)});
    CHECK(r1.stabilized);
    CHECK(r1.level == 0);

    std::vector<IdealGens> diag_tower = {
        IdealGens(vs0, {jp(vs0, "Y0_12"), jp(vs0, "Y0_21")}),
        IdealGens(vs1, {jp(vs1, "Y0_12"), jp(vs1, "Y0_21"), jp(vs1, "Y1_12"), jp(vs1, "Y1_21")})};
    auto r2 = stabilization_scan(diag_tower, {diag_jet(1, 2, 1), diag_jet(-1, 1, 1)});
    CHECK(r2.stabilized);
    CHECK(r2.level == 0);

    // order 1 adds a relation that rejects a jet order 0 accepted
    Jet b(1, 1);
    b.comp(0).at(0, 0) = scalar_from_int(1);
    b.comp(1).at(0, 0) = scalar_from_int(1);
    VarSpace w0{0, 1}, w1{1, 1};
    std::vector<IdealGens> adversarial = {IdealGens(w0, {}),
                                          IdealGens(w1, {parse_jetpoly(kShift, w1, "Y1_11")})};
    auto r3 = stabilization_scan(adversarial, {b});
    CHECK_FALSE(r3.stabilized);
    CHECK(r3.level == 1);
    CHECK(r3.verdicts[0][0]);
    CHECK_FALSE(r3.verdicts[0][1]);
}

TEST_CASE("functoriality of the substitution action") {
    Rng rng(11);
    VarSpace vs{1, 2};
    for (int i = 0; i < 20; ++i) {
        Jet b = random_group_jet(rng, 1, 2);
        Jet c = random_group_jet(rng, 1, 2);
        MPoly p(vs);
        for (int t = 0; t < 3; ++t)
            p.add_term({static_cast<unsigned>(rng.range(0, 2)), static_cast<unsigned>(rng.range(0, 1)),
                        static_cast<unsigned>(rng.range(0, 1)), 0, 0, 0, 0, 0},
                       scalar_from_int(rng.range(-3, 3)));
        CHECK(substitute_gB(substitute_gB(p, c), b) == substitute_gB(p, jet_mul(b, c)));
    }
}

TEST_CASE("membership agrees with the dense oracle") {
    Rng rng(13);
    VarSpace vs{2, 1};  // three variables
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<MPoly> gens;
        for (int g = 0; g < 2; ++g) {
            MPoly p(vs);
            for (int t = 0; t < 2; ++t)
                p.add_term({static_cast<unsigned>(rng.range(0, 1)),
                            static_cast<unsigned>(rng.range(0, 1)),
                            static_cast<unsigned>(rng.range(0, 1))},
                           scalar_from_int(rng.range(-2, 2)));
            if (!p.is_zero()) gens.push_back(p);
        }
        MPoly probe(vs);
        for (int t = 0; t < 2; ++t)
            probe.add_term({static_cast<unsigned>(rng.range(0, 1)),
                            static_cast<unsigned>(rng.range(0, 1)),
                            static_cast<unsigned>(rng.range(0, 1))},
                           scalar_from_int(rng.range(-2, 2)));
        if (probe.is_zero() || probe.total_degree() > 3) continue;
        IdealGens I(vs, gens);
        CHECK(ideal_member(probe, I) == dense_membership_oracle(probe, gens, 3));
    }
}

TEST_CASE("accepted jets form a group") {
    VarSpace vs{0, 2};
    IdealGens I(vs, {jp(vs, "Y0_12"), jp(vs, "Y0_21")});
    Jet a = diag_jet(2, 3);
    Jet b = diag_jet(-1, 5);
    REQUIRE(invariance_check(I, a));
    REQUIRE(invariance_check(I, b));
    CHECK(invariance_check(I, jet_mul(a, b)));
    CHECK(invariance_check(I, jet_inv(a)));
}
