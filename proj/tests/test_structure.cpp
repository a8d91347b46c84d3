#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pv/parser.hpp"
#include "pv/random_gen.hpp"
#include "pv/structure.hpp"

using namespace pv;

namespace {
Matrix mat1(const std::string& e) {
    Matrix a(1);
    a.at(0, 0) = parse_ratfunc(OperatorSpec::shift(), e);
    return a;
}
}  // namespace

TEST_CASE("cyclotomic arithmetic") {
    CHECK(cyclotomic_poly(1).degree() == 1);
    Poly<Rational> phi6 = cyclotomic_poly(6);  // x^2 - x + 1
    REQUIRE(phi6.degree() == 2);
    CHECK(phi6.coeff(0) == Rational(1));
    CHECK(phi6.coeff(1) == Rational(-1));
    CHECK(phi6.coeff(2) == Rational(1));

    auto f4 = CycField::make(4);
    CycNum i = f4->root_of_unity(1);
    CHECK(i * i == -f4->one());
    CHECK(i * i * i * i == f4->one());
    CHECK(i.inv() == -i);
}

TEST_CASE("twisted sigma-power products") {
    auto spec = OperatorSpec::shift();
    Matrix a = mat1("x");
    CHECK(sigma_power_product(spec, a, 1) == a);
    CHECK(sigma_power_product(spec, a, 2) == mat1("(x+1)*x"));
    CHECK(sigma_power_product(spec, a, 3) == mat1("(x+2)*(x+1)*x"));
}

TEST_CASE("cocycle law") {
    auto spec = OperatorSpec::shift();
    CHECK(cocycle_check(spec, mat1("x"), 1, 1));
    CHECK(cocycle_check(spec, mat1("x"), 2, 1));

    Rng rng(17);
    for (const auto& s : {OperatorSpec::shift(), OperatorSpec::q_dilation()}) {
        Matrix a = random_invertible_matrix(rng, s, 2, 2);
        for (unsigned pa = 1; pa <= 3; ++pa)
            for (unsigned pb = 1; pb <= 3; ++pb) CHECK(cocycle_check(s, a, pa, pb));
    }
}

TEST_CASE("primitive idempotents of monomial models") {
    MonomialModel triv({1});
    auto e1 = primitive_idempotents(triv);
    REQUIRE(e1.size() == 1);
    CHECK(e1[0] == ModelElem::one(triv));

    // r=2: (1+y)/2 and (1-y)/2
    MonomialModel m2({2});
    auto e2 = primitive_idempotents(m2);
    REQUIRE(e2.size() == 2);
    auto half = m2.constants()->from_rational(Rational(1, 2));
    for (const auto& e : e2) {
        CHECK(e.coeff(0) == half);
        CHECK((e.coeff(1) == half || e.coeff(1) == -half));
    }
    CHECK(e2[0].coeff(1) != e2[1].coeff(1));

    for (unsigned r : {3u, 4u, 6u, 8u}) {
        MonomialModel m({r});
        auto es = primitive_idempotents(m);
        REQUIRE(es.size() == r);
        ModelElem sum = ModelElem::zero(m);
        for (size_t i = 0; i < es.size(); ++i) {
            CHECK(es[i] * es[i] == es[i]);
            for (size_t j = i + 1; j < es.size(); ++j) CHECK((es[i] * es[j]).is_zero());
            sum = sum + es[i];
        }
        CHECK(sum == ModelElem::one(m));
    }
}

TEST_CASE("sigma-orbit decomposition matches the exponent") {
    for (unsigned r : {1u, 2u, 3u, 4u, 6u}) {
        auto rep = sigma_orbits(MonomialModel({r}));
        CHECK(rep.num_idempotents == r);
        CHECK(rep.single_orbit);
        CHECK(rep.l == r);
        CHECK(rep.sigma_l_fixes_all);
    }

    // r=4: sigma^2 fixes no primitive idempotent
    MonomialModel m4({4});
    auto es = primitive_idempotents(m4);
    for (const auto& e : es) CHECK(e.apply_sigma().apply_sigma() != e);
}

TEST_CASE("automorphism groups") {
    auto g1 = enumerate_automorphisms(MonomialModel({1}));
    CHECK(g1.order() == 1);
    CHECK(g1.is_cyclic);

    MonomialModel m2({2});
    auto g2 = enumerate_automorphisms(m2);
    CHECK(g2.order() == 2);
    CHECK(g2.is_cyclic);
    ModelElem y(&m2, {m2.constants()->zero(), m2.constants()->one()});
    bool saw_neg = false;
    for (const auto& g : g2.elements) {
        auto gy = apply_automorphism(m2, g, y);
        if (gy == y.scaled(-m2.constants()->one())) saw_neg = true;
    }
    CHECK(saw_neg);

    CHECK(enumerate_automorphisms(MonomialModel({6})).order() == 6);
    CHECK(enumerate_automorphisms(MonomialModel({6})).is_cyclic);
}

TEST_CASE("exact sequence on the single-orbit family") {
    for (unsigned r : {1u, 2u, 4u}) {
        auto rep = exact_sequence_check(MonomialModel({r}));
        CHECK(rep.exact);
        CHECK(rep.l == r);
        CHECK(rep.group_order == r);
        CHECK(rep.kernel_order == 1);
        CHECK(rep.surjective);
        CHECK(rep.homomorphism);
        CHECK(rep.group_order == rep.kernel_order * rep.l);
    }
}

TEST_CASE("orbit length equals the multiplicative order of the eigenvalue") {
    for (unsigned r : {1u, 2u, 3u, 4u, 6u, 8u}) {
        MonomialModel m({r});
        // order of zeta_N^{N/r} acting on y
        CycNum z = m.sigma_eigenvalue(m.index_of({r > 1 ? 1u : 0u}));
        unsigned ord = 1;
        CycNum p = z;
        while (p != m.constants()->one()) {
            p = p * z;
            ++ord;
        }
        CHECK(ord == sigma_orbits(m).l);
    }
}
