#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pv/parser.hpp"
#include "pv/prolong.hpp"
#include "pv/random_gen.hpp"

using namespace pv;

namespace {
Matrix mat1(const std::string& e) {
    Matrix a(1);
    a.at(0, 0) = parse_ratfunc(OperatorSpec::shift(), e);
    return a;
}
Scalar sc(const std::string& e) { return parse_ratfunc(OperatorSpec::shift(), e); }
}  // namespace

TEST_CASE("prolong_system builds the binomial block pattern") {
    auto spec = OperatorSpec::shift();

    auto sys0 = prolong_system(spec, mat1("x"), 0);
    CHECK(sys0.blocks.flatten() == mat1("x"));

    // A = [[x]]: A' = 1, A'' = 0, rows [x,0,0],[1,x,0],[0,2,x]
    auto sys2 = prolong_system(spec, mat1("x"), 2);
    Matrix f = sys2.blocks.flatten();
    CHECK(f.at(0, 0) == sc("x"));
    CHECK(f.at(1, 0) == sc("1"));
    CHECK(f.at(1, 1) == sc("x"));
    CHECK(f.at(2, 0) == sc("0"));
    CHECK(f.at(2, 1) == sc("2"));
    CHECK(f.at(2, 2) == sc("x"));
    CHECK(sys2.blocks.is_lower_triangular());

    auto sys1 = prolong_system(spec, mat1("x^2"), 1);
    Matrix g = sys1.blocks.flatten();
    CHECK(g.at(0, 0) == sc("x^2"));
    CHECK(g.at(1, 0) == sc("2*x"));
    CHECK(g.at(1, 1) == sc("x^2"));

    CHECK_THROWS_AS(prolong_system(spec, Matrix::zero(1), 1), std::domain_error);
}

TEST_CASE("formal solution block carries binomial-scaled X symbols") {
    MPolyMat x1 = formal_solution_block(1, 1);
    VarSpace vs{1, 1};
    CHECK(x1.at(0, 0) == MPoly::variable(vs, vs.id(0, 0, 0)));
    CHECK(x1.at(0, 1).is_zero());
    CHECK(x1.at(1, 0) == MPoly::variable(vs, vs.id(1, 0, 0)));
    CHECK(x1.at(1, 1) == MPoly::variable(vs, vs.id(0, 0, 0)));

    MPolyMat x3 = formal_solution_block(3, 1);
    VarSpace vs3{3, 1};
    CHECK(x3.at(3, 0) == MPoly::variable(vs3, vs3.id(3, 0, 0)));
    CHECK(x3.at(3, 1) == MPoly::variable(vs3, vs3.id(2, 0, 0)) * scalar_from_int(3));
    CHECK(x3.at(3, 2) == MPoly::variable(vs3, vs3.id(1, 0, 0)) * scalar_from_int(3));
    CHECK(x3.at(3, 3) == MPoly::variable(vs3, vs3.id(0, 0, 0)));

    MPolyMat x0 = formal_solution_block(0, 2);
    VarSpace vs0{0, 2};
    CHECK(x0.at(0, 1) == MPoly::variable(vs0, vs0.id(0, 0, 1)));
}

TEST_CASE("the formal block solves the prolonged system") {
    auto shift = OperatorSpec::shift();
    CHECK(verify_fundamental(shift, mat1("x"), 1));

    Rng rng(41);
    for (const auto& spec : {OperatorSpec::shift(), OperatorSpec::q_dilation()})
        for (int i = 0; i < 5; ++i) {
            Matrix a = random_invertible_matrix(rng, spec, 2, 2);
            CHECK(verify_fundamental(spec, a, 2));
        }
}

TEST_CASE("single-block corruption breaks the identity") {
    auto spec = OperatorSpec::shift();
    Matrix a(2);
    a.at(0, 0) = sc("x^3+x");
    a.at(0, 1) = sc("1");
    a.at(1, 0) = sc("x");
    a.at(1, 1) = sc("x^2");
    unsigned n = 2;
    BlockMatrix good = prolong_system(spec, a, n).blocks;
    REQUIRE(verify_fundamental_against(spec, a, n, good));
    int mutants = 0;
    for (unsigned r = 0; r <= n; ++r)
        for (unsigned c = 0; c <= r; ++c) {
            if (good.block(r, c).is_zero()) continue;
            BlockMatrix bad = good;
            bad.block(r, c) = Matrix::zero(2);
            CHECK_FALSE(verify_fundamental_against(spec, a, n, bad));
            ++mutants;
        }
    CHECK(mutants >= 6);
}

TEST_CASE("iterated Leibniz derivation matches the binomial closed form") {
    auto shift = OperatorSpec::shift();
    CHECK(eq2_from_leibniz(shift, mat1("x"), 0));
    CHECK(eq2_from_leibniz(shift, mat1("x"), 1));

    Rng rng(43);
    for (const auto& spec : {OperatorSpec::shift(), OperatorSpec::q_dilation()}) {
        Matrix a = random_invertible_matrix(rng, spec, 2, 2);
        CHECK(eq2_from_leibniz(spec, a, 4));
    }
}

TEST_CASE("tower consistency and determinant power") {
    Rng rng(47);
    auto spec = OperatorSpec::shift();
    Matrix a = random_invertible_matrix(rng, spec, 2, 2);
    auto sys = prolong_system(spec, a, 3);
    for (unsigned k = 0; k <= 3; ++k)
        CHECK(sys.blocks.truncate(k) == prolong_system(spec, a, k).blocks);

    Scalar d = mat_det(a);
    CHECK(mat_det(prolong_system(spec, a, 2).blocks.flatten()) == d * d * d);
}
