#include "pv/selftest.hpp"

#include <functional>
#include <thread>

#include "pv/ideal.hpp"
#include "pv/json_io.hpp"
#include "pv/parser.hpp"
#include "pv/prolong.hpp"
#include "pv/random_gen.hpp"
#include "pv/structure.hpp"

namespace pv {
namespace {

struct Check {
    std::string name;
    std::function<bool(Rng&, const SelftestOptions&)> run;
};

std::uint64_t name_salt(const std::string& name) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<OperatorSpec> both_specs() {
    return {OperatorSpec::shift(), OperatorSpec::q_dilation()};
}

// ---- base_field ----

bool check_commutation(Rng& rng, const SelftestOptions&) {
    for (const auto& spec : both_specs())
        for (int i = 0; i < 200; ++i) {
            Scalar f = random_ratfunc(rng, spec, 4);
            if (spec.delta(spec.sigma(f)) != spec.sigma(spec.delta(f))) return false;
        }
    return true;
}

bool check_leibniz_linearity(Rng& rng, const SelftestOptions&) {
    for (const auto& spec : both_specs())
        for (int i = 0; i < 40; ++i) {
            Scalar f = random_ratfunc(rng, spec, 3);
            Scalar g = random_ratfunc(rng, spec, 3);
            if (spec.delta(f * g) != spec.delta(f) * g + f * spec.delta(g)) return false;
            if (spec.sigma(f + g) != spec.sigma(f) + spec.sigma(g)) return false;
            if (spec.delta(f + g) != spec.delta(f) + spec.delta(g)) return false;
            Scalar c = scalar_from_rational(Rational(rng.range(-5, 5), 3));
            if (spec.sigma(c * f) != c * spec.sigma(f)) return false;
            if (spec.delta(c * f) != c * spec.delta(f)) return false;
        }
    return true;
}

bool check_sigma_inv(Rng& rng, const SelftestOptions&) {
    for (const auto& spec : both_specs())
        for (int i = 0; i < 50; ++i) {
            Scalar f = random_ratfunc(rng, spec, 4);
            if (spec.sigma_inv(spec.sigma(f)) != f) return false;
            if (spec.sigma(spec.sigma_inv(f)) != f) return false;
        }
    return true;
}

bool check_is_constant(Rng& rng, const SelftestOptions&) {
    auto shift = OperatorSpec::shift();
    auto qdil = OperatorSpec::q_dilation();
    if (!shift.is_constant(parse_ratfunc(shift, "7/3"))) return false;
    if (shift.is_constant(parse_ratfunc(shift, "x"))) return false;
    if (!qdil.is_constant(parse_ratfunc(qdil, "q^2+1"))) return false;
    if (qdil.is_constant(parse_ratfunc(qdil, "q*x"))) return false;
    (void)rng;
    return true;
}

bool check_parse_roundtrip(Rng& rng, const SelftestOptions&) {
    for (const auto& spec : both_specs())
        for (int i = 0; i < 60; ++i) {
            Scalar f = random_ratfunc(rng, spec, 3);
            if (parse_ratfunc(spec, format_ratfunc(f)) != f) return false;
        }
    return true;
}

// ---- matrices and jets ----

bool check_matrix_inverse(Rng& rng, const SelftestOptions&) {
    for (const auto& spec : both_specs())
        for (int i = 0; i < 6; ++i) {
            unsigned m = static_cast<unsigned>(rng.range(1, 3));
            Matrix a = random_invertible_matrix(rng, spec, m, 1);
            if (mat_mul(a, mat_inv(a)) != Matrix::identity(m)) return false;
        }
    return true;
}

bool check_jet_group_axioms(Rng& rng, const SelftestOptions&) {
    for (int i = 0; i < 20; ++i) {
        unsigned order = static_cast<unsigned>(rng.range(0, 3));
        unsigned m = static_cast<unsigned>(rng.range(1, 2));
        Jet b = random_group_jet(rng, order, m);
        Jet c = random_group_jet(rng, order, m);
        Jet d = random_group_jet(rng, order, m);
        Jet unit = Jet::unit(order, m);
        if (jet_mul(jet_mul(b, c), d) != jet_mul(b, jet_mul(c, d))) return false;
        if (jet_mul(unit, b) != b || jet_mul(b, unit) != b) return false;
        if (jet_mul(b, jet_inv(b)) != unit || jet_mul(jet_inv(b), b) != unit) return false;
    }
    return true;
}

bool check_block_homomorphism(Rng& rng, const SelftestOptions&) {
    for (int i = 0; i < 25; ++i) {
        unsigned order = static_cast<unsigned>(rng.range(0, 3));
        unsigned m = static_cast<unsigned>(rng.range(1, 2));
        Jet b = random_group_jet(rng, order, m);
        Jet c = random_group_jet(rng, order, m);
        Matrix lhs = jet_to_block(jet_mul(b, c)).flatten();
        Matrix rhs = mat_mul(jet_to_block(b).flatten(), jet_to_block(c).flatten());
        if (lhs != rhs) return false;
    }
    return true;
}

bool check_mat_sigma_delta_commute(Rng& rng, const SelftestOptions&) {
    for (const auto& spec : both_specs())
        for (int i = 0; i < 10; ++i) {
            Matrix a = random_matrix(rng, spec, 2, 2);
            if (mat_delta(spec, mat_sigma(spec, a)) != mat_sigma(spec, mat_delta(spec, a)))
                return false;
        }
    return true;
}

// ---- prolongation ----

bool check_fundamental(Rng& rng, const SelftestOptions&) {
    for (const auto& spec : both_specs())
        for (int i = 0; i < 10; ++i) {
            unsigned m = static_cast<unsigned>(rng.range(1, 3));
            unsigned n = static_cast<unsigned>(rng.range(0, 3));
            Matrix a = random_invertible_matrix(rng, spec, m, 2);
            if (!verify_fundamental(spec, a, n)) return false;
        }
    return true;
}

bool check_eq2_leibniz(Rng& rng, const SelftestOptions&) {
    for (const auto& spec : both_specs())
        for (unsigned j = 0; j <= 4; ++j) {
            unsigned m = static_cast<unsigned>(rng.range(1, 2));
            Matrix a = random_invertible_matrix(rng, spec, m, 2);
            if (!eq2_from_leibniz(spec, a, j)) return false;
        }
    return true;
}

bool check_tower_consistency(Rng& rng, const SelftestOptions&) {
    for (const auto& spec : both_specs())
        for (int i = 0; i < 5; ++i) {
            unsigned m = static_cast<unsigned>(rng.range(1, 2));
            Matrix a = random_invertible_matrix(rng, spec, m, 2);
            unsigned n = 3;
            auto sys = prolong_system(spec, a, n);
            for (unsigned k = 0; k <= n; ++k)
                if (sys.blocks.truncate(k) != prolong_system(spec, a, k).blocks) return false;
        }
    return true;
}

bool check_det_power(Rng& rng, const SelftestOptions&) {
    for (const auto& spec : both_specs())
        for (int i = 0; i < 3; ++i) {
            unsigned m = static_cast<unsigned>(rng.range(1, 2));
            unsigned n = static_cast<unsigned>(rng.range(0, 2));
            Matrix a = random_invertible_matrix(rng, spec, m, 1);
            Scalar d = mat_det(a);
            Scalar expect = scalar_from_int(1);
            for (unsigned k = 0; k <= n; ++k) expect = expect * d;
            if (mat_det(prolong_system(spec, a, n).blocks.flatten()) != expect) return false;
        }
    return true;
}

// ---- ideals ----

MPoly random_jetpoly(Rng& rng, const VarSpace& vs, unsigned terms, unsigned deg) {
    MPoly p(vs);
    for (unsigned t = 0; t < terms; ++t) {
        Mono m(vs.count(), 0);
        unsigned d = static_cast<unsigned>(rng.range(0, static_cast<long>(deg)));
        for (unsigned k = 0; k < d; ++k)
            m[static_cast<size_t>(rng.range(0, static_cast<long>(vs.count() - 1)))] += 1;
        p.add_term(m, scalar_from_int(rng.range(-3, 3)));
    }
    return p;
}

bool check_functoriality(Rng& rng, const SelftestOptions&) {
    for (int i = 0; i < 30; ++i) {
        unsigned order = static_cast<unsigned>(rng.range(0, 2));
        unsigned m = 2;
        VarSpace vs{order, m};
        MPoly p = random_jetpoly(rng, vs, 3, 2);
        Jet b = random_group_jet(rng, order, m);
        Jet c = random_group_jet(rng, order, m);
        if (substitute_gB(p, jet_mul(b, c)) != substitute_gB(substitute_gB(p, c), b))
            return false;
    }
    return true;
}

IdealGens diagonal_ideal(const SelftestOptions& opts) {
    VarSpace vs{0, 2};
    OperatorSpec spec = OperatorSpec::shift();
    std::vector<MPoly> gens{parse_jetpoly(spec, vs, "Y0_12"), parse_jetpoly(spec, vs, "Y0_21")};
    return IdealGens(vs, std::move(gens), GroebnerOptions{opts.budget});
}

bool check_diagonal_invariance(Rng& rng, const SelftestOptions& opts) {
    (void)rng;
    IdealGens ideal = diagonal_ideal(opts);
    // every invertible 0/1 pattern
    for (unsigned mask = 0; mask < 16; ++mask) {
        Matrix b(2);
        b.at(0, 0) = scalar_from_int((mask >> 0) & 1);
        b.at(0, 1) = scalar_from_int((mask >> 1) & 1);
        b.at(1, 0) = scalar_from_int((mask >> 2) & 1);
        b.at(1, 1) = scalar_from_int((mask >> 3) & 1);
        if (mat_det(b).is_zero()) continue;
        bool diagonal = b.at(0, 1).is_zero() && b.at(1, 0).is_zero();
        if (invariance_check(ideal, Jet::constant(b, 0)) != diagonal) return false;
    }
    return true;
}

bool check_oracle_agreement(Rng& rng, const SelftestOptions& opts) {
    // three variables: VarSpace of order 2, dimension 1
    VarSpace vs{2, 1};
    for (int i = 0; i < 12; ++i) {
        std::vector<MPoly> gens;
        unsigned ngens = static_cast<unsigned>(rng.range(1, 2));
        for (unsigned g = 0; g < ngens; ++g) gens.push_back(random_jetpoly(rng, vs, 2, 2));
        MPoly p = random_jetpoly(rng, vs, 2, 3);
        // occasionally test a guaranteed member
        if (rng.range(0, 1) == 0 && !gens[0].is_zero())
            p = gens[0] * random_jetpoly(rng, vs, 1, 1);
        if (p.total_degree() > 3) continue;
        IdealGens ideal(vs, gens, GroebnerOptions{opts.budget});
        bool grobner = ideal_member(p, ideal);
        bool dense = dense_membership_oracle(p, gens, p.total_degree() + 4);
        if (grobner != dense) return false;
    }
    return true;
}

bool check_ideal_extremes(Rng& rng, const SelftestOptions& opts) {
    VarSpace vs{1, 2};
    IdealGens zero_ideal(vs, {}, GroebnerOptions{opts.budget});
    IdealGens unit_ideal(vs, {MPoly::constant(vs, scalar_from_int(1))},
                         GroebnerOptions{opts.budget});
    for (int i = 0; i < 10; ++i) {
        Jet b = random_group_jet(rng, 1, 2);
        if (!invariance_check(zero_ideal, b)) return false;
        if (!invariance_check(unit_ideal, b)) return false;
    }
    return true;
}

bool check_invariant_group_closure(Rng& rng, const SelftestOptions& opts) {
    IdealGens ideal = diagonal_ideal(opts);
    // sampled members: diagonal constant jets
    std::vector<Jet> members;
    for (int i = 0; i < 6; ++i) {
        Matrix b(2);
        b.at(0, 0) = scalar_from_int(rng.range(1, 4));
        b.at(1, 1) = scalar_from_int(rng.range(1, 4));
        members.push_back(Jet::constant(b, 0));
    }
    for (const Jet& b : members) {
        if (!invariance_check(ideal, b)) return false;
        if (!invariance_check(ideal, jet_inv(b))) return false;
        for (const Jet& c : members)
            if (!invariance_check(ideal, jet_mul(b, c))) return false;
    }
    return true;
}

// ---- structure ----

bool check_cocycle(Rng& rng, const SelftestOptions&) {
    for (const auto& spec : both_specs())
        for (int i = 0; i < 4; ++i) {
            unsigned m = static_cast<unsigned>(rng.range(1, 2));
            Matrix a = random_invertible_matrix(rng, spec, m, 1);
            for (unsigned pa = 1; pa <= 5; ++pa)
                for (unsigned pb = 1; pa + pb <= 6; ++pb)
                    if (!cocycle_check(spec, a, pa, pb)) return false;
        }
    return true;
}

bool check_idempotent_axioms(Rng& rng, const SelftestOptions&) {
    (void)rng;
    std::vector<std::vector<unsigned>> models;
    for (unsigned r = 1; r <= 8; ++r) models.push_back({r});
    models.push_back({2, 3});
    models.push_back({2, 2});
    for (const auto& r : models) {
        MonomialModel model(r);
        auto idems = primitive_idempotents(model);
        ModelElem sum = ModelElem::zero(model);
        for (size_t i = 0; i < idems.size(); ++i) {
            if (idems[i] * idems[i] != idems[i]) return false;
            for (size_t j = i + 1; j < idems.size(); ++j)
                if (!(idems[i] * idems[j]).is_zero()) return false;
            sum = sum + idems[i];
        }
        if (sum != ModelElem::one(model)) return false;
    }
    return true;
}

bool check_orbit_lengths(Rng& rng, const SelftestOptions&) {
    (void)rng;
    for (unsigned r = 1; r <= 8; ++r) {
        MonomialModel model({r});
        DecompositionReport rep = sigma_orbits(model);
        if (!rep.single_orbit || rep.l != r || !rep.sigma_l_fixes_all) return false;
        // second route to l: multiplicative order of zeta_N^(N/r)
        auto field = model.constants();
        CycNum z = field->root_of_unity(static_cast<long>(model.conductor() / r));
        CycNum acc = field->one();
        unsigned ord = 0;
        do {
            acc = acc * z;
            ++ord;
        } while (acc != field->one());
        if (ord != rep.l) return false;
    }
    return true;
}

bool check_components_are_fields(Rng& rng, const SelftestOptions&) {
    (void)rng;
    for (unsigned r = 1; r <= 6; ++r) {
        MonomialModel model({r});
        auto idems = primitive_idempotents(model);
        // spanning set of each component: e_i * y^t; all pairwise products of
        // nonzero members must be nonzero
        ModelElem y = ModelElem::zero(model);
        if (r > 1)
            y.coeff(model.index_of({1})) = model.constants()->one();
        else
            y = ModelElem::one(model);
        for (const auto& e : idems) {
            std::vector<ModelElem> span;
            ModelElem cur = e;
            for (unsigned t = 0; t < r; ++t) {
                if (!cur.is_zero()) span.push_back(cur);
                cur = cur * y;
            }
            for (const auto& a : span)
                for (const auto& b : span)
                    if ((a * b).is_zero()) return false;
        }
    }
    return true;
}

bool check_exact_sequence(Rng& rng, const SelftestOptions&) {
    (void)rng;
    for (unsigned r : {1u, 2u, 3u, 4u, 6u}) {
        MonomialModel model({r});
        ExactSequenceReport rep = exact_sequence_check(model);
        if (!rep.exact || rep.l != r || rep.group_order != r || rep.kernel_order != 1)
            return false;
    }
    return true;
}

bool check_automorphism_groups(Rng& rng, const SelftestOptions&) {
    (void)rng;
    for (unsigned r : {1u, 2u, 6u}) {
        MonomialModel model({r});
        AutomorphismGroup g = enumerate_automorphisms(model);
        if (g.order() != r || !g.is_cyclic) return false;
        // closure under composition at the level of idempotent actions
        ModelElem one = ModelElem::one(model);
        for (const auto& a : g.elements)
            if (apply_automorphism(model, a, one) != one) return false;
    }
    return true;
}

std::vector<Check> all_checks() {
    return {
        {"base_field/commutation", check_commutation},
        {"base_field/leibniz_linearity", check_leibniz_linearity},
        {"base_field/sigma_inv_roundtrip", check_sigma_inv},
        {"base_field/is_constant", check_is_constant},
        {"base_field/parse_format_roundtrip", check_parse_roundtrip},
        {"matrices/inverse_roundtrip", check_matrix_inverse},
        {"matrices/sigma_delta_commute", check_mat_sigma_delta_commute},
        {"jets/group_axioms", check_jet_group_axioms},
        {"jets/block_homomorphism", check_block_homomorphism},
        {"prolong/fundamental_identity", check_fundamental},
        {"prolong/eq2_from_leibniz", check_eq2_leibniz},
        {"prolong/tower_consistency", check_tower_consistency},
        {"prolong/det_power", check_det_power},
        {"ideals/functoriality", check_functoriality},
        {"ideals/diagonal_invariance", check_diagonal_invariance},
        {"ideals/oracle_agreement", check_oracle_agreement},
        {"ideals/zero_unit_extremes", check_ideal_extremes},
        {"ideals/group_closure", check_invariant_group_closure},
        {"structure/cocycle_law", check_cocycle},
        {"structure/idempotent_axioms", check_idempotent_axioms},
        {"structure/orbit_lengths", check_orbit_lengths},
        {"structure/components_are_fields", check_components_are_fields},
        {"structure/exact_sequence", check_exact_sequence},
        {"structure/automorphism_groups", check_automorphism_groups},
    };
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& opts) {
    std::vector<Check> checks = all_checks();
    SelftestReport report;
    report.checks.resize(checks.size());

    auto run_one = [&](size_t i) {
        CheckResult& r = report.checks[i];
        r.name = checks[i].name;
        Rng rng(opts.seed ^ name_salt(checks[i].name));
        try {
            r.status = checks[i].run(rng, opts) ? CheckStatus::pass : CheckStatus::fail;
        } catch (const BudgetExceeded& e) {
            r.status = CheckStatus::budget_exceeded;
            r.detail = e.what();
        }
    };

    unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < checks.size(); ++i) run_one(i);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                for (size_t i = t; i < checks.size(); i += jobs) run_one(i);
            });
        for (auto& th : pool) th.join();
    }

    report.all_pass = true;
    for (const auto& c : report.checks) {
        if (c.status == CheckStatus::budget_exceeded) report.any_budget_exceeded = true;
        if (c.status != CheckStatus::pass) report.all_pass = false;
    }
    return report;
}

}  // namespace pv
