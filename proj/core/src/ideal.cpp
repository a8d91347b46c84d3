#include "pv/ideal.hpp"

#include <algorithm>
#include <map>

#include "pv/rational.hpp"

namespace pv {
namespace {

bool mono_divides(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono mono_quot(const Mono& a, const Mono& b) {
    Mono q(a.size());
    for (size_t i = 0; i < a.size(); ++i) q[i] = a[i] - b[i];
    return q;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono l(a.size());
    for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

MPoly mono_mul(const MPoly& p, const Mono& m, const Scalar& c) {
    MPoly r(p.space());
    for (const auto& [pm, pc] : p.terms()) {
        Mono t(pm.size());
        for (size_t i = 0; i < pm.size(); ++i) t[i] = pm[i] + m[i];
        r.add_term(t, pc * c);
    }
    return r;
}

struct Budget {
    unsigned long left;
    void spend() {
        if (left == 0) throw BudgetExceeded("Groebner reduction budget exceeded");
        --left;
    }
};

MPoly reduce_full(MPoly p, const std::vector<MPoly>& basis, Budget& budget) {
    MPoly rem(p.space());
    while (!p.is_zero()) {
        bool reduced = false;
        for (const MPoly& g : basis) {
            if (g.is_zero() || !mono_divides(g.lead_mono(), p.lead_mono())) continue;
            budget.spend();
            Scalar f = p.lead_coeff() / g.lead_coeff();
            p = p - mono_mul(g, mono_quot(p.lead_mono(), g.lead_mono()), f);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(p.lead_mono(), p.lead_coeff());
            MPoly tail(p.space());
            bool first = true;
            for (const auto& [m, c] : p.terms()) {
                if (first) {
                    first = false;
                    continue;
                }
                tail.add_term(m, c);
            }
            p = tail;
        }
    }
    return rem;
}

MPoly s_poly(const MPoly& f, const MPoly& g) {
    Mono l = mono_lcm(f.lead_mono(), g.lead_mono());
    MPoly a = mono_mul(f, mono_quot(l, f.lead_mono()), f.lead_coeff().inv());
    MPoly b = mono_mul(g, mono_quot(l, g.lead_mono()), g.lead_coeff().inv());
    return a - b;
}

bool coprime_leads(const MPoly& f, const MPoly& g) {
    const Mono& a = f.lead_mono();
    const Mono& b = g.lead_mono();
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

}  // namespace

std::vector<MPoly> groebner_basis(const VarSpace& vs, const std::vector<MPoly>& gens,
                                  const GroebnerOptions& opts) {
    Budget budget{opts.budget};
    std::vector<MPoly> basis;
    for (const MPoly& g : gens) {
        if (!(g.space() == vs)) throw std::invalid_argument("groebner_basis: space mismatch");
        if (!g.is_zero()) basis.push_back(g.monic());
    }

    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        if (coprime_leads(basis[i], basis[j])) continue;  // Buchberger's first criterion
        MPoly r = reduce_full(s_poly(basis[i], basis[j]), basis, budget);
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        for (size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }

    // inter-reduce to the unique reduced basis
    std::vector<MPoly> reduced;
    for (size_t i = 0; i < basis.size(); ++i) {
        std::vector<MPoly> others;
        for (size_t j = 0; j < basis.size(); ++j)
            if (j != i) others.push_back(basis[j]);
        MPoly r = reduce_full(basis[i], others, budget);
        if (!r.is_zero()) {
            basis[i] = r.monic();
            reduced.push_back(basis[i]);
        } else {
            basis[i] = MPoly::zero(vs);
        }
    }
    std::vector<MPoly> out;
    for (const MPoly& g : reduced) {
        bool dup = false;
        for (const MPoly& h : out) dup = dup || h == g;
        if (!dup) out.push_back(g);
    }
    std::sort(out.begin(), out.end(), [](const MPoly& a, const MPoly& b) {
        return DegRevLexGreater{}(b.lead_mono(), a.lead_mono());
    });
    return out;
}

MPoly normal_form(const MPoly& p, const std::vector<MPoly>& basis, const GroebnerOptions& opts) {
    Budget budget{opts.budget};
    return reduce_full(p, basis, budget);
}

IdealGens::IdealGens(const VarSpace& vs, std::vector<MPoly> gens, GroebnerOptions opts)
    : vs_(vs), gens_(std::move(gens)), opts_(opts) {
    for (const MPoly& g : gens_)
        if (!(g.space() == vs_)) throw std::invalid_argument("IdealGens: space mismatch");
}

const std::vector<MPoly>& IdealGens::groebner() const {
    if (!gb_) gb_ = groebner_basis(vs_, gens_, opts_);
    return *gb_;
}

bool ideal_member(const MPoly& p, const IdealGens& ideal) {
    if (!(p.space() == ideal.space()))
        throw std::invalid_argument("ideal_member: space mismatch");
    return normal_form(p, ideal.groebner()).is_zero();
}

MPoly substitute_gB(const MPoly& p, const Jet& b) {
    const VarSpace& vs = p.space();
    if (b.order() != vs.order || b.dim() != vs.dim)
        throw std::invalid_argument("substitute_gB: order/dimension mismatch");
    std::vector<MPoly> images;
    images.reserve(vs.count());
    for (unsigned v = 0; v < vs.count(); ++v) {
        unsigned j = vs.var_order(v), row = vs.var_row(v), col = vs.var_col(v);
        MPoly img = MPoly::zero(vs);
        for (unsigned i = 0; i <= j; ++i) {
            Scalar coef = scalar_from_rational(Rational(binomial(j, i)));
            for (unsigned c = 0; c < vs.dim; ++c)
                img = img + MPoly::variable(vs, vs.id(i, row, c)) *
                                (coef * b.comp(j - i).at(c, col));
        }
        images.push_back(img);
    }
    return p.substitute(images);
}

bool invariance_check(const IdealGens& ideal, const Jet& b,
                      std::optional<size_t>* failing_generator) {
    if (failing_generator) failing_generator->reset();
    for (size_t i = 0; i < ideal.generators().size(); ++i) {
        MPoly image = substitute_gB(ideal.generators()[i], b);
        if (!ideal_member(image, ideal)) {
            if (failing_generator) *failing_generator = i;
            return false;
        }
    }
    return true;
}

StabilizationReport stabilization_scan(const std::vector<IdealGens>& tower,
                                       const std::vector<Jet>& test_jets) {
    StabilizationReport rep;
    size_t levels = tower.size();
    rep.verdicts.assign(test_jets.size(), std::vector<bool>(levels, false));
    for (size_t t = 0; t < test_jets.size(); ++t) {
        for (size_t n = 0; n < levels; ++n) {
            if (tower[n].order() > test_jets[t].order())
                throw std::invalid_argument("stabilization_scan: test jet order too small");
            Jet truncated(tower[n].order(), test_jets[t].dim());
            for (unsigned k = 0; k <= tower[n].order(); ++k)
                truncated.comp(k) = test_jets[t].comp(k);
            rep.verdicts[t][n] = invariance_check(tower[n], truncated);
        }
    }
    // least level whose verdicts stay constant through the end of the tower
    size_t level = levels == 0 ? 0 : levels - 1;
    for (size_t n = 0; n + 1 < levels; ++n) {
        bool stable = true;
        for (size_t t = 0; t < test_jets.size() && stable; ++t)
            for (size_t k = n; k < levels; ++k)
                if (rep.verdicts[t][k] != rep.verdicts[t][n]) {
                    stable = false;
                    break;
                }
        if (stable) {
            level = n;
            break;
        }
    }
    rep.level = static_cast<unsigned>(level);
    rep.stabilized = levels > 0 && level + 1 < levels;
    return rep;
}

bool dense_membership_oracle(const MPoly& p, const std::vector<MPoly>& gens, unsigned degree_cap) {
    const VarSpace& vs = p.space();
    if (p.total_degree() > degree_cap) return false;
    unsigned nvars = vs.count();

    // enumerate all monomials of total degree <= cap
    std::vector<Mono> monos;
    Mono cur(nvars, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned v, unsigned left) {
        if (v == nvars) {
            monos.push_back(cur);
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            cur[v] = e;
            rec(v + 1, left - e);
        }
        cur[v] = 0;
    };
    rec(0, degree_cap);
    std::map<Mono, size_t> col;
    for (size_t i = 0; i < monos.size(); ++i) col[monos[i]] = i;

    auto to_row = [&](const MPoly& q) {
        std::vector<Scalar> row(monos.size(), Scalar());
        for (const auto& [m, c] : q.terms()) row[col.at(m)] = c;
        return row;
    };

    // incremental row echelon over the exact coefficient field
    std::vector<std::pair<size_t, std::vector<Scalar>>> echelon;  // (pivot col, row)
    auto reduce_row = [&](std::vector<Scalar>& row) {
        for (const auto& [pc, er] : echelon) {
            if (row[pc].is_zero()) continue;
            Scalar f = row[pc];
            for (size_t c = 0; c < row.size(); ++c) row[c] = row[c] - f * er[c];
        }
    };
    auto insert_row = [&](std::vector<Scalar> row) {
        reduce_row(row);
        for (size_t c = 0; c < row.size(); ++c) {
            if (row[c].is_zero()) continue;
            Scalar inv = row[c].inv();
            for (size_t k = 0; k < row.size(); ++k) row[k] = row[k] * inv;
            echelon.emplace_back(c, std::move(row));
            return;
        }
    };

    for (const MPoly& g : gens) {
        if (g.is_zero()) continue;
        unsigned gd = g.total_degree();
        if (gd > degree_cap) continue;
        for (const Mono& m : monos) {
            if (mono_degree(m) + gd > degree_cap) continue;
            insert_row(to_row(mono_mul(g, m, scalar_from_int(1))));
        }
    }

    std::vector<Scalar> target = to_row(p);
    reduce_row(target);
    for (const Scalar& c : target)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace pv
