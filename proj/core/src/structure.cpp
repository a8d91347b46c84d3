#include "pv/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pv {

Matrix sigma_power_product(const OperatorSpec& spec, const Matrix& a, unsigned l) {
    if (l == 0) throw std::invalid_argument("sigma_power_product: l must be >= 1");
    if (mat_det(a).is_zero()) throw std::domain_error("sigma_power_product: singular matrix");
    Matrix result = a;
    Matrix twisted = a;
    for (unsigned i = 1; i < l; ++i) {
        twisted = mat_sigma(spec, twisted);
        result = mat_mul(twisted, result);
    }
    return result;
}

bool cocycle_check(const OperatorSpec& spec, const Matrix& a, unsigned pow_a, unsigned pow_b) {
    if (pow_a == 0 || pow_b == 0)
        throw std::invalid_argument("cocycle_check: powers must be >= 1");
    Matrix lhs = sigma_power_product(spec, a, pow_a + pow_b);
    Matrix twisted = sigma_power_product(spec, a, pow_a);
    for (unsigned i = 0; i < pow_b; ++i) twisted = mat_sigma(spec, twisted);
    Matrix rhs = mat_mul(twisted, sigma_power_product(spec, a, pow_b));
    return lhs == rhs;
}

MonomialModel::MonomialModel(std::vector<unsigned> exponents) : r_(std::move(exponents)) {
    if (r_.empty()) throw std::invalid_argument("MonomialModel: no variables");
    n_ = 1;
    dim_ = 1;
    for (unsigned ri : r_) {
        if (ri == 0) throw std::invalid_argument("MonomialModel: exponents must be positive");
        n_ = std::lcm(n_, ri);
        dim_ *= ri;
    }
    field_ = CycField::make(n_);
}

size_t MonomialModel::index_of(const std::vector<unsigned>& exps) const {
    size_t idx = 0;
    for (size_t i = 0; i < r_.size(); ++i) idx = idx * r_[i] + exps[i] % r_[i];
    return idx;
}

std::vector<unsigned> MonomialModel::exps_of(size_t index) const {
    std::vector<unsigned> e(r_.size());
    for (size_t i = r_.size(); i-- > 0;) {
        e[i] = static_cast<unsigned>(index % r_[i]);
        index /= r_[i];
    }
    return e;
}

CycNum MonomialModel::sigma_eigenvalue(size_t basis_index) const {
    std::vector<unsigned> e = exps_of(basis_index);
    long k = 0;
    for (size_t i = 0; i < r_.size(); ++i) k += static_cast<long>(e[i]) * (n_ / r_[i]);
    return field_->root_of_unity(k);
}

ModelElem ModelElem::zero(const MonomialModel& model) {
    return ModelElem(&model, std::vector<CycNum>(model.ring_dim(), model.constants()->zero()));
}

ModelElem ModelElem::one(const MonomialModel& model) {
    ModelElem e = zero(model);
    e.coeff(0) = model.constants()->one();
    return e;
}

bool ModelElem::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

ModelElem operator+(const ModelElem& a, const ModelElem& b) {
    ModelElem r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
    return r;
}

ModelElem operator-(const ModelElem& a, const ModelElem& b) {
    ModelElem r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
    return r;
}

ModelElem operator*(const ModelElem& a, const ModelElem& b) {
    const MonomialModel& model = *a.model_;
    ModelElem r = ModelElem::zero(model);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        std::vector<unsigned> ei = model.exps_of(i);
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            std::vector<unsigned> ej = model.exps_of(j);
            std::vector<unsigned> es(ei.size());
            for (size_t v = 0; v < es.size(); ++v)
                es[v] = (ei[v] + ej[v]) % model.exponents()[v];
            size_t k = model.index_of(es);
            r.coeff(k) = r.coeff(k) + a.c_[i] * b.c_[j];
        }
    }
    return r;
}

ModelElem ModelElem::scaled(const CycNum& s) const {
    ModelElem r = *this;
    for (auto& c : r.c_) c = c * s;
    return r;
}

ModelElem ModelElem::apply_sigma() const {
    ModelElem r = *this;
    for (size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = r.c_[i] * model_->sigma_eigenvalue(i);
    return r;
}

std::vector<ModelElem> primitive_idempotents(const MonomialModel& model) {
    // e_j = prod_i (1/r_i) sum_t zeta_{r_i}^{-j_i t} y_i^t; the coefficient of
    // the basis monomial y^e is prod_i (1/r_i) zeta_N^{-(N/r_i) j_i e_i}.
    const auto field = model.constants();
    unsigned n = model.conductor();
    Rational inv_count(1);
    for (unsigned ri : model.exponents()) inv_count /= ri;

    std::vector<ModelElem> idems;
    for (size_t j = 0; j < model.ring_dim(); ++j) {
        std::vector<unsigned> jt = model.exps_of(j);
        ModelElem e = ModelElem::zero(model);
        for (size_t b = 0; b < model.ring_dim(); ++b) {
            std::vector<unsigned> et = model.exps_of(b);
            long k = 0;
            for (size_t v = 0; v < jt.size(); ++v)
                k -= static_cast<long>(n / model.exponents()[v]) * jt[v] * et[v];
            e.coeff(b) = field->root_of_unity(k) * field->from_rational(inv_count);
        }
        idems.push_back(e);
    }
    return idems;
}

namespace {

// sigma as a permutation of the primitive idempotents
std::vector<size_t> sigma_permutation(const MonomialModel& model,
                                      const std::vector<ModelElem>& idems) {
    std::vector<size_t> perm(idems.size());
    for (size_t i = 0; i < idems.size(); ++i) {
        ModelElem img = idems[i].apply_sigma();
        bool found = false;
        for (size_t j = 0; j < idems.size(); ++j)
            if (img == idems[j]) {
                perm[i] = j;
                found = true;
                break;
            }
        if (!found)
            throw std::logic_error("sigma does not permute the primitive idempotents");
    }
    return perm;
}

}  // namespace

DecompositionReport sigma_orbits(const MonomialModel& model) {
    std::vector<ModelElem> idems = primitive_idempotents(model);
    std::vector<size_t> perm = sigma_permutation(model, idems);

    DecompositionReport rep;
    rep.num_idempotents = static_cast<unsigned>(idems.size());
    std::vector<bool> seen(idems.size(), false);
    for (size_t i = 0; i < idems.size(); ++i) {
        if (seen[i]) continue;
        std::vector<size_t> orbit;
        size_t cur = i;
        while (!seen[cur]) {
            seen[cur] = true;
            orbit.push_back(cur);
            cur = perm[cur];
        }
        rep.orbits.push_back(std::move(orbit));
    }
    rep.single_orbit = rep.orbits.size() == 1;
    rep.l = rep.single_orbit ? static_cast<unsigned>(rep.orbits[0].size()) : 0;

    if (rep.single_orbit) {
        rep.sigma_l_fixes_all = true;
        for (const ModelElem& e : idems) {
            ModelElem img = e;
            for (unsigned s = 0; s < rep.l; ++s) img = img.apply_sigma();
            if (img != e) {
                rep.sigma_l_fixes_all = false;
                break;
            }
        }
    }
    rep.automorphism_group_order = model.ring_dim();
    return rep;
}

AutomorphismGroup enumerate_automorphisms(const MonomialModel& model) {
    AutomorphismGroup g;
    g.generator_orders = model.exponents();
    for (size_t i = 0; i < model.ring_dim(); ++i)
        g.elements.push_back(ModelAutomorphism{model.exps_of(i)});
    unsigned lcm_all = model.conductor();
    g.is_cyclic = static_cast<size_t>(lcm_all) == model.ring_dim() ||
                  model.num_vars() == 1;  // product of Z/r_i is cyclic iff lcm = product
    return g;
}

ModelElem apply_automorphism(const MonomialModel& model, const ModelAutomorphism& g,
                             const ModelElem& x) {
    // y^e picks up zeta^{sum_i e_i t_i N/r_i}
    ModelElem r = x;
    unsigned n = model.conductor();
    for (size_t b = 0; b < model.ring_dim(); ++b) {
        if (x.coeff(b).is_zero()) continue;
        std::vector<unsigned> e = model.exps_of(b);
        long k = 0;
        for (size_t v = 0; v < e.size(); ++v)
            k += static_cast<long>(n / model.exponents()[v]) * e[v] * g.t[v];
        r.coeff(b) = x.coeff(b) * model.constants()->root_of_unity(k);
    }
    return r;
}

ExactSequenceReport exact_sequence_check(const MonomialModel& model) {
    ExactSequenceReport rep;
    std::vector<ModelElem> idems = primitive_idempotents(model);
    std::vector<size_t> perm = sigma_permutation(model, idems);

    DecompositionReport dec = sigma_orbits(model);
    if (!dec.single_orbit)
        throw std::invalid_argument("exact_sequence_check: model must have a single sigma-orbit");
    rep.l = dec.l;
    unsigned l = rep.l;

    // orbit ordering e_0, e_1 = sigma(e_0), ...
    std::vector<size_t> orbit(l);
    std::vector<size_t> pos_in_orbit(idems.size());
    orbit[0] = 0;
    for (unsigned k = 1; k < l; ++k) orbit[k] = perm[orbit[k - 1]];
    for (unsigned k = 0; k < l; ++k) pos_in_orbit[orbit[k]] = k;

    AutomorphismGroup group = enumerate_automorphisms(model);
    rep.group_order = group.order();

    // Delta(g): the uniform shift g induces on the orbit
    std::vector<long> shift(group.order(), -1);
    for (size_t gi = 0; gi < group.order(); ++gi) {
        long s = -1;
        bool consistent = true;
        for (unsigned k = 0; k < l && consistent; ++k) {
            ModelElem img = apply_automorphism(model, group.elements[gi], idems[orbit[k]]);
            long found = -1;
            for (unsigned j = 0; j < l; ++j)
                if (img == idems[orbit[j]]) {
                    found = j;
                    break;
                }
            if (found < 0) {
                consistent = false;
                break;
            }
            long this_shift = (found - static_cast<long>(k) + l) % l;
            if (s < 0)
                s = this_shift;
            else if (s != this_shift)
                consistent = false;
        }
        if (!consistent) return rep;  // not exact: no well-defined shift
        shift[gi] = s;
    }

    // homomorphism: composing tuples adds shifts mod l
    rep.homomorphism = true;
    auto compose_index = [&](size_t a, size_t b) {
        std::vector<unsigned> t(model.num_vars());
        for (size_t v = 0; v < t.size(); ++v)
            t[v] = (group.elements[a].t[v] + group.elements[b].t[v]) % model.exponents()[v];
        return model.index_of(t);
    };
    for (size_t a = 0; a < group.order() && rep.homomorphism; ++a)
        for (size_t b = 0; b < group.order(); ++b)
            if (shift[compose_index(a, b)] != (shift[a] + shift[b]) % l) {
                rep.homomorphism = false;
                break;
            }

    std::vector<bool> hit(l, false);
    for (long s : shift) hit[s] = true;
    rep.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });

    rep.kernel_order = static_cast<size_t>(std::count(shift.begin(), shift.end(), 0L));

    // kernel restricted to the component e_0 * ring: the component is
    // one-dimensional over the constants (ring_dim equals the idempotent
    // count), so a kernel element restricts to the identity; the distinct
    // restrictions form the component's automorphism group.
    size_t distinct_restrictions = 0;
    {
        std::vector<ModelElem> images;
        for (size_t gi = 0; gi < group.order(); ++gi) {
            if (shift[gi] != 0) continue;
            ModelElem img = apply_automorphism(model, group.elements[gi], idems[orbit[0]]);
            bool fresh = true;
            for (const ModelElem& seen : images) fresh = fresh && !(seen == img);
            if (fresh) images.push_back(img);
        }
        distinct_restrictions = images.size();
    }
    rep.component_aut_order = distinct_restrictions;

    rep.exact = rep.homomorphism && rep.surjective &&
                rep.group_order == rep.kernel_order * l &&
                rep.component_aut_order == rep.kernel_order;
    return rep;
}

}  // namespace pv
