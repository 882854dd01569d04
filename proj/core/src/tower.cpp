#include "mordell/tower.hpp"

#include "mordell/errors.hpp"

namespace mordell {

namespace {

struct Ivl {
    Rational lo, hi;
};

Ivl ivl_add(const Ivl& a, const Ivl& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Ivl ivl_mul(const Ivl& a, const Ivl& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)), std::max(std::max(p1, p2), std::max(p3, p4))};
}

} // namespace

EmbeddedField::EmbeddedField() : field_(NumberFieldR::rationals()), emb_(0) {}

EmbeddedField::EmbeddedField(FieldPtr field, int emb) : field_(std::move(field)), emb_(emb) {
    if (!field_) throw DomainError("embedded field without a field");
    if (emb_ < 0 || emb_ >= field_->degree()) throw DomainError("embedding index out of range");
}

RealAlgebraic EmbeddedField::value(const FieldElement& e) const {
    if (e.field().get() != field_.get()) throw DomainError("element from a different field");
    return e.value(emb_);
}

RealAlgebraic EmbeddedField::gen_value() const {
    if (field_->degree() == 1) return RealAlgebraic(Rational(0));
    const RealRoot& r = field_->embedding(emb_);
    return RealAlgebraic::from_irreducible(field_->min_poly(), r.lo(), r.hi());
}

std::optional<FieldElement> EmbeddedField::express(const RealAlgebraic& v) const {
    if (v.is_rational()) return field_->element(v.rational_value());
    QPolynomial mv = v.minimal_polynomial();
    if (mv.degree() > field_->degree() || field_->degree() % mv.degree() != 0) return std::nullopt;
    KPoly f = KPoly::from_rational(field_, mv);
    for (const auto& [h, mult] : factor_over_field(f)) {
        (void)mult;
        if (h.degree() != 1) continue;
        FieldElement beta = -h.coeff(0); // factors are monic
        if (value(beta) == v) return beta;
    }
    return std::nullopt;
}

CommonField::CommonField() = default;

const FieldElement& CommonField::rep(size_t i) const {
    if (i >= reps_.size()) throw DomainError("representation index out of range");
    return reps_[i];
}

size_t CommonField::add(const RealAlgebraic& v) {
    for (size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == v) return i;
    }
    auto rep = field_.express(v);
    if (!rep) {
        adjoin(v);
        rep = field_.express(v);
        if (!rep) throw DomainError("value missing from its own compositum");
    }
    values_.push_back(v);
    reps_.push_back(std::move(*rep));
    return reps_.size() - 1;
}

void CommonField::adjoin(const RealAlgebraic& v) {
    QPolynomial mv = v.minimal_polynomial();
    if (static_cast<int>(isolate_real_roots(mv).size()) != mv.degree())
        throw UnsupportedError("compositum construction needs totally real values, got a root of " + mv.str());

    // fast path: current field is Q, the new field is Q(v) itself
    if (field_.degree() == 1) {
        FieldPtr K = NumberFieldR::create(mv);
        int idx = -1;
        for (int k = 0; k < K->degree() && idx < 0; ++k) {
            const RealRoot& r = K->embedding(k);
            if (RealAlgebraic::from_irreducible(K->min_poly(), r.lo(), r.hi()) == v) idx = k;
        }
        if (idx < 0) throw DomainError("adjoined value not found among the embeddings");
        EmbeddedField next(K, idx);
        // migrate stored representations (all rational so far)
        std::vector<FieldElement> migrated;
        for (const auto& r : reps_) migrated.push_back(K->element(*r.as_rational()));
        field_ = next;
        reps_ = std::move(migrated);
        return;
    }

    // degree of v over the current field: locate the factor of mv that
    // vanishes at v, by interval refinement (the factors have disjoint roots)
    KPoly f = KPoly::from_rational(field_.field(), mv);
    std::vector<KPoly> cands;
    for (auto& [h, mult] : factor_over_field(f)) {
        (void)mult;
        if (h.degree() >= 1) cands.push_back(std::move(h));
    }
    Rational w(1, 4);
    while (cands.size() > 1) {
        auto [vlo, vhi] = v.enclosure(w);
        Ivl x{vlo, vhi};
        std::vector<KPoly> keep;
        for (const auto& h : cands) {
            Ivl acc{Rational(0), Rational(0)};
            for (int i = h.degree(); i >= 0; --i) {
                auto [clo, chi] = h.coeff(i).value_interval(field_.emb(), w);
                acc = ivl_add(ivl_mul(acc, x), Ivl{clo, chi});
            }
            if (acc.lo > 0 || acc.hi < 0) continue; // cannot vanish at v
            keep.push_back(h);
        }
        cands = std::move(keep);
        w /= 16;
    }
    if (cands.empty()) throw DomainError("no factor of the minimal polynomial vanishes at the value");
    const int e = cands[0].degree();
    const int target = field_.degree() * e;

    // primitive element xi = gen + c*v for the first c that reaches the
    // compositum degree; only finitely many c fail
    RealAlgebraic theta = field_.gen_value();
    for (long c = 1;; ++c) {
        RealAlgebraic xi = theta + v * RealAlgebraic(Rational(c));
        if (xi.degree() != target) continue;
        QPolynomial mxi = xi.minimal_polynomial();
        FieldPtr K = NumberFieldR::create(mxi);
        int idx = -1;
        for (int k = 0; k < K->degree() && idx < 0; ++k) {
            const RealRoot& r = K->embedding(k);
            if (RealAlgebraic::from_irreducible(K->min_poly(), r.lo(), r.hi()) == xi) idx = k;
        }
        if (idx < 0) throw DomainError("primitive element not found among the embeddings");
        EmbeddedField next(K, idx);

        auto vrep = next.express(v);
        if (!vrep) throw DomainError("adjoined value missing from the compositum");
        // gen_old = xi - c*v, so no second factorization is needed
        FieldElement theta_rep = K->gen() - *vrep * Rational(c);
        // theta_rep satisfies the old minimal polynomial and has the right
        // value by construction; verify the first, it is cheap
        KPoly old_min = KPoly::from_rational(K, field_.field()->min_poly());
        if (!old_min.eval(theta_rep).is_zero()) throw DomainError("generator migration failed");

        std::vector<FieldElement> migrated;
        migrated.reserve(reps_.size());
        for (const auto& r : reps_) {
            // rewrite the power-basis polynomial at the migrated generator
            QPolynomial p = r.as_poly();
            FieldElement acc = K->zero();
            for (int i = p.degree(); i >= 0; --i) acc = acc * theta_rep + K->element(p[i]);
            migrated.push_back(std::move(acc));
        }
        field_ = next;
        reps_ = std::move(migrated);
        return;
    }
}

EmbeddedField common_field(const std::vector<RealAlgebraic>& vals, std::vector<FieldElement>* reps) {
    CommonField cf;
    std::vector<size_t> idx;
    idx.reserve(vals.size());
    for (const auto& v : vals) idx.push_back(cf.add(v));
    if (reps) {
        reps->clear();
        for (size_t i : idx) reps->push_back(cf.rep(i));
    }
    return cf.field();
}

} // namespace mordell
