#include "mordell/etale.hpp"

#include <sstream>

#include "mordell/errors.hpp"

namespace mordell {

AlgebraElement::AlgebraElement(AlgebraPtr alg, std::vector<FieldElement> parts) : alg_(std::move(alg)), parts_(std::move(parts)) {
    if (!alg_) throw DomainError("algebra element without an algebra");
    if (static_cast<int>(parts_.size()) != alg_->num_components())
        throw DomainError("component count mismatch in algebra element");
    for (int j = 0; j < alg_->num_components(); ++j)
        if (parts_[static_cast<size_t>(j)].field().get() != alg_->component(j).get())
            throw DomainError("algebra element part lies in the wrong field");
}

const FieldElement& AlgebraElement::part(int j) const {
    if (j < 0 || j >= static_cast<int>(parts_.size())) throw DomainError("component index out of range");
    return parts_[static_cast<size_t>(j)];
}

bool AlgebraElement::is_zero() const {
    for (const auto& p : parts_)
        if (!p.is_zero()) return false;
    return true;
}

bool AlgebraElement::is_unit() const {
    for (const auto& p : parts_)
        if (p.is_zero()) return false;
    return true;
}

AlgebraElement AlgebraElement::operator-() const {
    std::vector<FieldElement> p;
    p.reserve(parts_.size());
    for (const auto& x : parts_) p.push_back(-x);
    return AlgebraElement(alg_, std::move(p));
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (alg_.get() != o.alg_.get()) throw DomainError("elements of different algebras");
    std::vector<FieldElement> p;
    p.reserve(parts_.size());
    for (size_t j = 0; j < parts_.size(); ++j) p.push_back(parts_[j] + o.parts_[j]);
    return AlgebraElement(alg_, std::move(p));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    if (alg_.get() != o.alg_.get()) throw DomainError("elements of different algebras");
    std::vector<FieldElement> p;
    p.reserve(parts_.size());
    for (size_t j = 0; j < parts_.size(); ++j) p.push_back(parts_[j] * o.parts_[j]);
    return AlgebraElement(alg_, std::move(p));
}

AlgebraElement AlgebraElement::operator*(const Rational& c) const {
    std::vector<FieldElement> p;
    p.reserve(parts_.size());
    for (const auto& x : parts_) p.push_back(x * c);
    return AlgebraElement(alg_, std::move(p));
}

AlgebraElement AlgebraElement::inverse() const {
    std::vector<FieldElement> p;
    p.reserve(parts_.size());
    for (const auto& x : parts_) p.push_back(x.inverse());
    return AlgebraElement(alg_, std::move(p));
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return alg_.get() == o.alg_.get() && parts_ == o.parts_;
}

QVector AlgebraElement::coords() const {
    QVector x;
    x.reserve(static_cast<size_t>(alg_->dim()));
    for (const auto& p : parts_)
        for (const auto& c : p.coords()) x.push_back(c);
    return x;
}

std::string AlgebraElement::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t j = 0; j < parts_.size(); ++j) {
        if (j) os << " | ";
        os << parts_[j].str();
    }
    os << ")";
    return os.str();
}

EtaleAlgebra::EtaleAlgebra(std::vector<FieldPtr> comps, std::vector<std::pair<int, int>> table) : components_(std::move(comps)), hom_table_(std::move(table)) {
    for (const auto& c : components_) dim_ += c->degree();
}

AlgebraPtr EtaleAlgebra::create(std::vector<FieldPtr> components) {
    std::vector<std::pair<int, int>> table;
    for (size_t j = 0; j < components.size(); ++j)
        for (int k = 0; k < components[j]->degree(); ++k) table.emplace_back(static_cast<int>(j), k);
    return create(std::move(components), std::move(table));
}

AlgebraPtr EtaleAlgebra::create(std::vector<FieldPtr> components, std::vector<std::pair<int, int>> hom_table) {
    if (components.empty()) throw InvalidInputError("algebra needs at least one component");
    int n = 0;
    for (const auto& c : components) {
        if (!c) throw InvalidInputError("null component");
        n += c->degree();
    }
    if (static_cast<int>(hom_table.size()) != n) throw InvalidInputError("hom table size does not match dimension");
    // bijection onto all (component, embedding) pairs
    std::vector<std::vector<int>> seen(components.size());
    for (size_t j = 0; j < components.size(); ++j) seen[j].assign(static_cast<size_t>(components[j]->degree()), 0);
    for (const auto& [j, k] : hom_table) {
        if (j < 0 || j >= static_cast<int>(components.size())) throw InvalidInputError("hom table component index out of range");
        if (k < 0 || k >= components[static_cast<size_t>(j)]->degree()) throw InvalidInputError("hom table embedding index out of range");
        if (seen[static_cast<size_t>(j)][static_cast<size_t>(k)]++) throw InvalidInputError("hom table entry repeated");
    }
    return AlgebraPtr(new EtaleAlgebra(std::move(components), std::move(hom_table)));
}

const FieldPtr& EtaleAlgebra::component(int j) const {
    if (j < 0 || j >= num_components()) throw DomainError("component index out of range");
    return components_[static_cast<size_t>(j)];
}

AlgebraElement EtaleAlgebra::zero() const {
    std::vector<FieldElement> p;
    for (const auto& c : components_) p.push_back(c->zero());
    return AlgebraElement(shared_from_this(), std::move(p));
}

AlgebraElement EtaleAlgebra::one() const {
    std::vector<FieldElement> p;
    for (const auto& c : components_) p.push_back(c->one());
    return AlgebraElement(shared_from_this(), std::move(p));
}

AlgebraElement EtaleAlgebra::idempotent(int j) const {
    if (j < 0 || j >= num_components()) throw DomainError("component index out of range");
    std::vector<FieldElement> p;
    for (int t = 0; t < num_components(); ++t) p.push_back(t == j ? components_[static_cast<size_t>(t)]->one() : components_[static_cast<size_t>(t)]->zero());
    return AlgebraElement(shared_from_this(), std::move(p));
}

AlgebraElement EtaleAlgebra::element(std::vector<FieldElement> parts) const {
    return AlgebraElement(shared_from_this(), std::move(parts));
}

AlgebraElement EtaleAlgebra::from_coords(const QVector& x) const {
    if (static_cast<int>(x.size()) != dim_) throw InvalidInputError("coordinate count does not match algebra dimension");
    std::vector<FieldElement> p;
    size_t pos = 0;
    for (const auto& c : components_) {
        std::vector<Rational> v(x.begin() + static_cast<long>(pos), x.begin() + static_cast<long>(pos) + c->degree());
        pos += static_cast<size_t>(c->degree());
        p.push_back(c->element(std::move(v)));
    }
    return AlgebraElement(shared_from_this(), std::move(p));
}

AlgebraElement EtaleAlgebra::basis_element(int i) const {
    if (i < 0 || i >= dim_) throw DomainError("basis index out of range");
    QVector x(static_cast<size_t>(dim_), Rational(0));
    x[static_cast<size_t>(i)] = 1;
    return from_coords(x);
}

RealAlgebraic hom_value(const AlgebraElement& a, int i) {
    const auto& table = a.algebra()->hom_table();
    if (i < 0 || i >= static_cast<int>(table.size())) throw DomainError("homomorphism index out of range");
    auto [j, k] = table[static_cast<size_t>(i)];
    return a.part(j).value(k);
}

std::vector<RealAlgebraic> hom_values(const AlgebraElement& a) {
    std::vector<RealAlgebraic> out;
    out.reserve(a.algebra()->hom_table().size());
    for (int i = 0; i < a.algebra()->dim(); ++i) out.push_back(hom_value(a, i));
    return out;
}

int hom_sign(const AlgebraElement& a, int i) {
    const auto& table = a.algebra()->hom_table();
    if (i < 0 || i >= static_cast<int>(table.size())) throw DomainError("homomorphism index out of range");
    auto [j, k] = table[static_cast<size_t>(i)];
    return a.part(j).sign_at(k);
}

std::pair<Rational, Rational> hom_interval(const AlgebraElement& a, int i, const Rational& w) {
    const auto& table = a.algebra()->hom_table();
    if (i < 0 || i >= static_cast<int>(table.size())) throw DomainError("homomorphism index out of range");
    auto [j, k] = table[static_cast<size_t>(i)];
    return a.part(j).value_interval(k, w);
}

} // namespace mordell
