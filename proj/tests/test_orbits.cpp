#include <doctest.h>

#include <random>

#include "mordell/errors.hpp"
#include "mordell/field_poly.hpp"
#include "mordell/orbits.hpp"

using namespace mordell;

namespace {

QPolynomial poly(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return QPolynomial(v);
}

AlgebraPtr qn_algebra(int n) {
    std::vector<FieldPtr> comps(static_cast<size_t>(n), NumberFieldR::rationals());
    return EtaleAlgebra::create(std::move(comps));
}

std::vector<AlgebraElement> standard_basis(const AlgebraPtr& a) {
    std::vector<AlgebraElement> b;
    for (int i = 0; i < a->dim(); ++i) b.push_back(a->basis_element(i));
    return b;
}

Lattice zn_lattice(int n) {
    auto a = qn_algebra(n);
    return construct_lattice(a, standard_basis(a));
}

Lattice field_lattice(QPolynomial min_poly) {
    auto f = NumberFieldR::create(min_poly);
    auto a = EtaleAlgebra::create({f});
    return construct_lattice(a, standard_basis(a));
}

Lattice qsqrt2_lattice() {
    auto f = NumberFieldR::create(poly({-2, 0, 1}));
    auto a = EtaleAlgebra::create({f, f});
    return construct_lattice(a, standard_basis(a));
}

bool contains_sqrt2(const FieldPtr& f) {
    auto facs = factor_over_field(KPoly::from_rational(f, poly({-2, 0, 1})));
    for (const auto& [g, mult] : facs)
        if (g.degree() == 1) return true;
    return false;
}

Partition parts(int n, std::vector<std::vector<int>> blocks) { return Partition(n, std::move(blocks)); }

const OrbitReport* find_partition(const std::vector<OrbitReport>& reports, const Partition& p) {
    for (const auto& r : reports)
        if (r.algebra.partition == p) return &r;
    return nullptr;
}

// diag * M = M * q, entrywise and exactly
void check_intertwining(const Lattice& lat, const AssociatedAlgebra& a) {
    const int n = lat.n();
    for (size_t k = 0; k < a.q_basis.size(); ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                RealAlgebraic lhs = a.diagonals[k][static_cast<size_t>(i)] * lat.entry(i, j);
                RealAlgebraic rhs(Rational(0));
                for (int m = 0; m < n; ++m)
                    rhs = rhs + lat.entry(i, m) * RealAlgebraic(a.q_basis[k][static_cast<size_t>(m)][static_cast<size_t>(j)]);
                CHECK(lhs == rhs);
            }
}

} // namespace

TEST_CASE("associated algebra dimensions and bases") {
    // symbolic and ambient paths agree on the standard lattice
    Lattice z4s = zn_lattice(4);
    Lattice z4a = direct_sum(zn_lattice(2), zn_lattice(2));
    Partition p12 = parts(4, {{0, 1}, {2, 3}});
    for (const Lattice* lat : {&z4s, &z4a}) {
        AssociatedAlgebra a = associated_algebra(*lat, p12);
        CHECK(a.dim_q == 2);
        REQUIRE(a.decomposition.components.size() == 2);
        CHECK(a.decomposition.components[0]->degree() == 1);
        CHECK(a.decomposition.components[1]->degree() == 1);
        CHECK_FALSE(a.is_field);
        CHECK(a.induced_partition == p12);
        check_intertwining(*lat, a);
    }

    // scalars only under the one-block partition
    AssociatedAlgebra sc = associated_algebra(qsqrt2_lattice(), Partition::coarsest(4));
    CHECK(sc.dim_q == 1);
    CHECK(sc.is_field);
    CHECK(sc.decomposition.components[0]->degree() == 1);
    CHECK(sc.induced_partition == Partition::coarsest(4));

    Lattice qs = qsqrt2_lattice();
    Partition p2 = parts(4, {{0, 2}, {1, 3}});
    AssociatedAlgebra a2 = associated_algebra(qs, p2);
    CHECK(a2.dim_q == 2);
    CHECK(a2.is_field);
    REQUIRE(a2.decomposition.components.size() == 1);
    CHECK(a2.decomposition.components[0]->degree() == 2);
    CHECK(contains_sqrt2(a2.decomposition.components[0]));
    CHECK(a2.induced_partition == p2);
    CHECK(a2.elements.size() == 2);
    check_intertwining(qs, a2);

    // products of basis elements stay in the span
    {
        QMatrix sys;
        for (const auto& q : a2.q_basis) {
            QVector flat;
            for (const auto& row : q)
                for (const auto& x : row) flat.push_back(x);
            sys.push_back(std::move(flat));
        }
        sys = transpose(sys);
        for (const auto& qa : a2.q_basis)
            for (const auto& qb : a2.q_basis) {
                QMatrix prod = mat_mul(qa, qb);
                QVector flat;
                for (const auto& row : prod)
                    for (const auto& x : row) flat.push_back(x);
                CHECK(solve(sys, flat).has_value());
            }
    }

    // dimension never exceeds the block count; refining grows the algebra
    auto all4 = all_partitions(4);
    std::vector<AssociatedAlgebra> sweep;
    for (const auto& p : all4) sweep.push_back(associated_algebra(qs, p));
    for (const auto& a : sweep) {
        CHECK(a.dim_q <= a.partition.num_blocks());
        CHECK(a.partition.refines(a.induced_partition));
    }
    for (const auto& afine : sweep)
        for (const auto& acoarse : sweep)
            if (afine.partition.refines(acoarse.partition)) CHECK(acoarse.dim_q <= afine.dim_q);

    CHECK_THROWS_AS(associated_algebra(qs, Partition::coarsest(3)), InvalidInputError);
}

TEST_CASE("orbit classification matches the dimension and field tests") {
    Lattice z3 = zn_lattice(3);
    for (const auto& p : all_partitions(3)) {
        OrbitReport r = classify_orbit(z3, p);
        CHECK(r.cls != OrbitClass::not_closed);
        CHECK((r.cls == OrbitClass::finite_volume) == (p.num_blocks() == 1));
    }

    Lattice qs = qsqrt2_lattice();
    CHECK(classify_orbit(qs, parts(4, {{0, 1}, {2, 3}})).cls == OrbitClass::closed_infinite_volume);
    CHECK(classify_orbit(qs, parts(4, {{0, 2}, {1, 3}})).cls == OrbitClass::finite_volume);
    OrbitReport nc = classify_orbit(qs, parts(4, {{0, 2}, {1}, {3}}));
    CHECK(nc.cls == OrbitClass::not_closed);
    CHECK(nc.algebra.dim_q == 2);
    CHECK(nc.algebra.partition.refines(nc.algebra.induced_partition));

    // ambient path with algebraic entries: the diagonal action keeps the class
    RealAlgebraic s = RealAlgebraic(Rational(2)).nth_root(2);
    Lattice tilted = apply_diagonal(field_lattice(poly({-2, 0, 1})), {s, s.inverse()});
    REQUIRE_FALSE(tilted.origin().has_value());
    OrbitReport tr = classify_orbit(tilted, Partition::finest(2));
    CHECK(tr.cls == OrbitClass::finite_volume);
    CHECK(tr.algebra.dim_q == 2);
    CHECK(contains_sqrt2(tr.algebra.decomposition.components[0]));

    // a lattice built from algebra data always has a closed full diagonal orbit
    for (Lattice lat : {field_lattice(poly({-2, 0, 1})), qsqrt2_lattice(), zn_lattice(3)}) {
        OrbitReport r = classify_orbit(lat, Partition::finest(lat.n()));
        CHECK(r.cls != OrbitClass::not_closed);
        CHECK(r.algebra.dim_q == lat.n());
    }

    CHECK(orbit_class_name(OrbitClass::not_closed) == "NOT_CLOSED");
    CHECK(orbit_class_name(OrbitClass::closed_infinite_volume) == "CLOSED_INFINITE_VOLUME");
    CHECK(orbit_class_name(OrbitClass::finite_volume) == "FINITE_VOLUME");
}

TEST_CASE("orbit survey lists the closed partitions") {
    auto z3 = all_closed_orbits(zn_lattice(3));
    CHECK(z3.size() == 5);
    int finite = 0;
    for (const auto& r : z3)
        if (r.cls == OrbitClass::finite_volume) {
            ++finite;
            CHECK(r.algebra.partition == Partition::coarsest(3));
        }
    CHECK(finite == 1);

    // one entry per subalgebra of Q(sqrt2) + Q(sqrt2): seven in total
    auto qs = all_closed_orbits(qsqrt2_lattice());
    CHECK(qs.size() == 7);
    auto* fine = find_partition(qs, Partition::finest(4));
    REQUIRE(fine);
    CHECK(fine->cls == OrbitClass::closed_infinite_volume);
    CHECK(fine->algebra.dim_q == 4);
    auto* coarse = find_partition(qs, Partition::coarsest(4));
    REQUIRE(coarse);
    CHECK(coarse->cls == OrbitClass::finite_volume);
    auto* p1 = find_partition(qs, parts(4, {{0, 1}, {2, 3}}));
    REQUIRE(p1);
    CHECK(p1->cls == OrbitClass::closed_infinite_volume);
    auto* p2 = find_partition(qs, parts(4, {{0, 2}, {1, 3}}));
    REQUIRE(p2);
    CHECK(p2->cls == OrbitClass::finite_volume);
    auto* twisted = find_partition(qs, parts(4, {{0, 3}, {1, 2}}));
    REQUIRE(twisted);
    CHECK(twisted->cls == OrbitClass::finite_volume);

    // order reversal: refining the partition can only grow the algebra
    for (const auto& ra : qs)
        for (const auto& rb : qs)
            if (ra.algebra.partition.refines(rb.algebra.partition))
                CHECK(rb.algebra.dim_q <= ra.algebra.dim_q);

    // finite volume needs equal block sizes
    for (const auto& r : qs)
        if (r.cls == OrbitClass::finite_volume) {
            const auto& blocks = r.algebra.partition.blocks();
            for (const auto& b : blocks) CHECK(b.size() == blocks[0].size());
        }

    // cubic field without proper subfields: only the two extremes survive
    auto cubic = all_closed_orbits(field_lattice(poly({-1, -3, 0, 1})));
    CHECK(cubic.size() == 2);
    for (const auto& r : cubic) CHECK(r.cls == OrbitClass::finite_volume);

    CHECK_THROWS_AS(all_closed_orbits(direct_sum(zn_lattice(2), zn_lattice(2))), UnsupportedError);
    CHECK_THROWS_AS(all_closed_orbits(zn_lattice(11)), UnsupportedError);
}

TEST_CASE("coarsened partition groups coordinates by component") {
    Lattice qs = qsqrt2_lattice();
    AssociatedAlgebra a2 = associated_algebra(qs, parts(4, {{0, 2}, {1, 3}}));
    CHECK(tilde_partition(a2) == Partition::coarsest(4));

    AssociatedAlgebra a1 = associated_algebra(qs, parts(4, {{0, 1}, {2, 3}}));
    CHECK(tilde_partition(a1) == parts(4, {{0, 1}, {2, 3}}));

    AssociatedAlgebra afine = associated_algebra(direct_sum(zn_lattice(2), zn_lattice(2)), Partition::finest(4));
    CHECK(tilde_partition(afine) == Partition::finest(4));

    AssociatedAlgebra bad = associated_algebra(qs, parts(4, {{0, 2}, {1}, {3}}));
    CHECK_THROWS_AS(tilde_partition(bad), DomainError);
}

TEST_CASE("kernel rank comparison across conjugate blocks") {
    Lattice qs = qsqrt2_lattice();
    Partition p2 = parts(4, {{0, 2}, {1, 3}});
    CHECK(kernel_lemma_check(qs, p2, 0, 1, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK(kernel_lemma_check(qs, p2, 0, 0, {{1, 2, 3, 4}}));
    CHECK(kernel_lemma_check(qs, p2, 0, 1, {}));

    CHECK_THROWS_AS(kernel_lemma_check(qs, parts(4, {{0, 1}, {2, 3}}), 0, 1, {{1, 0, 0, 0}}), DomainError);
    CHECK_THROWS_AS(kernel_lemma_check(qs, parts(4, {{0, 2}, {1}, {3}}), 0, 1, {{1, 0, 0, 0}}), DomainError);
    CHECK_THROWS_AS(kernel_lemma_check(qs, p2, 0, 2, {}), InvalidInputError);
    CHECK_THROWS_AS(kernel_lemma_check(direct_sum(zn_lattice(2), zn_lattice(2)), p2, 0, 1, {}), UnsupportedError);

    // quartic field with a quadratic subfield: blocks mix embeddings, the
    // rank comparison runs on real algebraic entries and always agrees
    Lattice quart = field_lattice(poly({2, 0, -4, 0, 1}));
    Partition sub = parts(4, {{0, 3}, {1, 2}});
    OrbitReport r = classify_orbit(quart, sub);
    REQUIRE(r.cls == OrbitClass::finite_volume);
    CHECK(contains_sqrt2(r.algebra.decomposition.components[0]));
    std::mt19937 rng(20240817u);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> count(1, 4);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::vector<long long>> vecs;
        const int t = count(rng);
        for (int v = 0; v < t; ++v) {
            std::vector<long long> c(4);
            for (auto& x : c) x = coeff(rng);
            vecs.push_back(std::move(c));
        }
        CHECK(kernel_lemma_check(quart, sub, 0, 1, vecs));
        CHECK(kernel_lemma_check(qs, p2, 0, 1, vecs));
    }
}

TEST_CASE("subalgebras regenerate from their coordinate partitions") {
    Lattice qs = qsqrt2_lattice();
    const auto& alg = qs.origin()->algebra;
    auto f = alg->component(0);
    FieldElement one = f->element(Rational(1));
    FieldElement rt = f->element({Rational(0), Rational(1)});
    FieldElement zero = f->element(Rational(0));

    CHECK(subalgebra_roundtrip_check(qs, {alg->one()}));
    CHECK(subalgebra_roundtrip_check(qs, standard_basis(alg)));
    // diagonal copy of the field
    CHECK(subalgebra_roundtrip_check(qs, {alg->one(), alg->element({rt, rt})}));
    // twisted diagonal: conjugate parts
    CHECK(subalgebra_roundtrip_check(qs, {alg->one(), alg->element({rt, -rt})}));
    CHECK(subalgebra_roundtrip_check(qs, {alg->idempotent(0), alg->idempotent(1)}));
    // not unital, spans less than the algebra its partition generates
    CHECK_FALSE(subalgebra_roundtrip_check(qs, {alg->element({rt, rt})}));
    CHECK_FALSE(subalgebra_roundtrip_check(qs, {alg->element({one, zero})}));

    CHECK_THROWS_AS(subalgebra_roundtrip_check(qs, {}), InvalidInputError);
    auto other = qn_algebra(4);
    CHECK_THROWS_AS(subalgebra_roundtrip_check(qs, {other->one()}), InvalidInputError);
    CHECK_THROWS_AS(subalgebra_roundtrip_check(direct_sum(zn_lattice(2), zn_lattice(2)), {alg->one()}),
                    UnsupportedError);
}
