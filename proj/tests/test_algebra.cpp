#include <doctest.h>

#include "mordell/embedding.hpp"
#include "mordell/errors.hpp"
#include "mordell/etale.hpp"
#include "mordell/field_poly.hpp"
#include "mordell/partition.hpp"
#include "mordell/wedderburn.hpp"

using namespace mordell;

namespace {

QPolynomial poly(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return QPolynomial(v);
}

QMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    QMatrix m;
    for (const auto& r : rows) {
        QVector row;
        for (long x : r) row.emplace_back(x);
        m.push_back(row);
    }
    return m;
}

QMatrix diag4(long a, long b, long c, long d) {
    return mat({{a, 0, 0, 0}, {0, b, 0, 0}, {0, 0, c, 0}, {0, 0, 0, d}});
}

FieldPtr sqrt2_field() { return NumberFieldR::create(poly({-2, 0, 1})); }

// the abstract field matters, not the generator the sweep happened to pick
bool contains_sqrt2(const FieldPtr& F) {
    auto facs = factor_over_field(KPoly::from_rational(F, poly({-2, 0, 1})));
    for (const auto& [f, mult] : facs)
        if (f.degree() == 1) return true;
    return false;
}

// per target component, blocks meeting that component's homs must share one size
void check_equal_block_sizes(const SubalgebraEmbedding& emb, const Partition& p) {
    const auto& table = emb.target()->hom_table();
    for (int j = 0; j < emb.target()->num_components(); ++j) {
        int expected = -1;
        for (int b = 0; b < p.num_blocks(); ++b) {
            int hits = 0;
            for (int i : p.block(b))
                if (table[static_cast<size_t>(i)].first == j) ++hits;
            if (hits == 0) continue;
            if (expected < 0) expected = hits;
            CHECK(hits == expected);
        }
    }
}

} // namespace

TEST_CASE("partition canonical form, refinement, enumeration") {
    Partition p(4, {{2, 3}, {0, 1}});
    CHECK(p.str() == "{{1,2},{3,4}}");
    CHECK(p.num_blocks() == 2);
    CHECK(p.block_of(2) == 1);
    CHECK(p.same_block(0, 1));
    CHECK(!p.same_block(1, 2));

    Partition q = Partition::from_labels({5, 7, 5, 7});
    CHECK(q.str() == "{{1,3},{2,4}}");

    CHECK(Partition::finest(4).refines(p));
    CHECK(p.refines(Partition::coarsest(4)));
    CHECK(!p.refines(q));
    CHECK(!q.refines(p));
    CHECK(p.refines(p));

    CHECK_THROWS_AS(Partition(3, {{0, 1}}), InvalidInputError);         // 2 missing
    CHECK_THROWS_AS(Partition(3, {{0, 1}, {1, 2}}), InvalidInputError); // 1 repeated
    CHECK_THROWS_AS(Partition(3, {{0, 1, 2}, {}}), InvalidInputError);  // empty block

    auto all3 = all_partitions(3);
    CHECK(all3.size() == 5);
    CHECK(all3.front() == Partition::coarsest(3));
    CHECK(all3.back() == Partition::finest(3));
    CHECK(all_partitions(4).size() == 15);
    for (size_t i = 0; i + 1 < all3.size(); ++i) CHECK(all3[i] < all3[i + 1]);
    CHECK_THROWS_AS(all_partitions(13), UnsupportedError);
}

TEST_CASE("etale algebra homomorphism enumeration and arithmetic") {
    auto Q = NumberFieldR::rationals();
    auto K = sqrt2_field();

    auto A = EtaleAlgebra::create({K, K});
    CHECK(A->dim() == 4);
    CHECK(A->num_components() == 2);
    std::vector<std::pair<int, int>> expect{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(A->hom_table() == expect);

    // rational components evaluate to themselves
    auto QQ = EtaleAlgebra::create({Q, Q});
    auto a23 = QQ->element({Q->element(Rational(2)), Q->element(Rational(3))});
    auto vals = hom_values(a23);
    CHECK(vals[0] == RealAlgebraic(Rational(2)));
    CHECK(vals[1] == RealAlgebraic(Rational(3)));

    // embedding order within one component is ascending: -sqrt2 before sqrt2
    auto s = A->element({K->gen(), K->one() + K->gen()});
    auto sv = hom_values(s);
    CHECK(sv[0] == -sv[1]);
    CHECK(sv[0] < sv[1]);
    CHECK(sv[3] == sv[1] + RealAlgebraic(Rational(1)));
    CHECK(hom_sign(s, 0) == -1);
    CHECK(hom_sign(s, 1) == 1);

    // homs are ring homs, per coordinate
    auto b = A->element({K->one() + K->gen() * Rational(2), K->gen()});
    auto ab = s * b;
    auto av = hom_values(s), bv = hom_values(b), abv = hom_values(ab);
    for (int i = 0; i < 4; ++i) {
        CHECK(abv[static_cast<size_t>(i)] == av[static_cast<size_t>(i)] * bv[static_cast<size_t>(i)]);
        CHECK(hom_values(s + b)[static_cast<size_t>(i)] == av[static_cast<size_t>(i)] + bv[static_cast<size_t>(i)]);
    }

    // product of the homs of one component is the field norm, a rational
    RealAlgebraic comp0 = bv[0] * bv[1];
    CHECK(comp0 == RealAlgebraic(b.part(0).norm()));

    // units and inverses
    CHECK(b.is_unit());
    CHECK(b.inverse() * b == A->one());
    auto with_zero = A->element({K->zero(), K->one()});
    CHECK(!with_zero.is_unit());
    CHECK_THROWS_AS(with_zero.inverse(), DomainError);
    CHECK(with_zero == A->idempotent(1));

    // coordinates walk the concatenated power bases
    QVector c = b.coords();
    CHECK(c == QVector{Rational(1), Rational(2), Rational(0), Rational(1)});
    CHECK(A->from_coords(c) == b);
    CHECK(A->basis_element(3) == A->element({K->zero(), K->gen()}));

    // custom hom tables must be bijections onto (component, embedding) pairs
    auto B = EtaleAlgebra::create({K, K}, {{1, 0}, {0, 0}, {0, 1}, {1, 1}});
    CHECK(hom_values(s)[0] == hom_value(A->element({K->gen(), K->gen()}), 0)); // sanity: same field order
    CHECK(hom_value(B->element({K->gen(), K->one()}), 0) == RealAlgebraic(Rational(1)));
    CHECK_THROWS_AS(EtaleAlgebra::create({K}, {{0, 0}}), InvalidInputError);                          // wrong length
    CHECK_THROWS_AS(EtaleAlgebra::create({K}, {{0, 0}, {0, 0}}), InvalidInputError);                  // repeated
    CHECK_THROWS_AS(EtaleAlgebra::create({K}, {{0, 1}, {0, 2}}), InvalidInputError);                  // bad embedding
    CHECK_THROWS_AS(EtaleAlgebra::create({}), InvalidInputError);
}

TEST_CASE("subalgebra embedding validation") {
    auto Q = NumberFieldR::rationals();
    auto K = sqrt2_field();
    auto AQ = EtaleAlgebra::create({Q});
    auto QQ = EtaleAlgebra::create({Q, Q});
    auto KK = EtaleAlgebra::create({K, K});
    auto AK = EtaleAlgebra::create({K});

    // 1 -> (1,0) is multiplicative but misses the unit
    CHECK_THROWS_AS(SubalgebraEmbedding(AQ, QQ, mat({{1, 0}})), InvalidInputError);
    // sqrt2 -> 1+sqrt2 breaks multiplicativity
    CHECK_THROWS_AS(SubalgebraEmbedding(AK, AK, mat({{1, 0}, {1, 1}})), InvalidInputError);
    // rank-deficient map
    CHECK_THROWS_AS(SubalgebraEmbedding(QQ, AQ, mat({{1}, {1}})), InvalidInputError);
    // shape mismatch
    CHECK_THROWS_AS(SubalgebraEmbedding(AQ, QQ, mat({{1, 1}, {0, 0}})), InvalidInputError);

    SubalgebraEmbedding diag(AK, KK, mat({{1, 0, 1, 0}, {0, 1, 0, 1}}));
    auto img = diag.apply(AK->element({K->gen()}));
    CHECK(img == KK->element({K->gen(), K->gen()}));
    CHECK_THROWS_AS(diag.apply(KK->one()), DomainError);
}

TEST_CASE("algebra partition of embeddings") {
    auto Q = NumberFieldR::rationals();
    auto K = sqrt2_field();
    auto AQ = EtaleAlgebra::create({Q});
    auto Q4 = EtaleAlgebra::create({Q, Q, Q, Q});
    auto QQ = EtaleAlgebra::create({Q, Q});
    auto KK = EtaleAlgebra::create({K, K});
    auto AK = EtaleAlgebra::create({K});

    // scalars land in every coordinate at once
    SubalgebraEmbedding diag_q4(AQ, Q4, mat({{1, 1, 1, 1}}));
    CHECK(algebra_partition(diag_q4) == Partition::coarsest(4));
    CHECK(is_essential(diag_q4));
    CHECK(!is_aligned(diag_q4));
    check_equal_block_sizes(diag_q4, algebra_partition(diag_q4));

    // componentwise rationals cannot see the conjugation inside each factor
    SubalgebraEmbedding cw(QQ, KK, mat({{1, 0, 0, 0}, {0, 0, 1, 0}}));
    CHECK(algebra_partition(cw).str() == "{{1,2},{3,4}}");
    CHECK(!is_essential(cw));
    CHECK(is_aligned(cw));
    check_equal_block_sizes(cw, algebra_partition(cw));

    // the diagonal field ties matching embeddings of the two factors
    SubalgebraEmbedding dk(AK, KK, mat({{1, 0, 1, 0}, {0, 1, 0, 1}}));
    CHECK(algebra_partition(dk).str() == "{{1,3},{2,4}}");
    CHECK(is_essential(dk));
    CHECK(!is_aligned(dk));
    check_equal_block_sizes(dk, algebra_partition(dk));

    // proper subfield: both embeddings agree on it
    SubalgebraEmbedding qk(AQ, AK, mat({{1, 0}}));
    CHECK(algebra_partition(qk) == Partition::coarsest(2));
    CHECK(!is_essential(qk));
    CHECK(is_aligned(qk));
}

TEST_CASE("wedderburn splits diagonal rational spans") {
    auto one = wedderburn({identity_matrix(4)});
    CHECK(one.dim() == 1);
    CHECK(one.components.size() == 1);
    CHECK(one.components[0]->degree() == 1);
    CHECK(one.idempotents[0] == identity_matrix(4));
    CHECK(one.unit == identity_matrix(4));
    CHECK(is_field(one));

    auto two = wedderburn({identity_matrix(4), diag4(1, 1, 0, 0)});
    CHECK(two.dim() == 2);
    REQUIRE(two.components.size() == 2);
    CHECK(two.components[0]->degree() == 1);
    CHECK(two.components[1]->degree() == 1);
    CHECK(two.idempotents[0] == diag4(1, 1, 0, 0));
    CHECK(two.idempotents[1] == diag4(0, 0, 1, 1));
    CHECK(!is_field(two));
    CHECK(two.generator_minpoly.degree() == 2);
    CHECK(gcd(two.generator_minpoly, two.generator_minpoly.derivative()).degree() == 0);
}

TEST_CASE("wedderburn recognizes companion block fields") {
    QMatrix C = mat({{0, 2}, {1, 0}}); // multiplication by sqrt2 on {1, sqrt2}
    auto field2 = wedderburn({identity_matrix(2), C});
    CHECK(field2.dim() == 2);
    REQUIRE(field2.components.size() == 1);
    CHECK(field2.components[0]->degree() == 2);
    CHECK(contains_sqrt2(field2.components[0]));
    CHECK(is_field(field2));
    CHECK(field2.idempotents[0] == identity_matrix(2));

    // one copy of the field sitting diagonally across two blocks
    QMatrix D = mat({{0, 2, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 1, 0}});
    auto diag_field = wedderburn({identity_matrix(4), D});
    CHECK(diag_field.dim() == 2);
    CHECK(is_field(diag_field));
    CHECK(contains_sqrt2(diag_field.components[0]));

    // the full sum needs the block idempotents in the span
    QMatrix e1 = diag4(1, 1, 0, 0), e2 = diag4(0, 0, 1, 1);
    QMatrix c1 = mat({{0, 2, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    QMatrix c2 = mat({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 1, 0}});
    auto sum = wedderburn({e1, e2, c1, c2});
    CHECK(sum.dim() == 4);
    REQUIRE(sum.components.size() == 2);
    CHECK(contains_sqrt2(sum.components[0]));
    CHECK(contains_sqrt2(sum.components[1]));
    bool block_split = (sum.idempotents[0] == e1 && sum.idempotents[1] == e2) ||
                       (sum.idempotents[0] == e2 && sum.idempotents[1] == e1);
    CHECK(block_split);
    CHECK(!is_field(sum));

    // mixed degrees sort rational components first
    QMatrix g = mat({{3, 0, 0}, {0, 0, 2}, {0, 1, 0}});
    auto mixed = wedderburn({identity_matrix(3), g, mat_mul(g, g)});
    CHECK(mixed.dim() == 3);
    REQUIRE(mixed.components.size() == 2);
    CHECK(mixed.components[0]->degree() == 1);
    CHECK(mixed.components[1]->degree() == 2);
    CHECK(contains_sqrt2(mixed.components[1]));
    CHECK(mixed.idempotents[0] == mat({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
    CHECK(mixed.idempotents[1] == mat({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("wedderburn invariants hold across decompositions") {
    QMatrix C = mat({{0, 2}, {1, 0}});
    std::vector<std::vector<QMatrix>> inputs = {
        {identity_matrix(4)},
        {identity_matrix(4), diag4(1, 1, 0, 0)},
        {identity_matrix(2), C},
        {diag4(1, 1, 0, 0), diag4(0, 0, 1, 1),
         mat({{0, 2, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
         mat({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 1, 0}})},
        {mat({{1, 0}, {0, 0}})}, // unit of the algebra differs from the ambient identity
        {identity_matrix(3), mat({{3, 0, 0}, {0, 0, 2}, {0, 1, 0}}),
         mat({{9, 0, 0}, {0, 2, 0}, {0, 0, 2}})},
    };
    for (const auto& in : inputs) {
        auto d = wedderburn(in);
        int degsum = 0;
        for (const auto& f : d.components) degsum += f->degree();
        CHECK(degsum == d.dim());
        CHECK(d.generator_minpoly.degree() == d.dim());
        QMatrix total(static_cast<size_t>(d.ambient_n), QVector(static_cast<size_t>(d.ambient_n), Rational(0)));
        for (size_t i = 0; i < d.idempotents.size(); ++i) {
            CHECK(mat_mul(d.idempotents[i], d.idempotents[i]) == d.idempotents[i]);
            for (size_t j = i + 1; j < d.idempotents.size(); ++j) {
                QMatrix z(static_cast<size_t>(d.ambient_n), QVector(static_cast<size_t>(d.ambient_n), Rational(0)));
                CHECK(mat_mul(d.idempotents[i], d.idempotents[j]) == z);
            }
            for (size_t r = 0; r < total.size(); ++r)
                for (size_t c = 0; c < total.size(); ++c) total[r][c] += d.idempotents[i][r][c];
        }
        CHECK(total == d.unit);
        CHECK(mat_mul(d.unit, d.generator) == d.generator);
    }

    // dependent inputs collapse to the same algebra
    QMatrix s = diag4(1, 1, 0, 0);
    QMatrix t = identity_matrix(4);
    for (size_t r = 0; r < 4; ++r)
        for (size_t c = 0; c < 4; ++c) t[r][c] += s[r][c];
    auto d = wedderburn({identity_matrix(4), identity_matrix(4), s, t});
    CHECK(d.dim() == 2);
}

TEST_CASE("wedderburn rejects non-algebras and nilpotents") {
    CHECK_THROWS_AS(wedderburn({}), InvalidInputError);
    CHECK_THROWS_AS(wedderburn({mat({{1, 0}})}), InvalidInputError); // not square

    // square escapes the span
    CHECK_THROWS_AS(wedderburn({mat({{1, 0}, {0, 2}})}), NotAnAlgebraError);
    // matrix units do not commute
    CHECK_THROWS_AS(wedderburn({mat({{1, 0}, {0, 0}}), mat({{0, 0}, {0, 1}}),
                                mat({{0, 1}, {0, 0}}), mat({{0, 0}, {1, 0}})}),
                    NotAnAlgebraError);

    QMatrix N = mat({{0, 1}, {0, 0}});
    CHECK_THROWS_AS(wedderburn({N}), NotSemisimpleError);
    CHECK_THROWS_AS(wedderburn({identity_matrix(2), N}), NotSemisimpleError);

    // rotation by 90 degrees generates a complex quadratic field
    CHECK_THROWS_AS(wedderburn({identity_matrix(2), mat({{0, -1}, {1, 0}})}), UnsupportedError);
}
