#include <array>

#include "doctest.h"
#include "specdata/chow.hpp"
#include "specdata/families.hpp"
#include "specdata/field.hpp"
#include "specdata/rng.hpp"

using namespace specdata;

namespace {

using QP = UniPoly<Rational>;

QP qp(std::initializer_list<long long> coeffs) {
    std::vector<Rational> c;
    for (long long v : coeffs) c.emplace_back(v);
    return QP(std::move(c));
}

const QP s = QP::variable();

/// Element c0 + c1 t1 + c2 t2 of the ruled-surface algebra over k[s].
struct AlgElem {
    std::array<QP, 3> c;
};

/// Multiply an element by a generator (0 = t1, 1 = t2) and reduce with the
/// rewrite rules t1^2 -> -a1 t1 - a2, t1 t2 -> -(a1/2) t2, t2^2 -> 0.
AlgElem mul_gen(const AlgElem& x, int gen, const QP& a1, const QP& a2) {
    const QP half_a1 = div_by_small_int(a1, 2);
    AlgElem r;
    if (gen == 0) {
        r.c[0] = -(a2 * x.c[1]);
        r.c[1] = x.c[0] - a1 * x.c[1];
        r.c[2] = -(half_a1 * x.c[2]);
    } else {
        r.c[0] = QP();
        r.c[1] = QP();
        r.c[2] = x.c[0] - half_a1 * x.c[1];
    }
    return r;
}

AlgElem one_elem() { return {{qp({1}), QP(), QP()}}; }

AlgElem reduce_word(const std::vector<int>& word, bool left_to_right, const QP& a1, const QP& a2) {
    AlgElem acc = one_elem();
    if (left_to_right) {
        for (int g : word) acc = mul_gen(acc, g, a1, a2);
    } else {
        for (auto it = word.rbegin(); it != word.rend(); ++it) acc = mul_gen(acc, *it, a1, a2);
    }
    return acc;
}

}  // namespace

TEST_CASE("ruled-surface presentation oracle: rewrite rules force (a1^2-4a2) t2 = 0") {
    // Brute-force normal-form reduction on all words of length <= 4 in the
    // displayed surface equations: reduction in the two association orders
    // can only disagree by a multiple of (a1^2 - 4 a2) t2, and some word
    // realizes a nonzero multiple, so the module presentation on (1, t1, t2)
    // carries exactly that one relation.
    const QP a1 = qp({1, 2});     // 2s + 1
    const QP a2 = qp({0, 0, 1});  // s^2
    const QP disc = discriminant_n2(a1, a2);
    REQUIRE(!disc.is_zero());

    bool some_nonzero = false;
    for (int len = 1; len <= 4; ++len) {
        for (int mask = 0; mask < (1 << len); ++mask) {
            std::vector<int> word;
            for (int b = 0; b < len; ++b) word.push_back((mask >> b) & 1);
            const AlgElem ltr = reduce_word(word, true, a1, a2);
            const AlgElem rtl = reduce_word(word, false, a1, a2);
            CHECK(ltr.c[0] == rtl.c[0]);
            CHECK(ltr.c[1] == rtl.c[1]);
            const QP diff = ltr.c[2] - rtl.c[2];
            if (!diff.is_zero()) {
                some_nonzero = true;
                const auto [q, r] = divmod(diff, disc);
                CHECK(r.is_zero());
            }
        }
    }
    CHECK(some_nonzero);

    // The specific witness: t1 * t1 * t2 reduced both ways differs by disc/4 * t2.
    const AlgElem ltr = reduce_word({0, 0, 1}, true, a1, a2);
    const AlgElem rtl = reduce_word({0, 0, 1}, false, a1, a2);
    CHECK(ltr.c[2] - rtl.c[2] == div_by_small_int(disc, 4));
}

TEST_CASE("family spectral coordinates") {
    // Constant tuple: coordinates equal the pointwise computation.
    PolyMatrix<Rational> c1(2, 2), c2(2, 2);
    c1 << qp({1}), QP(), QP(), qp({2});
    c2 << qp({3}), QP(), QP(), qp({4});
    const PolyMatrixTuple<Rational> constant(2, 2, {c1, c2});
    const auto coords = family_spectral_coords(constant);
    const auto expected = newton_p_to_e(trace_powers(constant.at(Rational(0))));
    CHECK(specialize(coords, Rational(0)) == expected);

    // theta1 = [[0,1],[s,0]], theta2 = 0: a_1 = 0, a_2 = -s z1^2.
    PolyMatrix<Rational> m1(2, 2), m2(2, 2);
    m1 << QP(), qp({1}), s, QP();
    m2.setConstant(QP());
    const PolyMatrixTuple<Rational> fam(2, 2, {m1, m2});
    const auto fc = family_spectral_coords(fam);
    CHECK(fc.tensors[0].is_zero());
    CHECK(fc.tensors[1].coeff({2, 0}) == -s);
    CHECK(fc.tensors[1].coeff({1, 1}).is_zero());
    CHECK(fc.tensors[1].coeff({0, 2}).is_zero());

    // Specialization commutes with taking coordinates.
    SeededRng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational c(rng.uniform(-10, 10));
        const auto pointwise = newton_p_to_e(trace_powers(fam.at(c)));
        CHECK(specialize(fc, c) == pointwise);
    }

    PolyMatrix<Rational> nc(2, 2);
    nc << QP(), s, qp({1}), QP();
    CHECK_THROWS_AS(PolyMatrixTuple<Rational>(2, 2, {m1, nc}), NotCommutingError);
}

TEST_CASE("discriminant examples") {
    CHECK(discriminant_n2(QP(), -s) == qp({0, 4}));
    CHECK(discriminant_n2(QP(), qp({-1})) == qp({4}));
    CHECK(discriminant_n2(qp({0, 2}), qp({0, 0, 1})).is_zero());
}

TEST_CASE("torsion-free quotient") {
    // Split presentation: relations column (0, 0, s)^T on 3 generators.
    ModulePresentation<Rational> m;
    m.generators = 3;
    m.relations = PolyMatrix<Rational>(3, 1);
    m.relations << QP(), QP(), s;
    const auto tfq = torsion_free_quotient(m);
    CHECK(tfq.report.free_rank == 2);
    REQUIRE(tfq.report.invariant_factors.size() == 1);
    CHECK(tfq.report.invariant_factors[0] == s);

    // Zero relation matrix: free module, no factors.
    ModulePresentation<Rational> free_m;
    free_m.generators = 2;
    free_m.relations = PolyMatrix<Rational>(2, 2);
    free_m.relations.setConstant(QP());
    const auto tfq_free = torsion_free_quotient(free_m);
    CHECK(tfq_free.report.free_rank == 2);
    CHECK(tfq_free.report.torsion_free());

    // Unimodular-conjugated diag(1, s^2, s^2 p): the factors come back.
    const QP p = qp({1, 1});  // s + 1
    ModulePresentation<Rational> diag;
    diag.generators = 3;
    diag.relations = PolyMatrix<Rational>(3, 3);
    diag.relations.setConstant(QP());
    diag.relations(0, 0) = qp({1});
    diag.relations(1, 1) = s * s;
    diag.relations(2, 2) = s * s * p;
    // Elementary row/column operations keep the module.
    diag.relations.row(0) += s * diag.relations.row(2);
    diag.relations.col(1) += diag.relations.col(0);
    diag.relations.row(2) += qp({3}) * diag.relations.row(1);
    const auto tfq_diag = torsion_free_quotient(diag);
    CHECK(tfq_diag.report.free_rank == 0);
    REQUIRE(tfq_diag.report.invariant_factors.size() == 2);
    CHECK(tfq_diag.report.invariant_factors[0] == s * s);
    CHECK(tfq_diag.report.invariant_factors[1] == s * s * p);

    // Idempotence: the quotient has no torsion left.
    const auto again = torsion_free_quotient(tfq_diag.quotient);
    CHECK(again.report.torsion_free());
    CHECK(again.report.free_rank == tfq_diag.report.free_rank);
}

TEST_CASE("ruled example instances") {
    const auto ex = ruled_example<Rational>(QP(), -s);
    CHECK(ex.report.free_rank == 2);
    REQUIRE(ex.report.invariant_factors.size() == 1);
    CHECK(ex.report.invariant_factors[0] == s);  // monic normalization of 4s
    CHECK(ex.quotient_char_poly.first.is_zero());
    CHECK(ex.quotient_char_poly.second == -s);
    CHECK(ex.fiber_length(Rational(0)) == 3);
    CHECK(ex.fiber_length(Rational(1)) == 2);
    CHECK(ex.fiber_length(Rational(2)) == 2);
    CHECK(ex.fiber_length(Rational(3)) == 2);

    const auto unit = ruled_example<Rational>(QP(), qp({-1}));
    CHECK(unit.report.free_rank == 2);
    CHECK(unit.report.torsion_free());
    for (long long c = -3; c <= 3; ++c) CHECK(unit.fiber_length(Rational(c)) == 2);

    CHECK_THROWS_AS(ruled_example<Rational>(qp({0, 2}), qp({0, 0, 1})), IdenticallyDegenerateError);
}

TEST_CASE("ruled example fiber profile matches the Cayley fiber of the specialized cycle") {
    const QP a1 = QP();
    const QP a2 = qp({2, -3, 1});  // (s-1)(s-2): t^2 = -(s-1)(s-2)
    const auto ex = ruled_example<Rational>(a1, a2);
    // disc = -4(s-1)(s-2), squarefree with roots 1 and 2.
    for (long long cv = -2; cv <= 4; ++cv) {
        const Rational c(cv);
        const auto split = roots_with_multiplicity(
            UniPoly<Rational>(std::vector<Rational>{a2.evaluate(c), a1.evaluate(c), Rational(1)}));
        if (!split.fully_split()) continue;
        std::vector<CyclePoint<Rational>> pts;
        for (const auto& [root, mult] : split.roots) pts.push_back({{root, Rational(0)}, mult});
        const ZeroCycle<Rational> cycle(pts);
        CHECK(static_cast<long long>(ex.fiber_length(c)) == cayley_fiber(cycle).total_length);
    }
}

TEST_CASE("ruled example quotient specializes to the pointwise embedding") {
    const QP a1 = qp({1, 1});      // s + 1
    const QP a2 = qp({0, 1});      // s, so t^2 + (s+1)t + s = (t+1)(t+s)
    const auto ex = ruled_example<Rational>(a1, a2);
    for (long long cv = -3; cv <= 3; ++cv) {
        const Rational c(cv);
        const auto split = roots_with_multiplicity(
            UniPoly<Rational>(std::vector<Rational>{a2.evaluate(c), a1.evaluate(c), Rational(1)}));
        REQUIRE(split.fully_split());
        std::vector<std::vector<Rational>> pts;
        for (const auto& [root, mult] : split.roots)
            for (int i = 0; i < mult; ++i) pts.push_back({root});
        const auto coords = elementary_from_points(pts);
        // iota coordinates of the fiber: e_1 = -a1(c), e_2 = a2(c).
        CHECK(coords.tensors[0].coeff({1}) == -ex.quotient_char_poly.first.evaluate(c));
        CHECK(coords.tensors[1].coeff({2}) == ex.quotient_char_poly.second.evaluate(c));
    }
}
