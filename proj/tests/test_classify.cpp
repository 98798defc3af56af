#include <doctest.h>

#include <random>

#include "dilate/classify.hpp"
#include "dilate/constructions.hpp"
#include "dilate/irreducible.hpp"
#include "oracles.hpp"

using namespace dilate;

namespace {

IntPolynomial poly(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return IntPolynomial(v);
}

Rational pow2_neg(unsigned bits) { return make_rational(1, Integer(1) << bits); }

// (1 + sqrt 2)^2 = 3 + 2 sqrt 2 to 20 digits
const Rational kSilverLo = make_rational(Integer("582842712474619009760"), Integer("100000000000000000000"));
const Rational kSilverHi = make_rational(Integer("582842712474619009761"), Integer("100000000000000000000"));

const IntMatrix kI2 = IntMatrix::identity(2);
const IntMatrix kRoot2{{0, 2}, {1, 0}};
const IntMatrix kSkewL1{{2, 0}, {0, 1}};
const IntMatrix kSkewL2{{0, -1}, {2, 0}};

}  // namespace

TEST_CASE("irreducibility of pairs") {
    const IntMatrix rot = rotation90();
    const auto r = is_irreducible_pair(rot, rot);
    CHECK_FALSE(r.irreducible);
    CHECK(r.certificate == "char_poly_reducible");
    CHECK(*r.primitive_char_poly == poly({1, -2, 1}));
    CHECK(is_irreducible_pair(kSkewL1, kSkewL2).irreducible);
    CHECK(is_irreducible_pair(kI2, kRoot2).irreducible);
    const auto s = is_irreducible_pair(kI2, IntMatrix{{1, 1}, {1, 1}});
    CHECK_FALSE(s.irreducible);
    CHECK(s.certificate == "singular");
    CHECK_THROWS_AS(is_irreducible_pair(kI2, IntMatrix::identity(3)), Error);
}

TEST_CASE("coprimality of pairs") {
    const auto skew = is_coprime_pair(kSkewL1, kSkewL2);
    CHECK_FALSE(skew.coprime);
    CHECK(skew.c_prime == 1);
    CHECK(skew.det_l1 == 2);
    CHECK(is_coprime_pair(kI2, kRoot2).coprime);
    const auto q = is_coprime_pair(IntMatrix{{1, 0}, {0, 2}}, IntMatrix{{0, 2}, {1, -1}});
    CHECK(q.coprime);
    CHECK(q.c_prime == 2);
    CHECK_THROWS_AS(is_coprime_pair(rotation90(), rotation90()), Error);
}

TEST_CASE("bound coefficient") {
    for (unsigned d = 1; d <= 4; ++d) {
        const Interval b = bound_coefficient(1, 1, d, pow2_neg(53));
        CHECK(b.contains(Rational(Integer(1) << d)));
        CHECK(b.width() <= pow2_neg(53));
    }
    const Interval b = bound_coefficient(kI2, kRoot2);
    CHECK(b.lo() >= kSilverLo);
    CHECK(b.hi() <= kSilverHi);
    CHECK(bound_coefficient(kSkewL1, kSkewL2).contains(Rational(8)));
    CHECK(bound_coefficient(kSkewL1, kSkewL2).width() <= pow2_neg(53));
    CHECK_THROWS_AS(bound_coefficient(kI2, IntMatrix{{1, 1}, {1, 1}}), Error);
}

TEST_CASE("H of polynomials") {
    const Rational tol = pow2_neg(60);
    {
        const HEstimate h = h_value(poly({-1, 1}), tol);
        CHECK(h.value == Interval(Rational(2)));
    }
    {
        const HEstimate h = h_value(poly({-2, 0, 1}), tol);
        CHECK(h.value.width() <= tol);
        CHECK(h.value.lo() >= kSilverLo);
        CHECK(h.value.hi() <= kSilverHi);
        CHECK(h.moduli.size() == 2);
    }
    {
        // 2 (1 + (sqrt 17 - 1)/4)(1 + (sqrt 17 + 1)/4) = (33 + 8 sqrt 17) / 8
        const HEstimate h = h_value(poly({-2, 1, 2}), tol);
        CHECK(h.leading == 2);
        CHECK(h.value.width() <= tol);
        CHECK(h.value.lo() > make_rational(81231056256, 10000000000));
        CHECK(h.value.hi() < make_rational(81231056257, 10000000000));
    }
    {
        const HEstimate h = h_value(poly({1, 0, 1}), tol);
        CHECK(h.value.contains(Rational(4)));
    }
    CHECK_THROWS_AS(h_value(poly({4}), tol), Error);
    CHECK_THROWS_AS(h_value(poly({2, 0, 2}), tol), Error);
}

TEST_CASE("H of matrix pairs") {
    const Rational tol = pow2_neg(60);
    CHECK(matrix_h_value(kI2, kRoot2, tol).value.lo() >= kSilverLo);
    CHECK(matrix_h_value(kI2, rotation90(), tol).value.contains(Rational(4)));
    const HEstimate h = matrix_h_value(IntMatrix{{1, 0}, {0, 2}}, IntMatrix{{0, 2}, {1, -1}}, tol);
    CHECK(h.polynomial == poly({-2, 1, 2}));
    CHECK_THROWS_AS(matrix_h_value(rotation90(), rotation90(), tol), Error);
}

TEST_CASE("classification reports") {
    const ClassificationReport root2 = classify(kI2, kRoot2);
    CHECK(root2.p == 1);
    CHECK(root2.q == 2);
    CHECK(root2.irreducibility.irreducible);
    CHECK(*root2.coprime);
    REQUIRE(root2.h);
    CHECK(root2.h->value.lo() >= kSilverLo);
    CHECK(root2.bound->lo() >= kSilverLo);
    CHECK(*root2.holder != Ordering::Less);
    CHECK_FALSE(root2.h_for_non_coprime);

    const ClassificationReport skew = classify(kSkewL1, kSkewL2);
    CHECK(skew.p == 2);
    CHECK(skew.q == 2);
    CHECK(skew.irreducibility.irreducible);
    CHECK_FALSE(*skew.coprime);
    CHECK(*skew.c_prime == 1);
    CHECK(skew.bound->contains(Rational(8)));
    CHECK(skew.h_for_non_coprime);

    const ClassificationReport rot = classify(rotation90(), rotation90());
    CHECK_FALSE(rot.irreducibility.irreducible);
    CHECK_FALSE(rot.coprime);
    CHECK_FALSE(rot.h);

    const ClassificationReport sing = classify(kI2, IntMatrix{{1, 1}, {1, 1}});
    CHECK_FALSE(sing.invertible_l2);
    CHECK_FALSE(sing.bound);
    CHECK_FALSE(sing.h);
}

TEST_CASE("coprimality is invariant under unimodular changes on both sides") {
    std::mt19937_64 rng(51);
    const std::vector<IntPolynomial> fs{poly({-2, 0, 1}), poly({-2, 1, 2}), poly({3, -1, 0, 2}), poly({-7, 2, 3})};
    for (const auto& f : fs) {
        const CompanionPair cp = companion_pair(f);
        const std::size_t d = cp.l1.dim();
        REQUIRE(is_coprime_pair(cp.l1, cp.l2).coprime);
        for (int t = 0; t < 50; ++t) {
            const IntMatrix u = oracle::random_unimodular(rng, d), v = oracle::random_unimodular(rng, d);
            const IntMatrix a = u * cp.l1 * v, b = u * cp.l2 * v;
            CHECK(abs(det(a)) == abs(det(cp.l1)));
            CHECK(is_coprime_pair(a, b).coprime);
        }
    }
}

TEST_CASE("minors of P with QP integral are multiples of 1/det Q") {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 60; ++t) {
        const std::size_t d = 2 + t % 3;
        const IntMatrix q = oracle::random_matrix(rng, d, -4, 4);
        if (det(q) == 0) continue;
        const IntMatrix z = oracle::random_matrix(rng, d, -6, 6);
        const RatMatrix p = inverse(to_rational(q)) * to_rational(z);
        const Rational dq = Rational(det(q));
        // every square minor, indexed by row and column subsets of equal size
        for (std::size_t rows = 1; rows < (std::size_t{1} << d); ++rows)
            for (std::size_t cols = 1; cols < (std::size_t{1} << d); ++cols) {
                if (__builtin_popcountll(rows) != __builtin_popcountll(cols)) continue;
                std::vector<std::size_t> r, c;
                for (std::size_t i = 0; i < d; ++i) {
                    if (rows >> i & 1) r.push_back(i);
                    if (cols >> i & 1) c.push_back(i);
                }
                CHECK(is_integer(minor(p, r, c) * dq));
            }
    }
}

TEST_CASE("minimal denominator divides |det L1| for irreducible pairs") {
    std::mt19937_64 rng(53);
    int irreducible = 0;
    for (int t = 0; t < 300; ++t) {
        const std::size_t d = 2 + t % 2;
        const IntMatrix l1 = oracle::random_matrix(rng, d, -3, 3), l2 = oracle::random_matrix(rng, d, -3, 3);
        if (!is_irreducible_pair(l1, l2).irreducible) continue;
        ++irreducible;
        const CoprimalityResult c = is_coprime_pair(l1, l2);
        CHECK(c.det_l1 % c.c_prime == 0);
    }
    CHECK(irreducible > 100);
}

TEST_CASE("irreducibility agrees with a search for invariant lines") {
    std::mt19937_64 rng(54);
    int reducible = 0;
    for (int t = 0; t < 200; ++t) {
        const IntMatrix l1 = oracle::random_matrix(rng, 2, -2, 2), l2 = oracle::random_matrix(rng, 2, -2, 2);
        const bool line = oracle::has_invariant_line(l1, l2, 80);
        reducible += line;
        CHECK(is_irreducible_pair(l1, l2).irreducible == !line);
    }
    CHECK(reducible > 20);
    CHECK(reducible < 180);
}

TEST_CASE("H is at least the bound coefficient for coprime pairs") {
    std::mt19937_64 rng(55);
    std::uniform_int_distribution<long> coef(-9, 9);
    int tested = 0;
    while (tested < 30) {
        std::vector<Integer> c(3 + tested % 2);
        for (auto& x : c) x = coef(rng);
        const IntPolynomial f(c);
        if (f.degree() < 1 || f.coeff(0) == 0 || content(f) != 1 || !is_irreducible_q(f)) continue;
        ++tested;
        const CompanionPair cp = companion_pair(f);
        const ClassificationReport r = classify(cp.l1, cp.l2);
        REQUIRE(r.holder);
        CHECK(*r.coprime);
        CHECK(*r.holder != Ordering::Less);
    }
}
