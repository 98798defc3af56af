// Acceptance checks. Each criterion prints exactly one PASS or FAIL line,
// optionally preceded by indented detail lines. Exit status is nonzero when
// any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "dilate/bootstrap.hpp"
#include "dilate/classify.hpp"
#include "dilate/compression.hpp"
#include "dilate/constructions.hpp"
#include "dilate/irreducible.hpp"
#include "dilate/quotient.hpp"
#include "dilate/search.hpp"
#include "dilate/text_format.hpp"
#include "oracles.hpp"

using namespace dilate;

namespace {

// Pinned tolerances and limits.
constexpr double kSkewSeconds = 1.0;
constexpr double kRotSeconds = 1.0;
constexpr double kBmSeconds = 60.0;
constexpr double kSearchSeconds = 300.0;
constexpr double kSigmaTol = 1e-6;
constexpr double kSigma2Quoted = 0.0089378;
const Rational kCertWidth = make_rational(1, Integer("1000000000000"));  // 1e-12
const Rational kKpLo = make_rational(577, 100);
const Rational kKpHi = make_rational(583, 100);

class Check {
public:
    explicit Check(int id, std::string title) : id_(id), title_(std::move(title)) {}

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ok_ = false;
            failures_.push_back(what);
        }
    }
    void note(const std::string& s) { std::cout << "  " << s << '\n'; }

    bool finish() const {
        std::cout << (ok_ ? "PASS" : "FAIL") << " criterion " << id_ << ": " << title_;
        for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) std::cout << (i ? "; " : " -- ") << failures_[i];
        if (failures_.size() > 5) std::cout << "; (" << failures_.size() - 5 << " more)";
        std::cout << '\n';
        return ok_;
    }

private:
    int id_;
    std::string title_;
    bool ok_ = true;
    std::vector<std::string> failures_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x, int prec = 9) {
    std::ostringstream s;
    s.precision(prec);
    s << std::fixed << x;
    return s.str();
}

IntPolynomial poly(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return IntPolynomial(v);
}

// True when [lo, hi] contains 3 + 2 sqrt 2, decided exactly: x >= 3 + 2 sqrt 2
// iff x >= 3 and (x - 3)^2 >= 8.
bool contains_silver(const Interval& x) {
    auto at_least = [](const Rational& v) { return v >= 3 && (v - 3) * (v - 3) >= 8; };
    auto at_most = [](const Rational& v) { return v <= 3 || (v - 3) * (v - 3) <= 8; };
    return at_most(x.lo()) && at_least(x.hi());
}

// Random primitive irreducible polynomial with nonzero constant term.
IntPolynomial random_irreducible(std::mt19937_64& rng, int degree, long bound) {
    std::uniform_int_distribution<long> coef(-bound, bound);
    while (true) {
        std::vector<Integer> c(degree + 1);
        for (auto& x : c) x = coef(rng);
        const IntPolynomial f(c);
        if (f.degree() != degree || f.coeff(0) == 0 || content(f) != 1) continue;
        if (is_irreducible_q(f)) return f;
    }
}

bool criterion1() {
    Check c(1, "skew box sumset is (2n-1)^2 for n = 1..12");
    const IntMatrix l1{{2, 0}, {0, 1}}, l2{{0, -1}, {2, 0}};
    const auto t0 = std::chrono::steady_clock::now();
    for (std::int64_t n = 1; n <= 12; ++n) {
        const std::size_t got = transform_sumset(l1, l2, skew_box(n)).size();
        const std::size_t want = static_cast<std::size_t>((2 * n - 1) * (2 * n - 1));
        c.require(got == want, "n=" + std::to_string(n) + " got " + std::to_string(got));
    }
    const double s = seconds_since(t0);
    c.note("elapsed " + fmt(s, 4) + " s");
    c.require(s < kSkewSeconds, "took " + fmt(s, 3) + " s");
    return c.finish();
}

bool criterion2() {
    Check c(2, "rotation line sumset is 2n-1; rotation pair reducible; skew pair not coprime with c' = 1");
    const IntMatrix rot = rotation90();
    const auto t0 = std::chrono::steady_clock::now();
    for (std::int64_t n = 1; n <= 50; ++n) {
        const std::size_t got = transform_sumset(rot, rot, rot_line(n)).size();
        c.require(got == static_cast<std::size_t>(2 * n - 1), "n=" + std::to_string(n) + " got " + std::to_string(got));
    }
    const double s = seconds_since(t0);
    c.note("elapsed " + fmt(s, 4) + " s");
    c.require(s < kRotSeconds, "took " + fmt(s, 3) + " s");
    c.require(!classify(rot, rot).irreducibility.irreducible, "rotation pair reported irreducible");
    const ClassificationReport skew = classify(IntMatrix{{2, 0}, {0, 1}}, IntMatrix{{0, -1}, {2, 0}});
    c.require(skew.irreducibility.irreducible, "skew pair reported reducible");
    c.require(skew.coprime && !*skew.coprime, "skew pair not reported non-coprime");
    c.require(skew.c_prime && *skew.c_prime == 1 && skew.p == 2, "certificate is not c' = 1, |det L1| = 2");
    return c.finish();
}

bool criterion3() {
    Check c(3, "A + rot90 A for the n x n box is 4n^2 - 4n + 1 for n = 1..30");
    for (std::int64_t n = 1; n <= 30; ++n) {
        const std::size_t got = transform_sumset(IntMatrix::identity(2), rotation90(), grid_box({n, n})).size();
        c.require(got == static_cast<std::size_t>(4 * n * n - 4 * n + 1), "n=" + std::to_string(n));
    }
    return c.finish();
}

bool criterion4() {
    Check c(4, "root-two pipeline: companion pair, classification, certified constants, KP boxes");
    const CompanionPair cp = companion_pair(poly({-2, 0, 1}));
    c.require(cp.l1 == IntMatrix::identity(2) && cp.l2 == (IntMatrix{{0, 2}, {1, 0}}), "companion pair differs");
    const ClassificationReport r = classify(cp.l1, cp.l2);
    c.require(r.irreducibility.irreducible && r.coprime && *r.coprime, "not irreducible and coprime");
    const Interval bound = bound_coefficient(Integer(1), Integer(2), 2, kCertWidth);
    const HEstimate h = h_value(cp.polynomial, kCertWidth);
    c.note("bound [" + bound.lo_decimal(15) + ", " + bound.hi_decimal(15) + "]");
    c.note("H     [" + h.value.lo_decimal(15) + ", " + h.value.hi_decimal(15) + "]");
    c.require(bound.width() <= kCertWidth && contains_silver(bound), "bound coefficient not certified");
    c.require(h.value.width() <= kCertWidth && contains_silver(h.value), "H not certified");
    const IntMatrix id = IntMatrix::identity(2), l2{{0, 2}, {1, 0}};
    for (std::int64_t m = 2; m <= 20; ++m)
        for (std::int64_t n = 2; n <= 20; ++n) {
            const std::size_t got = transform_sumset(id, l2, kp_box(m, n)).size();
            c.require(got == static_cast<std::size_t>((m + 2 * n - 2) * (m + n - 1)),
                      "KP closed form fails at " + std::to_string(m) + "," + std::to_string(n));
        }
    const PointSet big = kp_box(140, 99);
    const std::size_t s = transform_sumset(id, l2, big).size();
    const Rational ratio = make_rational(Integer(static_cast<unsigned long>(s)), Integer(static_cast<unsigned long>(big.size())));
    c.note("KP (140,99): |A| = " + std::to_string(big.size()) + ", sumset " + std::to_string(s) + ", ratio " +
           to_decimal(ratio, 6, false) + " = " + to_string(ratio));
    c.require(ratio >= kKpLo && ratio <= kKpHi,
              "KP ratio at (140,99) is " + to_decimal(ratio, 6, false) + ", outside [5.77, 5.83]");
    return c.finish();
}

bool criterion5() {
    Check c(5, "Brunn-Minkowski defect is certified nonnegative");
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(5005);
    std::size_t negative = 0, uncertified = 0;
    for (int t = 0; t < 500; ++t) {
        const std::size_t d = 1 + t % 3;
        const PointSet a = oracle::random_set(rng, d, 30, -4, 4), b = oracle::random_set(rng, d, 30, -4, 4);
        const BmDefect r = bm_defect(a, b, CompressionBasis::standard(d));
        negative += r.verdict == DefectVerdict::Negative;
        uncertified += r.verdict == DefectVerdict::NonnegativeWithin;
    }
    // Nonempty subsets of [0,2]^2 indexed by 9-bit masks; 10^4 random pairs.
    const PointSet cells = grid_box({3, 3});
    auto subset = [&](unsigned mask) {
        std::vector<Point> p;
        for (unsigned i = 0; i < 9; ++i)
            if (mask >> i & 1) p.push_back({cells.point(i)[0], cells.point(i)[1]});
        return PointSet::from_points(2, p);
    };
    std::uniform_int_distribution<unsigned> mask(1, 511);
    for (int t = 0; t < 10000; ++t) {
        const BmDefect r = bm_defect(subset(mask(rng)), subset(mask(rng)), CompressionBasis::standard(2));
        negative += r.verdict == DefectVerdict::Negative;
        uncertified += r.verdict == DefectVerdict::NonnegativeWithin;
    }
    const double s = seconds_since(t0);
    c.note("10500 pairs, " + std::to_string(uncertified) + " nonnegative only within 2^-64, elapsed " + fmt(s, 2) + " s");
    c.require(negative == 0, std::to_string(negative) + " negative defects");
    c.require(s < kBmSeconds, "took " + fmt(s, 1) + " s");
    return c.finish();
}

bool criterion6() {
    Check c(6, "compression laws on 200 random pairs in [0,4]^2");
    std::mt19937_64 rng(6006);
    const auto basis = CompressionBasis::standard(2);
    const RatMatrix std2 = RatMatrix::identity(2);
    const std::vector<std::vector<std::size_t>> subsets{{}, {0}, {1}, {0, 1}};
    for (int t = 0; t < 200; ++t) {
        const PointSet a = oracle::random_set(rng, 2, 15, 0, 4), b = oracle::random_set(rng, 2, 15, 0, 4);
        const PointSet ab = sumset(a, b);
        for (std::size_t axis = 0; axis < 2; ++axis) {
            const PointSet ca = i_compress(a, axis, basis), cb = i_compress(b, axis, basis);
            c.require(ca.size() == a.size() && cb.size() == b.size(), "size changed");
            c.require(i_compress(ca, axis, basis) == ca, "not idempotent");
            const PointSet cab = sumset(ca, cb);
            for (const auto& s : subsets)
                c.require(project(cab, s, std2).size() <= project(ab, s, std2).size(), "projection grew");
        }
        const PointSet f = full_compress(a, basis);
        c.require(f.size() == a.size() && is_compressed(f), "full compression not downward closed");
    }
    return c.finish();
}

bool criterion7() {
    Check c(7, "lattice index, multiplicativity, and coprime pair lattices");
    std::mt19937_64 rng(7007);
    int done = 0, mult = 0;
    while (done < 200) {
        const std::size_t d = 2 + done % 2;
        const IntMatrix m = oracle::random_matrix(rng, d, -5, 5);
        const Integer dt = abs(det(m));
        if (dt == 0 || dt > 64) continue;
        ++done;
        c.require(index(lattice_from(m)) == dt && dt == oracle::brute_force_index(m), "index mismatch");
    }
    for (int t = 0; t < 300; ++t) {
        const std::size_t d = 2 + t % 2;
        const IntMatrix m1 = oracle::random_matrix(rng, d, -4, 4), m2 = oracle::random_matrix(rng, d, -4, 4);
        if (det(m1) == 0 || det(m2) == 0) continue;
        const Lattice a = lattice_from(m1), b = lattice_from(m2);
        if (lattice_sum(a, b) != Lattice::standard(d)) continue;
        ++mult;
        c.require(index(intersect(a, b)) == index(a) * index(b), "intersection index not multiplicative");
    }
    c.note(std::to_string(done) + " index checks, " + std::to_string(mult) + " pairs with lattice sum Z^d");
    for (int t = 0; t < 20; ++t) {
        const CompanionPair cp = companion_pair(random_irreducible(rng, 2 + t % 2, 6));
        const ClassificationReport r = classify(cp.l1, cp.l2);
        c.require(r.coprime && *r.coprime, "companion pair not coprime");
        const PairLattices pl = pair_lattices(cp.l1, cp.l2);
        c.require(index(pl.P) == r.p * r.q, "index(P) != pq for " + to_coefficient_string(cp.polynomial));
        c.require(Integer(static_cast<unsigned long>(pl.G->order())) == r.p * r.p * r.q, "group order != p^2 q");
        c.require(is_isomorphism(pl.phi1 + pl.phi2), "phi1 + phi2 not an isomorphism for " + to_coefficient_string(cp.polynomial));
    }
    return c.finish();
}

template <class F>
void for_each_subset_with_zero(const GroupPtr& g, F f) {
    const std::uint64_t n = g->order();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        std::vector<QuotientGroup::Element> el{0};
        for (std::uint64_t e = 1; e < n; ++e)
            if (mask >> (e - 1) & 1) el.push_back(e);
        f(GroupSubset(g, el));
    }
}

bool criterion8() {
    Check c(8, "trichotomies hold for every subset containing 0");
    const std::vector<IntMatrix> ls{IntMatrix{{0, 2}, {1, 0}}, IntMatrix{{1, 1}, {-1, 1}}, IntMatrix{{2, 0}, {0, 1}},
                                    IntMatrix{{0, -1}, {2, 0}}, IntMatrix{{0, 3}, {1, 0}},
                                    IntMatrix{{0, 4}, {1, 0}}};
    for (const auto& l : ls) {
        const GroupPtr g = quotient(lattice_from(l * l));
        c.require(g->order() <= 16, "group too large");
        std::size_t n = 0;
        for_each_subset_with_zero(g, [&](const GroupSubset& x) {
            ++n;
            try {
                c.require(!trichotomy_L(x, l).empty(), "empty case set");
            } catch (const std::exception& e) {
                c.require(false, e.what());
            }
        });
        c.note(format_matrix(l) + ": |G| = " + std::to_string(g->order()) + ", " + std::to_string(n) + " subsets");
    }
    const PairLattices pl = pair_lattices(IntMatrix::identity(2), IntMatrix{{0, 2}, {1, 0}});
    for_each_subset_with_zero(pl.G, [&](const GroupSubset& x) {
        try {
            c.require(!trichotomy_pair(x, pl.phi1, pl.phi2, pl.P).empty(), "empty pair case set");
        } catch (const std::exception& e) {
            c.require(false, e.what());
        }
    });
    c.note("root-two pair: |G| = " + std::to_string(pl.G->order()));
    return c.finish();
}

bool criterion9() {
    Check c(9, "Ruzsa triangle and Plunnecke-Ruzsa on 300 instances each");
    std::mt19937_64 rng(9009);
    for (int t = 0; t < 300; ++t) {
        const std::size_t d = 1 + t % 2;
        c.require(ruzsa_triangle(oracle::random_set(rng, d, 15, -6, 6), oracle::random_set(rng, d, 15, -6, 6),
                                 oracle::random_set(rng, d, 15, -6, 6))
                      .holds,
                  "Ruzsa triangle violated");
    }
    std::uniform_int_distribution<std::size_t> size(1, 15);
    std::uniform_int_distribution<std::int64_t> coord(-9, 9);
    for (int t = 0; t < 300; ++t) {
        const std::size_t d = 1 + t % 2, n = size(rng);
        auto make = [&] {
            std::set<Point> s;
            while (s.size() < n) {
                Point p(d);
                for (auto& x : p) x = coord(rng);
                s.insert(p);
            }
            return PointSet::from_points(d, {s.begin(), s.end()});
        };
        const PointSet a = make(), b = make();
        c.require(plunnecke_check(a, b).holds, "Plunnecke-Ruzsa violated");
    }
    return c.finish();
}

bool criterion10() {
    Check c(10, "exhaustive search oracle");
    const auto t0 = std::chrono::steady_clock::now();
    for (unsigned workers : {1u, 8u}) {
        for (std::size_t n = 2; n <= 6; ++n) {
            SearchSpec s;
            s.l1 = IntMatrix{{1}};
            s.l2 = IntMatrix{{2}};
            s.n = n;
            s.box = parse_box("0:12");
            s.workers = workers;
            const SearchResult r = minimize(s);
            c.require(r.exact && r.minimum == 3 * n - 2, "d=1 n=" + std::to_string(n) + " got " + std::to_string(r.minimum));
        }
    }
    SearchSpec s;
    s.l1 = IntMatrix::identity(2);
    s.l2 = rotation90();
    s.n = 4;
    s.box = parse_box("0:3,0:3");
    s.workers = 1;
    const SearchResult one = minimize(s);
    s.workers = 8;
    const SearchResult eight = minimize(s);
    c.require(one.minimum == 9 && one.witness == grid_box({2, 2}), "rotation minimum is not 9 at the 2x2 box");
    c.require(one.minimum == eight.minimum && one.witness == eight.witness, "worker count changed the result");
    const double secs = seconds_since(t0);
    c.note("elapsed " + fmt(secs, 3) + " s");
    c.require(secs < kSearchSeconds, "took " + fmt(secs, 1) + " s");
    return c.finish();
}

bool criterion11() {
    Check c(11, "bootstrap calculator");
    const double closed = final_constants_identity(1, 2, 0.1, 1, 0.01, 1).sigma2;
    const double extracted = extracted_sigma2(2, 0.1);
    c.note("closed form sigma2 " + fmt(closed, 12) + ", extracted " + fmt(extracted, 12));
    c.require(std::fabs(closed - extracted) <= kSigmaTol, "extraction differs from the closed form");
    c.require(std::fabs(closed - kSigma2Quoted) <= kSigmaTol, "closed form differs from 0.0089378");
    std::mt19937_64 rng(1111);
    std::uniform_real_distribution<double> alpha(0.01, 1.0), logeps(-10, -3);
    std::uniform_int_distribution<std::uint64_t> kk(2, 8);
    for (int t = 0; t < 20; ++t) {
        const double a0 = alpha(rng), eps = std::pow(10.0, logeps(rng));
        const std::uint64_t k = kk(rng);
        const auto steps = static_cast<long long>(steps_until(identity_state(1, k, 0.1, 1, a0, 0), eps));
        const auto ceil_steps = static_cast<long long>(closed_form_steps(a0, eps, k));
        c.require(std::llabs(steps - ceil_steps) <= 1, "step count " + std::to_string(steps) + " vs " + std::to_string(ceil_steps));
    }
    return c.finish();
}

bool criterion12() {
    Check c(12, "H is at least the bound coefficient on 50 coprime companion pairs");
    std::mt19937_64 rng(1212);
    int greater = 0, overlap = 0;
    for (int t = 0; t < 50; ++t) {
        const CompanionPair cp = companion_pair(random_irreducible(rng, 2 + t % 2, 9));
        const ClassificationReport r = classify(cp.l1, cp.l2);
        c.require(r.coprime && *r.coprime, "pair not coprime");
        const HEstimate h = matrix_h_value(cp.l1, cp.l2, default_h_tolerance());
        const Ordering o = compare(h.value, bound_coefficient(cp.l1, cp.l2));
        greater += o == Ordering::Greater;
        overlap += o == Ordering::Overlap;
        c.require(o != Ordering::Less, "H below the bound for " + to_coefficient_string(cp.polynomial));
    }
    c.note(std::to_string(greater) + " strictly greater, " + std::to_string(overlap) +
           " equal to within the enclosure widths");
    return c.finish();
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<bool()>> all{criterion1, criterion2, criterion3,  criterion4,
                                                 criterion5, criterion6, criterion7,  criterion8,
                                                 criterion9, criterion10, criterion11, criterion12};
    std::vector<int> picked;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) {
            picked.push_back(std::atoi(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--criterion N]...\n";
            return 2;
        }
    }
    if (picked.empty())
        for (int i = 1; i <= 12; ++i) picked.push_back(i);
    bool ok = true;
    for (int id : picked) {
        if (id < 1 || id > 12) {
            std::cerr << "no criterion " << id << '\n';
            return 2;
        }
        try {
            ok = all[id - 1]() && ok;
        } catch (const std::exception& e) {
            std::cout << "FAIL criterion " << id << ": threw " << e.what() << '\n';
            ok = false;
        }
    }
    return ok ? 0 : 1;
}
