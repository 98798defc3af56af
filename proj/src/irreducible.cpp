#include "dilate/irreducible.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "dilate/error.hpp"

namespace dilate {

namespace {

// Dense polynomials over Z/p, constant term first, trimmed.
using Zp = std::vector<std::uint64_t>;

void trim(Zp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Zp& a) { return static_cast<int>(a.size()) - 1; }

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

Zp rem(Zp a, const Zp& b, std::uint64_t p) {
    const int db = deg(b);
    const std::uint64_t inv = inv_mod(b.back(), p);
    while (deg(a) >= db) {
        const std::uint64_t c = a.back() * inv % p;
        const int shift = deg(a) - db;
        for (int j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + p - c * b[j] % p) % p;
        trim(a);
    }
    return a;
}

Zp quot(Zp a, const Zp& b, std::uint64_t p) {
    const int db = deg(b);
    if (deg(a) < db) return {};
    Zp q(deg(a) - db + 1, 0);
    const std::uint64_t inv = inv_mod(b.back(), p);
    while (deg(a) >= db) {
        const std::uint64_t c = a.back() * inv % p;
        const int shift = deg(a) - db;
        q[shift] = c;
        for (int j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + p - c * b[j] % p) % p;
        trim(a);
    }
    trim(q);
    return q;
}

Zp mulmod(const Zp& a, const Zp& b, const Zp& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Zp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return rem(std::move(r), f, p);
}

Zp gcd(Zp a, Zp b, std::uint64_t p) {
    while (!b.empty()) {
        Zp r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint64_t inv = inv_mod(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

Zp derivative(const Zp& a, std::uint64_t p) {
    Zp d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * (i % p) % p);
    trim(d);
    return d;
}

Zp powmod(Zp base, std::uint64_t e, const Zp& f, std::uint64_t p) {
    Zp r{1};
    base = rem(std::move(base), f, p);
    while (e) {
        if (e & 1) r = mulmod(r, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Zp sub(Zp a, const Zp& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

std::set<int> subset_sums(const std::vector<int>& degrees) {
    std::set<int> sums{0};
    for (int d : degrees) {
        std::set<int> next = sums;
        for (int s : sums) next.insert(s + d);
        sums = std::move(next);
    }
    return sums;
}

// Prime factorization of n > 0.
void factor_into(Integer n, std::map<Integer, int>& out);

Integer pollard_brent(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        const unsigned long m = 64;
        unsigned long r = 1;
        auto f = [&](const Integer& v) {
            Integer t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer diff = abs(x - y);
                    q = q * diff;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                g = dilate::gcd(q, n);
                k += m;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = dilate::gcd(Integer(abs(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
    for (unsigned long d = 2; d < 10000 && Integer(d) * d <= n; ++d)
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            ++out[Integer(d)];
            n /= d;
        }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    Integer g = pollard_brent(n);
    factor_into(g, out);
    factor_into(n / g, out);
}

std::vector<Integer> positive_divisors(const Integer& n) {
    std::map<Integer, int> primes;
    factor_into(abs(n), primes);
    std::vector<Integer> divs{1};
    for (const auto& [prime, mult] : primes) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (int e = 1; e <= mult; ++e) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Kronecker search: g is fixed by its values at k+1 nodes, each a divisor of
// f at that node. Candidates are built in Newton form, whose coefficients
// are integers for integer polynomials at integer nodes, which prunes early.
struct KroneckerSearch {
    const IntPolynomial& f;
    int k;
    std::vector<Integer> nodes;
    std::vector<std::vector<Integer>> choices;
    std::vector<Integer> newton;
    std::vector<Integer> bounds;
    IntPolynomial found;

    Integer newton_eval(std::size_t upto, const Integer& x) const {
        Integer acc = 0;
        for (std::size_t i = upto; i-- > 0;) acc = acc * (x - nodes[i]) + newton[i];
        return acc;
    }

    IntPolynomial to_monomial() const {
        IntPolynomial g;
        for (std::size_t i = newton.size(); i-- > 0;) {
            g = IntPolynomial({-nodes[i], Integer(1)}) * g + IntPolynomial({newton[i]});
        }
        return g;
    }

    bool search(std::size_t t) {
        if (t == nodes.size()) {
            if (newton.back() == 0) return false;
            IntPolynomial g = to_monomial();
            for (int j = 0; j <= k; ++j)
                if (abs(g.coeff(j)) > bounds[j]) return false;
            if (!divides_exactly(g, f)) return false;
            found = primitive_part(g);
            return true;
        }
        Integer scale = 1;
        for (std::size_t i = 0; i < t; ++i) scale *= nodes[t] - nodes[i];
        const Integer base = newton_eval(t, nodes[t]);
        for (const auto& v : choices[t]) {
            Integer num = v - base;
            if (!mpz_divisible_p(num.get_mpz_t(), scale.get_mpz_t())) continue;
            newton[t] = num / scale;
            if (search(t + 1)) return true;
        }
        return false;
    }
};

}  // namespace

std::vector<int> factor_degrees_mod(const IntPolynomial& p, unsigned long prime) {
    Zp f;
    for (const auto& c : p.coeffs()) f.push_back(mpz_fdiv_ui(c.get_mpz_t(), prime));
    trim(f);
    if (deg(f) != p.degree() || deg(f) < 1) return {};
    if (deg(gcd(f, derivative(f, prime), prime)) > 0) return {};
    const std::uint64_t inv = inv_mod(f.back(), prime);
    for (auto& c : f) c = c * inv % prime;
    std::vector<int> degrees;
    const Zp x{0, 1};
    Zp h = x;
    for (int i = 1; 2 * i <= deg(f); ++i) {
        h = powmod(h, prime, f, prime);
        Zp g = gcd(f, sub(h, x, prime), prime);
        if (deg(g) > 0) {
            for (int c = 0; c < deg(g) / i; ++c) degrees.push_back(i);
            f = quot(f, g, prime);
            h = rem(h, f, prime);
        }
    }
    if (deg(f) > 0) degrees.push_back(deg(f));
    return degrees;
}

std::set<int> possible_factor_degrees(const IntPolynomial& p) {
    const int n = p.degree();
    std::set<int> possible;
    for (int k = 1; k < n; ++k) possible.insert(k);
    int good = 0;
    for (unsigned long prime = 2; prime < 400 && good < 12 && !possible.empty(); ++prime) {
        if (!mpz_probab_prime_p(Integer(prime).get_mpz_t(), 25)) continue;
        auto degrees = factor_degrees_mod(p, prime);
        if (degrees.empty()) continue;
        ++good;
        auto sums = subset_sums(degrees);
        std::set<int> keep;
        for (int k : possible)
            if (sums.count(k)) keep.insert(k);
        possible = std::move(keep);
    }
    return possible;
}

Integer mignotte_bound(const IntPolynomial& p, int k, int j) {
    Integer sq = 0;
    for (const auto& c : p.coeffs()) sq += c * c;
    Integer norm;
    mpz_sqrt(norm.get_mpz_t(), sq.get_mpz_t());
    if (norm * norm < sq) norm += 1;
    Integer b = 0;
    if (j <= k - 1) b += binomial(k - 1, j) * norm;
    if (j >= 1) b += binomial(k - 1, j - 1) * abs(p.leading());
    return b;
}

IntPolynomial find_factor_of_degree(const IntPolynomial& p, int k) {
    const IntPolynomial f = primitive_part(p);
    if (k < 1 || k >= f.degree()) return {};
    std::vector<std::pair<Integer, Integer>> samples;  // (|f(x)|, x)
    for (long i = 0; samples.size() < static_cast<std::size_t>(4 * (k + 1)) && i < 200; ++i) {
        const Integer x = (i % 2 == 0) ? Integer(i / 2) : Integer(-(i + 1) / 2);
        const Integer v = f(x);
        if (v == 0) {
            if (k == 1) return IntPolynomial({-x, Integer(1)});
            continue;
        }
        samples.emplace_back(abs(v), x);
    }
    std::stable_sort(samples.begin(), samples.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    KroneckerSearch s{f, k, {}, {}, std::vector<Integer>(k + 1), {}, {}};
    for (int j = 0; j <= k; ++j) {
        s.nodes.push_back(samples[j].second);
        auto divs = positive_divisors(samples[j].first);
        std::vector<Integer> vals;
        for (const auto& d : divs) {
            vals.push_back(d);
            // The sign of g is free; fix g(node_0) > 0.
            if (j > 0) vals.push_back(-d);
        }
        s.choices.push_back(std::move(vals));
        s.bounds.push_back(mignotte_bound(f, k, j));
    }
    if (s.search(0)) return s.found;
    return {};
}

bool is_irreducible_q(const IntPolynomial& p) {
    if (p.degree() < 1) throw Error(ErrorCode::InvalidArgument, "irreducibility of a constant polynomial");
    const IntPolynomial f = primitive_part(p);
    const int n = f.degree();
    if (n == 1) return true;
    if (f.coeff(0) == 0) return false;
    if (gcd(to_rational(f), to_rational(f).derivative()).degree() > 0) return false;
    for (int k : possible_factor_degrees(f)) {
        if (2 * k > n) break;
        if (!find_factor_of_degree(f, k).is_zero()) return false;
    }
    return true;
}

}  // namespace dilate
