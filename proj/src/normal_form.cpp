#include "dilate/normal_form.hpp"

#include <optional>

namespace dilate {

namespace {

// Working state for the Smith reduction. Invariant: S * A * T == input and
// S_inv * S == I.
struct SnfState {
    IntMatrix A, S, S_inv, T;

    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        const std::size_t n = A.rows();
        for (std::size_t k = 0; k < A.cols(); ++k) std::swap(A(i, k), A(j, k));
        for (std::size_t k = 0; k < n; ++k) {
            std::swap(S(k, i), S(k, j));
            std::swap(S_inv(i, k), S_inv(j, k));
        }
    }
    // row_i += c * row_j
    void row_add(std::size_t i, std::size_t j, const Integer& c) {
        const std::size_t n = A.rows();
        for (std::size_t k = 0; k < A.cols(); ++k) A(i, k) += c * A(j, k);
        for (std::size_t k = 0; k < n; ++k) {
            S(k, j) -= c * S(k, i);
            S_inv(i, k) += c * S_inv(j, k);
        }
    }
    void row_negate(std::size_t i) {
        const std::size_t n = A.rows();
        for (std::size_t k = 0; k < A.cols(); ++k) A(i, k) = -A(i, k);
        for (std::size_t k = 0; k < n; ++k) {
            S(k, i) = -S(k, i);
            S_inv(i, k) = -S_inv(i, k);
        }
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < A.rows(); ++k) std::swap(A(k, i), A(k, j));
        for (std::size_t k = 0; k < T.cols(); ++k) std::swap(T(i, k), T(j, k));
    }
    // col_i += c * col_j
    void col_add(std::size_t i, std::size_t j, const Integer& c) {
        for (std::size_t k = 0; k < A.rows(); ++k) A(k, i) += c * A(k, j);
        for (std::size_t k = 0; k < T.cols(); ++k) T(j, k) -= c * T(i, k);
    }
};

std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& a, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Integer v = abs(a(i, j));
            if (!best || v < best_abs) {
                best = {i, j};
                best_abs = v;
            }
        }
    return best;
}

}  // namespace

std::vector<Integer> SnfDecomposition::invariant_factors() const {
    std::vector<Integer> f;
    for (std::size_t i = 0; i < D.rows(); ++i) f.push_back(D(i, i));
    return f;
}

SnfDecomposition smith_normal_form(const IntMatrix& m) {
    require_square(m, "smith_normal_form");
    const std::size_t n = m.dim();
    SnfState st{m, IntMatrix::identity(n), IntMatrix::identity(n), IntMatrix::identity(n)};
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            auto pos = smallest_entry(st.A, t);
            if (!pos) break;
            st.row_swap(t, pos->first);
            st.col_swap(t, pos->second);
            const Integer pivot = st.A(t, t);
            bool dirty = false;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (st.A(i, t) == 0) continue;
                st.row_add(i, t, -floor_div(st.A(i, t), pivot));
                dirty |= st.A(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (st.A(t, j) == 0) continue;
                st.col_add(j, t, -floor_div(st.A(t, j), pivot));
                dirty |= st.A(t, j) != 0;
            }
            if (dirty) continue;
            // Pivot must divide the whole remaining block.
            std::optional<std::size_t> offender;
            for (std::size_t i = t + 1; i < n && !offender; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(st.A(i, j).get_mpz_t(), pivot.get_mpz_t())) {
                        offender = i;
                        break;
                    }
            if (!offender) break;
            st.row_add(t, *offender, 1);
        }
        if (st.A(t, t) < 0) st.row_negate(t);
    }
    return {st.S, st.A, st.T, st.S_inv};
}

IntMatrix hermite_normal_form(const IntMatrix& generators) {
    const std::size_t d = generators.rows();
    const std::size_t m = generators.cols();
    if (d == 0) throw Error(ErrorCode::DimensionMismatch, "hermite_normal_form: empty matrix");
    IntMatrix w = generators;
    std::vector<bool> used(m, false);
    std::vector<std::size_t> pivot_of_row(d);
    auto col_sub = [&](std::size_t target, std::size_t src, const Integer& q) {
        for (std::size_t k = 0; k < d; ++k) w(k, target) -= q * w(k, src);
    };
    for (std::size_t r = d; r-- > 0;) {
        for (;;) {
            std::optional<std::size_t> piv;
            Integer piv_abs;
            std::size_t nonzero = 0;
            for (std::size_t c = 0; c < m; ++c) {
                if (used[c] || w(r, c) == 0) continue;
                ++nonzero;
                Integer v = abs(w(r, c));
                if (!piv || v < piv_abs) {
                    piv = c;
                    piv_abs = v;
                }
            }
            if (!piv) throw Error(ErrorCode::Singular, "generators do not span a full-rank lattice");
            if (nonzero == 1) {
                used[*piv] = true;
                pivot_of_row[r] = *piv;
                break;
            }
            for (std::size_t c = 0; c < m; ++c) {
                if (used[c] || c == *piv || w(r, c) == 0) continue;
                col_sub(c, *piv, floor_div(w(r, c), w(r, *piv)));
            }
        }
    }
    IntMatrix h(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const std::size_t c = pivot_of_row[j];
        const int sign = w(j, c) < 0 ? -1 : 1;
        for (std::size_t i = 0; i < d; ++i) h(i, j) = sign * w(i, c);
    }
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = j; i-- > 0;) {
            Integer q = floor_div(h(i, j), h(i, i));
            if (q == 0) continue;
            for (std::size_t k = 0; k <= i; ++k) h(k, j) -= q * h(k, i);
        }
    return h;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    IntMatrix w = m;
    IntMatrix u = IntMatrix::identity(c);
    auto col_sub = [&](std::size_t target, std::size_t src, const Integer& q) {
        for (std::size_t k = 0; k < r; ++k) w(k, target) -= q * w(k, src);
        for (std::size_t k = 0; k < c; ++k) u(k, target) -= q * u(k, src);
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t k = 0; k < r; ++k) std::swap(w(k, a), w(k, b));
        for (std::size_t k = 0; k < c; ++k) std::swap(u(k, a), u(k, b));
    };
    std::size_t rank = 0;
    for (std::size_t row = 0; row < r && rank < c; ++row) {
        for (;;) {
            std::optional<std::size_t> piv;
            Integer piv_abs;
            std::size_t nonzero = 0;
            for (std::size_t j = rank; j < c; ++j) {
                if (w(row, j) == 0) continue;
                ++nonzero;
                Integer v = abs(w(row, j));
                if (!piv || v < piv_abs) {
                    piv = j;
                    piv_abs = v;
                }
            }
            if (!piv) break;
            if (nonzero == 1) {
                col_swap(rank, *piv);
                ++rank;
                break;
            }
            for (std::size_t j = rank; j < c; ++j) {
                if (j == *piv || w(row, j) == 0) continue;
                col_sub(j, *piv, floor_div(w(row, j), w(row, *piv)));
            }
        }
    }
    IntMatrix k(c, c - rank);
    for (std::size_t j = rank; j < c; ++j)
        for (std::size_t i = 0; i < c; ++i) k(i, j - rank) = u(i, j);
    return k;
}

}  // namespace dilate
