#include <algorithm>

#include "tribkit/errors.hpp"
#include "tribkit/identities.hpp"
#include "tribkit/series.hpp"

namespace tribkit {

namespace {

using Idx = std::span<const Index>;
using Eqs = std::vector<Equality>;

// --- grids -----------------------------------------------------------------

std::vector<IndexTuple> all_integers(const Bounds& b) {
    std::vector<IndexTuple> g;
    for (Index n = -b.symmetric; n <= b.symmetric; ++n) g.push_back({n});
    return g;
}

auto from(Index lo) {
    return [lo](const Bounds& b) {
        std::vector<IndexTuple> g;
        for (Index n = lo; n <= b.nonneg; ++n) g.push_back({n});
        return g;
    };
}

std::vector<IndexTuple> positive_symmetric(const Bounds& b) {
    std::vector<IndexTuple> g;
    for (Index n = 1; n <= b.symmetric; ++n) g.push_back({n});
    return g;
}

auto fixed(Index lo, Index hi) {
    return [lo, hi](const Bounds&) {
        std::vector<IndexTuple> g;
        for (Index n = lo; n <= hi; ++n) g.push_back({n});
        return g;
    };
}

std::vector<IndexTuple> pairs(const Bounds& b) {
    std::vector<IndexTuple> g;
    for (Index m = 0; m <= b.nonneg; ++m)
        for (Index n = 0; n <= b.nonneg; ++n) g.push_back({m, n});
    return g;
}

std::vector<IndexTuple> offsets(const Bounds& b) {
    std::vector<IndexTuple> g;
    for (Index n = 0; n <= b.nonneg; ++n)
        for (Index r = 0; r <= n; ++r) g.push_back({n, r});
    return g;
}

std::vector<IndexTuple> progressions(const Bounds& b) {
    std::vector<IndexTuple> g;
    for (Index m = 1; m <= b.sum_m; ++m)
        for (Index j = 0; j < m; ++j)
            for (Index n = 1; n <= std::max<Index>(b.nonneg, 1); ++n) g.push_back({m, j, n});
    return g;
}

constexpr const char* kAll = "n in [-S, S], all integers";
constexpr const char* kNonneg = "n in [0, N]";
constexpr const char* kPairs = "m, n in [0, N]";
constexpr const char* kOffsets = "n in [0, N], r in [0, n]";
constexpr const char* kProgressions = "m in [1, M], j in [0, m-1], n in [1, N]";

// --- helpers ---------------------------------------------------------------

Mat3 div22(const Mat3& m) {
    Mat3 q;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (!mpz_divisible_ui_p(m(i, j).get_mpz_t(), 22))
                throw DivisibilityViolation("22 does not divide " + m(i, j).get_str());
            mpz_divexact_ui(q(i, j).get_mpz_t(), m(i, j).get_mpz_t(), 22);
        }
    }
    return q;
}

Value val(BigInt v) { return v; }
Value val(Mat3 v) { return v; }
Value val(Value v) { return v; }
template <typename T, typename U>
Value val(const __gmp_expr<T, U>& e) {
    return BigInt(e);
}

template <typename L, typename R>
Eqs eq(L&& l, R&& r) {
    Eqs out;
    out.push_back({val(std::forward<L>(l)), val(std::forward<R>(r))});
    return out;
}

template <typename L, typename R>
Eqs& also(Eqs& e, L&& l, R&& r) {
    e.push_back({val(std::forward<L>(l)), val(std::forward<R>(r))});
    return e;
}

TermSource source(EvalContext& ctx) {
    return [&ctx](SeriesKind k, Index i) { return ctx.term(k, i); };
}

// Left side shared by the three scalar K*K convolutions.
BigInt kk_left(EvalContext& c, Index m, Index n) {
    return c.k(m) * c.k(n + 1) + c.k(n) * (c.k(m - 1) + c.k(m - 2)) + c.k(m - 1) * c.k(n - 1);
}

BigInt kk_rhs_c(EvalContext& c, Index s) {
    return 9 * c.t(s + 2) - 12 * c.t(s + 1) - 2 * c.t(s) + 4 * c.t(s - 1) + c.t(s - 2);
}
BigInt kk_rhs_d(EvalContext& c, Index s) {
    return c.t(s) + 4 * c.t(s - 1) + 10 * c.t(s - 2) + 12 * c.t(s - 3) + 9 * c.t(s - 4);
}
BigInt kk_rhs_e(EvalContext& c, Index s) {
    return c.t(s) - 8 * c.t(s + 1) + 18 * c.t(s + 2) - 8 * c.t(s + 3) + c.t(s + 4);
}

Mat3 kkm_rhs_c(EvalContext& c, Index s) {
    return 9 * c.tm(s + 2) - 12 * c.tm(s + 1) - 2 * c.tm(s) + 4 * c.tm(s - 1) + c.tm(s - 2);
}
Mat3 kkm_rhs_d(EvalContext& c, Index s) {
    return c.tm(s) + 4 * c.tm(s - 1) + 10 * c.tm(s - 2) + 12 * c.tm(s - 3) + 9 * c.tm(s - 4);
}
Mat3 kkm_rhs_e(EvalContext& c, Index s) {
    return c.tm(s) - 8 * c.tm(s + 1) + 18 * c.tm(s + 2) - 8 * c.tm(s + 3) + c.tm(s + 4);
}

Eqs progression_sum(EvalContext& c, SeriesKind kind, Idx i) {
    const SumSpec spec{kind, i[0], i[1], i[2]};
    const auto src = source(c);
    Eqs out;
    out.push_back({partial_sum(spec, src), partial_sum_bruteforce(spec, src)});
    return out;
}

std::vector<IdentityRecord> build() {
    std::vector<IdentityRecord> r;
    auto add = [&](std::string id, std::string location, std::string statement, Arity arity,
                   std::string domain, auto grid, auto evaluate, std::string note = {}) {
        r.push_back({std::move(id), std::move(location), std::move(statement), arity, std::move(domain),
                     std::move(note), grid, evaluate});
    };

    // Scalar recurrences and conversions.
    add("EQ1", "Tribonacci recurrence", "T(n) = T(n-1) + T(n-2) + T(n-3), T(0)=0, T(1)=1, T(2)=1",
        Arity::N, kAll, all_integers, [](EvalContext& c, Idx i) {
            const Index n = i[0];
            return eq(trib(n), c.t(n - 1) + c.t(n - 2) + c.t(n - 3));
        });
    add("EQ2", "Tribonacci-Lucas recurrence", "K(n) = K(n-1) + K(n-2) + K(n-3), K(0)=3, K(1)=1, K(2)=3",
        Arity::N, kAll, all_integers, [](EvalContext& c, Idx i) {
            const Index n = i[0];
            return eq(lucas_trib(n), c.k(n - 1) + c.k(n - 2) + c.k(n - 3));
        });
    add("EQ3", "alternative Tribonacci recurrence", "T(n) = 2T(n-1) - T(n-4), T(0..3) = 0, 1, 1, 2",
        Arity::N, kAll, all_integers, [](EvalContext& c, Idx i) {
            const Index n = i[0];
            Eqs e = eq(trib_alt(n), c.t(n));
            return also(e, c.t(n), 2 * c.t(n - 1) - c.t(n - 4));
        });
    add("NEGT", "negative-index Tribonacci", "T(-n) = T(n-1)^2 - T(n-2) T(n)", Arity::N, "n in [1, S]",
        positive_symmetric, [](EvalContext& c, Idx i) {
            const Index n = i[0];
            return eq(c.t(-n), c.t(n - 1) * c.t(n - 1) - c.t(n - 2) * c.t(n));
        });
    add("EQ4", "K from T, first form", "K(n) = 3T(n+1) - 2T(n) - T(n-1)", Arity::N, kAll, all_integers,
        [](EvalContext& c, Idx i) { return eq(lucas_from_trib(i[0], LucasVariant::A), c.k(i[0])); });
    add("EQ5", "K from T, second form", "K(n) = T(n) + 2T(n-1) + 3T(n-2)", Arity::N, kAll, all_integers,
        [](EvalContext& c, Idx i) { return eq(lucas_from_trib(i[0], LucasVariant::B), c.k(i[0])); });
    add("EQ6", "K from T, third form", "K(n) = 4T(n+1) - T(n) - T(n+2)", Arity::N, kAll, all_integers,
        [](EvalContext& c, Idx i) { return eq(lucas_from_trib(i[0], LucasVariant::C), c.k(i[0])); });

    // Binet forms (high precision, rounded to integers).
    add("EQ7", "Binet form of T",
        "T(n) = a^(n+1)/((a-b)(a-c)) + b^(n+1)/((b-a)(b-c)) + c^(n+1)/((c-a)(c-b))", Arity::N, kAll,
        all_integers,
        [](EvalContext& c, Idx i) { return eq(binet_trib(i[0], c.binet().roots), c.t(i[0])); });
    add("EQ8", "Binet form of K", "K(n) = a^n + b^n + c^n", Arity::N, kAll, all_integers,
        [](EvalContext& c, Idx i) { return eq(binet_lucas(i[0], c.binet().roots), c.k(i[0])); });
    add("THM8a", "matrix Binet form of TM", "TM(n) = A1 a^n + B1 b^n + C1 c^n", Arity::N, kAll,
        all_integers, [](EvalContext& c, Idx i) {
            return eq(binet_matrix(MatrixKind::TribMatrix, i[0], c.binet()), c.tm(i[0]));
        });
    add("THM8b", "matrix Binet form of KM", "KM(n) = A2 a^n + B2 b^n + C2 c^n", Arity::N, kAll,
        all_integers, [](EvalContext& c, Idx i) {
            return eq(binet_matrix(MatrixKind::LucasMatrix, i[0], c.binet()), c.km(i[0]));
        });

    // Generating functions.
    add("EQ9a", "generating function of T", "sum T(n) x^n = x / (1 - x - x^2 - x^3)", Arity::N, kNonneg,
        from(0), [](EvalContext& c, Idx i) {
            return eq(gf_coeffs(SequenceKind::Tribonacci, i[0] + 1).back(), c.t(i[0]));
        });
    add("EQ9b", "generating function of K", "sum K(n) x^n = (3 - 2x - x^2) / (1 - x - x^2 - x^3)", Arity::N,
        kNonneg, from(0), [](EvalContext& c, Idx i) {
            return eq(gf_coeffs(SequenceKind::TribonacciLucas, i[0] + 1).back(), c.k(i[0]));
        });
    add("THM12a", "generating function of TM", "sum TM(n) x^n = N_T(x) / (1 - x - x^2 - x^3)", Arity::N,
        kNonneg, from(0), [](EvalContext& c, Idx i) {
            return eq(gf_matrix_coeffs(MatrixKind::TribMatrix, i[0] + 1).back(), c.tm(i[0]));
        });
    add("THM12b", "generating function of KM", "sum KM(n) x^n = N_K(x) / (1 - x - x^2 - x^3)", Arity::N,
        kNonneg, from(0), [](EvalContext& c, Idx i) {
            return eq(gf_matrix_coeffs(MatrixKind::LucasMatrix, i[0] + 1).back(), c.km(i[0]));
        });
    add("THM12c", "numerator of the TM generating function",
        "[x^n] N_T(x) = [x^n] (TM(0) + (TM(1)-TM(0)) x + (TM(2)-TM(1)-TM(0)) x^2)", Arity::N, "n in [0, 2]",
        fixed(0, 2), [](EvalContext&, Idx i) {
            const auto k = static_cast<std::size_t>(i[0]);
            return eq(matrix_numerator(MatrixKind::TribMatrix)[k],
                      matrix_numerator_from_initial(MatrixKind::TribMatrix)[k]);
        });
    add("THM12d", "numerator of the KM generating function",
        "[x^n] N_K(x) = [x^n] (KM(0) + (KM(1)-KM(0)) x + (KM(2)-KM(1)-KM(0)) x^2)", Arity::N, "n in [0, 2]",
        fixed(0, 2), [](EvalContext&, Idx i) {
            const auto k = static_cast<std::size_t>(i[0]);
            return eq(matrix_numerator(MatrixKind::LucasMatrix)[k],
                      matrix_numerator_from_initial(MatrixKind::LucasMatrix)[k]);
        });
    add("COR13a", "scalar generating function read from cell (2,1)",
        "[x^n] (cell (2,1) of the TM generating function) = [x^n] x / (1 - x - x^2 - x^3)", Arity::N, kNonneg,
        from(0), [](EvalContext&, Idx i) {
            return eq(gf_matrix_coeffs(MatrixKind::TribMatrix, i[0] + 1).back().scalar(),
                      gf_coeffs(SequenceKind::Tribonacci, i[0] + 1).back());
        });
    add("COR13b", "scalar generating function read from cell (2,1)",
        "[x^n] (cell (2,1) of the KM generating function) = [x^n] (3 - 2x - x^2) / (1 - x - x^2 - x^3)",
        Arity::N, kNonneg, from(0), [](EvalContext&, Idx i) {
            return eq(gf_matrix_coeffs(MatrixKind::LucasMatrix, i[0] + 1).back().scalar(),
                      gf_coeffs(SequenceKind::TribonacciLucas, i[0] + 1).back());
        });

    // Progression sums.
    const char* sum_shape =
        " = [X(mn+m+j) + X(mn-m+j) + (1-K(m)) X(mn+j) - X(m+j) - X(j-m) - (1-K(m)) X(j)] / (K(m) - K(-m))";
    add("EQ13", "progression sum of TM", std::string("sum_{i<n} TM(mi+j)") + sum_shape, Arity::MNR,
        kProgressions, progressions,
        [](EvalContext& c, Idx i) { return progression_sum(c, SeriesKind::TribMatrix, i); });
    add("EQ14", "progression sum of KM", std::string("sum_{i<n} KM(mi+j)") + sum_shape, Arity::MNR,
        kProgressions, progressions,
        [](EvalContext& c, Idx i) { return progression_sum(c, SeriesKind::LucasMatrix, i); });
    add("COR11a", "progression sum of T", std::string("sum_{i<n} T(mi+j)") + sum_shape, Arity::MNR,
        kProgressions, progressions,
        [](EvalContext& c, Idx i) { return progression_sum(c, SeriesKind::Tribonacci, i); });
    add("COR11b", "progression sum of K", std::string("sum_{i<n} K(mi+j)") + sum_shape, Arity::MNR,
        kProgressions, progressions,
        [](EvalContext& c, Idx i) { return progression_sum(c, SeriesKind::TribonacciLucas, i); });
    add("COR11c", "prefix sum of T", "sum_{i<n} T(i) = (T(n+2) - T(n) - 1) / 2", Arity::N, "n in [1, N]",
        from(1), [](EvalContext& c, Idx i) {
            const Index n = i[0];
            BigInt direct = 0;
            for (Index k = 0; k < n; ++k) direct += c.t(k);
            Eqs e = eq(prefix_sum(SequenceKind::Tribonacci, n), direct);
            return also(e, direct, partial_sum({SeriesKind::Tribonacci, 1, 0, n}, source(c)));
        });
    add("COR11d", "prefix sum of K", "sum_{i<n} K(i) = (K(n+2) - K(n)) / 2", Arity::N, "n in [1, N]",
        from(1), [](EvalContext& c, Idx i) {
            const Index n = i[0];
            BigInt direct = 0;
            for (Index k = 0; k < n; ++k) direct += c.k(k);
            Eqs e = eq(prefix_sum(SequenceKind::TribonacciLucas, n), direct);
            return also(e, direct, partial_sum({SeriesKind::TribonacciLucas, 1, 0, n}, source(c)));
        });

    // Matrix interrelations.
    add("EQ10", "closed form of TM",
        "TM(n) = [[T(n+1), T(n)+T(n-1), T(n)], [T(n), T(n-1)+T(n-2), T(n-1)], [T(n-1), T(n-2)+T(n-3), T(n-2)]]",
        Arity::N, kNonneg, from(0),
        [](EvalContext& c, Idx i) { return eq(iterate_matrix(MatrixKind::TribMatrix, i[0]), c.tm(i[0])); });
    add("EQ11", "closed form of KM",
        "KM(n) = [[K(n+1), K(n)+K(n-1), K(n)], [K(n), K(n-1)+K(n-2), K(n-1)], [K(n-1), K(n-2)+K(n-3), K(n-2)]]",
        Arity::N, kNonneg, from(0),
        [](EvalContext& c, Idx i) { return eq(iterate_matrix(MatrixKind::LucasMatrix, i[0]), c.km(i[0])); });
    add("THM14a", "KM from TM, first form", "KM(n) = 3TM(n+1) - 2TM(n) - TM(n-1)", Arity::N, kAll,
        all_integers, [](EvalContext& c, Idx i) {
            const Index n = i[0];
            return eq(c.km(n), 3 * c.tm(n + 1) - 2 * c.tm(n) - c.tm(n - 1));
        });
    add("THM14b", "KM from TM, second form", "KM(n) = TM(n) + 2TM(n-1) + 3TM(n-2)", Arity::N, kAll,
        all_integers, [](EvalContext& c, Idx i) {
            const Index n = i[0];
            return eq(c.km(n), c.tm(n) + 2 * c.tm(n - 1) + 3 * c.tm(n - 2));
        });
    add(
        "THM14c", "KM from TM, third form", "KM(n) = 4TM(n+1) - TM(n) - TM(n+2)", Arity::N, kAll, all_integers,
        [](EvalContext& c, Idx i) {
            const Index n = i[0];
            return eq(c.km(n), 4 * c.tm(n + 1) - c.tm(n) - c.tm(n + 2));
        },
        "item (d), KM(n) = -TM(n+2) + 4TM(n+1) - TM(n), is the same identity and is not registered separately");
    add("THM14e", "TM from KM", "TM(n) = (5KM(n+2) - 3KM(n+1) - 4KM(n)) / 22", Arity::N, kAll, all_integers,
        [](EvalContext& c, Idx i) {
            const Index n = i[0];
            return eq(c.tm(n), div22(5 * c.km(n + 2) - 3 * c.km(n + 1) - 4 * c.km(n)));
        });
    add("LEM15a", "KM(0) converts TM to KM", "KM(0) TM(n) = TM(n) KM(0) = KM(n)", Arity::N, kNonneg, from(0),
        [](EvalContext& c, Idx i) {
            const Index n = i[0];
            Eqs e = eq(c.km(0) * c.tm(n), c.km(n));
            return also(e, c.tm(n) * c.km(0), c.km(n));
        });
    add("LEM15b", "TM(0) is a unit for KM", "TM(0) KM(n) = KM(n) TM(0) = KM(n)", Arity::N, kNonneg, from(0),
        [](EvalContext& c, Idx i) {
            const Index n = i[0];
            Eqs e = eq(c.tm(0) * c.km(n), c.km(n));
            return also(e, c.km(n) * c.tm(0), c.km(n));
        });
    add("COR16a", "T from K", "T(n) = (K(n) + 5K(n-1) + 2K(n+1)) / 22", Arity::N, kAll, all_integers,
        [](EvalContext& c, Idx i) { return eq(trib_from_lucas(i[0]), c.t(i[0])); });
    add("COR16b", "TM from KM", "TM(n) = (KM(n) + 5KM(n-1) + 2KM(n+1)) / 22", Arity::N, kAll, all_integers,
        [](EvalContext& c, Idx i) {
            const Index n = i[0];
            return eq(c.tm(n), div22(c.km(n) + 5 * c.km(n - 1) + 2 * c.km(n + 1)));
        });

    // Products.
    add("THM18a", "products of TM", "TM(m) TM(n) = TM(m+n) = TM(n) TM(m)", Arity::MN, kPairs, pairs,
        [](EvalContext& c, Idx i) {
            const Index m = i[0], n = i[1];
            Eqs e = eq(c.tm(m) * c.tm(n), c.tm(m + n));
            return also(e, c.tm(n) * c.tm(m), c.tm(m + n));
        });
    add("THM18b", "mixed products", "TM(m) KM(n) = KM(n) TM(m) = KM(m+n)", Arity::MN, kPairs, pairs,
        [](EvalContext& c, Idx i) {
            const Index m = i[0], n = i[1];
            Eqs e = eq(c.tm(m) * c.km(n), c.km(m + n));
            return also(e, c.km(n) * c.tm(m), c.km(m + n));
        });
    add("THM18c", "products of KM, first expansion",
        "KM(m) KM(n) = KM(n) KM(m) = 9TM(m+n+2) - 12TM(m+n+1) - 2TM(m+n) + 4TM(m+n-1) + TM(m+n-2)", Arity::MN,
        kPairs, pairs, [](EvalContext& c, Idx i) {
            const Index m = i[0], n = i[1];
            Eqs e = eq(c.km(m) * c.km(n), kkm_rhs_c(c, m + n));
            return also(e, c.km(n) * c.km(m), kkm_rhs_c(c, m + n));
        });
    add("THM18d", "products of KM, second expansion",
        "KM(m) KM(n) = KM(n) KM(m) = TM(m+n) + 4TM(m+n-1) + 10TM(m+n-2) + 12TM(m+n-3) + 9TM(m+n-4)",
        Arity::MN, kPairs, pairs, [](EvalContext& c, Idx i) {
            const Index m = i[0], n = i[1];
            Eqs e = eq(c.km(m) * c.km(n), kkm_rhs_d(c, m + n));
            return also(e, c.km(n) * c.km(m), kkm_rhs_d(c, m + n));
        });
    add("THM18e", "products of KM, third expansion",
        "KM(m) KM(n) = KM(n) KM(m) = TM(m+n) - 8TM(m+n+1) + 18TM(m+n+2) - 8TM(m+n+3) + TM(m+n+4)", Arity::MN,
        kPairs, pairs, [](EvalContext& c, Idx i) {
            const Index m = i[0], n = i[1];
            Eqs e = eq(c.km(m) * c.km(n), kkm_rhs_e(c, m + n));
            return also(e, c.km(n) * c.km(m), kkm_rhs_e(c, m + n));
        });

    // Scalar convolutions.
    add("COR19a", "addition formula for T", "T(m+n) = T(m)T(n+1) + T(n)(T(m-1) + T(m-2)) + T(m-1)T(n-1)",
        Arity::MN, kPairs, pairs, [](EvalContext& c, Idx i) {
            const Index m = i[0], n = i[1];
            return eq(c.t(m + n),
                      c.t(m) * c.t(n + 1) + c.t(n) * (c.t(m - 1) + c.t(m - 2)) + c.t(m - 1) * c.t(n - 1));
        });
    add("COR19b", "addition formula for K", "K(m+n) = T(m)K(n+1) + K(n)(T(m-1) + T(m-2)) + K(n-1)T(m-1)",
        Arity::MN, kPairs, pairs, [](EvalContext& c, Idx i) {
            const Index m = i[0], n = i[1];
            return eq(c.k(m + n),
                      c.t(m) * c.k(n + 1) + c.k(n) * (c.t(m - 1) + c.t(m - 2)) + c.k(n - 1) * c.t(m - 1));
        });
    const std::string kk = "K(m)K(n+1) + K(n)(K(m-1) + K(m-2)) + K(m-1)K(n-1)";
    add("COR19c", "K convolution, first expansion",
        kk + " = 9T(m+n+2) - 12T(m+n+1) - 2T(m+n) + 4T(m+n-1) + T(m+n-2)", Arity::MN, kPairs, pairs,
        [](EvalContext& c, Idx i) { return eq(kk_left(c, i[0], i[1]), kk_rhs_c(c, i[0] + i[1])); });
    add("COR19d", "K convolution, second expansion",
        kk + " = T(m+n) + 4T(m+n-1) + 10T(m+n-2) + 12T(m+n-3) + 9T(m+n-4)", Arity::MN, kPairs, pairs,
        [](EvalContext& c, Idx i) { return eq(kk_left(c, i[0], i[1]), kk_rhs_d(c, i[0] + i[1])); });
    add("COR19e", "K convolution, third expansion",
        kk + " = T(m+n) - 8T(m+n+1) + 18T(m+n+2) - 8T(m+n+3) + T(m+n+4)", Arity::MN, kPairs, pairs,
        [](EvalContext& c, Idx i) { return eq(kk_left(c, i[0], i[1]), kk_rhs_e(c, i[0] + i[1])); });
    const char* implied = "implied by COR19c-e sharing a left side; not stated on its own";
    add(
        "COR19cd", "K convolution expansions agree",
        "9T(s+2) - 12T(s+1) - 2T(s) + 4T(s-1) + T(s-2) = T(s) + 4T(s-1) + 10T(s-2) + 12T(s-3) + 9T(s-4), s = m+n",
        Arity::MN, kPairs, pairs,
        [](EvalContext& c, Idx i) { return eq(kk_rhs_c(c, i[0] + i[1]), kk_rhs_d(c, i[0] + i[1])); }, implied);
    add(
        "COR19ce", "K convolution expansions agree",
        "9T(s+2) - 12T(s+1) - 2T(s) + 4T(s-1) + T(s-2) = T(s) - 8T(s+1) + 18T(s+2) - 8T(s+3) + T(s+4), s = m+n",
        Arity::MN, kPairs, pairs,
        [](EvalContext& c, Idx i) { return eq(kk_rhs_c(c, i[0] + i[1]), kk_rhs_e(c, i[0] + i[1])); }, implied);
    add(
        "COR19de", "K convolution expansions agree",
        "T(s) + 4T(s-1) + 10T(s-2) + 12T(s-3) + 9T(s-4) = T(s) - 8T(s+1) + 18T(s+2) - 8T(s+3) + T(s+4), s = m+n",
        Arity::MN, kPairs, pairs,
        [](EvalContext& c, Idx i) { return eq(kk_rhs_d(c, i[0] + i[1]), kk_rhs_e(c, i[0] + i[1])); }, implied);

    // Powers.
    add("THM20a", "powers of TM", "TM(n)^m = TM(mn)", Arity::MN, kPairs, pairs, [](EvalContext& c, Idx i) {
        const Index m = i[0], n = i[1];
        return eq(mat_pow(c.tm(n), m), c.tm(m * n));
    });
    add("THM20b", "shifted powers of TM", "TM(n+1)^m = TM(1)^m TM(mn)", Arity::MN, kPairs, pairs,
        [](EvalContext& c, Idx i) {
            const Index m = i[0], n = i[1];
            return eq(mat_pow(c.tm(n + 1), m), mat_pow(c.tm(1), m) * c.tm(m * n));
        });
    add("THM20c", "symmetric products of TM", "TM(n-r) TM(n+r) = TM(n)^2 = TM(2)^n", Arity::NR, kOffsets,
        offsets, [](EvalContext& c, Idx i) {
            const Index n = i[0], r = i[1];
            const Mat3 sq = mat_pow(c.tm(n), 2);
            Eqs e = eq(c.tm(n - r) * c.tm(n + r), sq);
            return also(e, sq, mat_pow(c.tm(2), n));
        });
    add("THMFINALa", "symmetric products of KM", "KM(n-r) KM(n+r) = KM(n)^2", Arity::NR, kOffsets, offsets,
        [](EvalContext& c, Idx i) {
            const Index n = i[0], r = i[1];
            return eq(c.km(n - r) * c.km(n + r), mat_pow(c.km(n), 2));
        });
    add("THMFINALb", "powers of KM", "KM(n)^m = KM(0)^m TM(mn)", Arity::MN, kPairs, pairs,
        [](EvalContext& c, Idx i) {
            const Index m = i[0], n = i[1];
            return eq(mat_pow(c.km(n), m), mat_pow(c.km(0), m) * c.tm(m * n));
        });
    return r;
}

}  // namespace

const std::vector<IdentityRecord>& registry() {
    static const std::vector<IdentityRecord> records = build();
    return records;
}

const IdentityRecord* find_identity(std::string_view id) {
    const auto& reg = registry();
    auto it = std::find_if(reg.begin(), reg.end(), [&](const IdentityRecord& r) { return r.id == id; });
    return it == reg.end() ? nullptr : &*it;
}

}  // namespace tribkit
