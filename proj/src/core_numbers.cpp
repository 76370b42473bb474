#include "tribkit/core_numbers.hpp"

#include <algorithm>
#include <utility>

#include "tribkit/errors.hpp"
#include "tribkit/mat3.hpp"

namespace tribkit {

std::string_view to_string(SequenceKind kind) {
    return kind == SequenceKind::Tribonacci ? "T" : "K";
}

std::array<BigInt, 3> seeds(SequenceKind kind) {
    if (kind == SequenceKind::Tribonacci) return {BigInt(0), BigInt(1), BigInt(1)};
    return {BigInt(3), BigInt(1), BigInt(3)};
}

std::vector<BigInt> term_range(SequenceKind kind, Index lo, Index hi, OpCounter* ops) {
    if (lo > hi) throw DomainError("term_range: lo > hi");
    std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
    auto put = [&](Index i, const BigInt& v) {
        if (i >= lo && i <= hi) out[static_cast<std::size_t>(i - lo)] = v;
    };

    const auto s = seeds(kind);
    for (Index i = 0; i < 3; ++i) put(i, s[static_cast<std::size_t>(i)]);

    if (hi > 2) {
        BigInt a = s[0], b = s[1], c = s[2];
        for (Index i = 3; i <= hi; ++i) {
            a += b;
            a += c;
            std::swap(a, b);
            std::swap(b, c);
            if (i >= lo) put(i, c);
        }
        if (ops) ops->additions += 2 * static_cast<std::uint64_t>(hi - 2);
    }
    if (lo < 0) {
        // (a, b, c) = (X(k), X(k+1), X(k+2)), stepping k downwards.
        BigInt a = s[0], b = s[1], c = s[2];
        for (Index i = -1; i >= lo; --i) {
            c -= b;
            c -= a;
            std::swap(b, c);
            std::swap(a, b);
            if (i <= hi) put(i, a);
        }
        if (ops) ops->additions += 2 * static_cast<std::uint64_t>(-lo);
    }
    return out;
}

BigInt term(SequenceKind kind, Index n, OpCounter* ops) {
    return std::move(term_range(kind, n, n, ops).front());
}

BigInt trib(Index n) { return term(SequenceKind::Tribonacci, n); }

BigInt lucas_trib(Index n) { return term(SequenceKind::TribonacciLucas, n); }

BigInt trib_alt(Index n) {
    // w holds T(base), ..., T(base + 3).
    std::array<BigInt, 4> w{BigInt(0), BigInt(1), BigInt(1), BigInt(2)};
    Index base = 0;
    while (n > base + 3) {
        BigInt next = 2 * w[3] - w[0];
        std::rotate(w.begin(), w.begin() + 1, w.end());
        w[3] = std::move(next);
        ++base;
    }
    while (n < base) {
        BigInt prev = 2 * w[2] - w[3];
        std::rotate(w.rbegin(), w.rbegin() + 1, w.rend());
        w[0] = std::move(prev);
        --base;
    }
    return w[static_cast<std::size_t>(n - base)];
}

BigInt lucas_from_trib(Index n, LucasVariant variant) {
    const auto t = term_range(SequenceKind::Tribonacci, n - 2, n + 2);
    auto at = [&](Index i) -> const BigInt& { return t[static_cast<std::size_t>(i - (n - 2))]; };
    switch (variant) {
        case LucasVariant::A: return 3 * at(n + 1) - 2 * at(n) - at(n - 1);
        case LucasVariant::B: return at(n) + 2 * at(n - 1) + 3 * at(n - 2);
        case LucasVariant::C: return 4 * at(n + 1) - at(n) - at(n + 2);
    }
    throw DomainError("lucas_from_trib: unknown variant");
}

BigInt trib_from_lucas(Index n) {
    const auto k = term_range(SequenceKind::TribonacciLucas, n - 1, n + 1);
    BigInt s = k[1] + 5 * k[0] + 2 * k[2];
    if (!mpz_divisible_ui_p(s.get_mpz_t(), 22)) {
        throw DivisibilityViolation("trib_from_lucas: 22 does not divide " + s.get_str() +
                                    " at n=" + std::to_string(n));
    }
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), s.get_mpz_t(), 22);
    return q;
}

// ---------------------------------------------------------------------------
// TermCache

TermCache::TermCache(SequenceKind kind) : kind_(kind) {
    const auto s = seeds(kind);
    nonneg_.assign(s.begin(), s.end());
}

Index TermCache::lo() const {
    std::shared_lock lock(mutex_);
    return -static_cast<Index>(neg_.size());
}

Index TermCache::hi() const {
    std::shared_lock lock(mutex_);
    return static_cast<Index>(nonneg_.size()) - 1;
}

const BigInt& TermCache::at_unlocked(Index n) const {
    return n >= 0 ? nonneg_[static_cast<std::size_t>(n)] : neg_[static_cast<std::size_t>(-1 - n)];
}

void TermCache::extend_to(Index n) {
    while (static_cast<Index>(nonneg_.size()) <= n) {
        const std::size_t k = nonneg_.size();
        nonneg_.push_back(nonneg_[k - 1] + nonneg_[k - 2] + nonneg_[k - 3]);
    }
    while (-static_cast<Index>(neg_.size()) > n) {
        const Index k = -static_cast<Index>(neg_.size());  // X(k) is the lowest stored
        neg_.push_back(at_unlocked(k + 2) - at_unlocked(k + 1) - at_unlocked(k));
    }
}

BigInt TermCache::get(Index n) {
    {
        std::shared_lock lock(mutex_);
        if (n >= -static_cast<Index>(neg_.size()) && n < static_cast<Index>(nonneg_.size()))
            return at_unlocked(n);
    }
    std::unique_lock lock(mutex_);
    extend_to(n);
    return at_unlocked(n);
}

std::vector<BigInt> TermCache::range(Index lo, Index hi) {
    if (lo > hi) throw DomainError("TermCache::range: lo > hi");
    {
        std::unique_lock lock(mutex_);
        extend_to(lo);
        extend_to(hi);
    }
    std::shared_lock lock(mutex_);
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (Index i = lo; i <= hi; ++i) out.push_back(at_unlocked(i));
    return out;
}

bool TermCache::consistent() const {
    std::shared_lock lock(mutex_);
    const Index lo = -static_cast<Index>(neg_.size());
    const Index hi = static_cast<Index>(nonneg_.size()) - 1;
    for (Index i = lo + 3; i <= hi; ++i) {
        if (at_unlocked(i) != at_unlocked(i - 1) + at_unlocked(i - 2) + at_unlocked(i - 3))
            return false;
    }
    return true;
}

}  // namespace tribkit
