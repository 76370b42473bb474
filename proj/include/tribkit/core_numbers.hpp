#pragma once

// Exact Tribonacci (T) and Tribonacci-Lucas (K) numbers over all integer
// indices.
//
//   T(n) = T(n-1) + T(n-2) + T(n-3),  T(0)=0, T(1)=1, T(2)=1
//   K(n) = K(n-1) + K(n-2) + K(n-3),  K(0)=3, K(1)=1, K(2)=3
//
// Negative indices run the recurrence backwards:
//   X(k-3) = X(k) - X(k-1) - X(k-2)

#include <array>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace tribkit {

struct OpCounter;

using BigInt = mpz_class;
using Index = std::int64_t;

enum class SequenceKind { Tribonacci, TribonacciLucas };

inline constexpr std::array<SequenceKind, 2> kSequenceKinds{
    SequenceKind::Tribonacci, SequenceKind::TribonacciLucas};

std::string_view to_string(SequenceKind kind);

/// Seeds X(0), X(1), X(2).
std::array<BigInt, 3> seeds(SequenceKind kind);

BigInt trib(Index n);
BigInt lucas_trib(Index n);
BigInt term(SequenceKind kind, Index n, OpCounter* ops = nullptr);

/// Values X(lo), ..., X(hi) computed in a single walk from the seeds.
/// Requires lo <= hi.
std::vector<BigInt> term_range(SequenceKind kind, Index lo, Index hi, OpCounter* ops = nullptr);

/// T(n) through T(n) = 2T(n-1) - T(n-4) forward and
/// T(-n) = 2T(-n+3) - T(-n+4) backward, seeded with T(0..3) = 0, 1, 1, 2.
BigInt trib_alt(Index n);

enum class LucasVariant {
    A,  ///< K(n) = 3T(n+1) - 2T(n) - T(n-1)
    B,  ///< K(n) = T(n) + 2T(n-1) + 3T(n-2)
    C,  ///< K(n) = 4T(n+1) - T(n) - T(n+2)
};

BigInt lucas_from_trib(Index n, LucasVariant variant);

/// T(n) = (K(n) + 5K(n-1) + 2K(n+1)) / 22. Throws DivisibilityViolation if
/// the numerator is not a multiple of 22.
BigInt trib_from_lucas(Index n);

/// Memoized terms of one sequence over a contiguous index window that grows
/// on demand. Stored values never change once written; concurrent readers
/// and extenders are serialized by an internal lock.
class TermCache {
public:
    explicit TermCache(SequenceKind kind);

    TermCache(const TermCache&) = delete;
    TermCache& operator=(const TermCache&) = delete;

    SequenceKind kind() const noexcept { return kind_; }

    /// Current window; always contains [0, 2].
    Index lo() const;
    Index hi() const;

    BigInt get(Index n);
    std::vector<BigInt> range(Index lo, Index hi);

    /// Checks the recurrence over the whole stored window.
    bool consistent() const;

private:
    void extend_to(Index n);
    const BigInt& at_unlocked(Index n) const;

    SequenceKind kind_;
    mutable std::shared_mutex mutex_;
    std::vector<BigInt> nonneg_;  // X(i) at position i
    std::vector<BigInt> neg_;     // X(-1-i) at position i
};

}  // namespace tribkit
