#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qftlab {

// 128-bit numerators keep every quantity exact for register sizes up to
// n = 88 with the default 32 guard bits.
using u128 = unsigned __int128;
using i128 = __int128;

std::string to_string_u128(u128 v);
std::string to_string_i128(i128 v);

/// Estimate bits x1..xn, MSB first (bit index 1 is x1).
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<uint8_t> bits);
    static BitString from_index(u128 index, int n);

    int size() const { return static_cast<int>(bits_.size()); }
    /// 1-based access: bit(1) = x1.
    int bit(int p) const;
    u128 to_index() const;
    const std::vector<uint8_t>& bits() const { return bits_; }
    std::string str() const;

    bool operator==(const BitString&) const = default;

private:
    std::vector<uint8_t> bits_;
};

/// A phase on the unit circle stored as an exact binary fraction
/// numerator / 2^precision in [0, 1). All arithmetic is exact; the only
/// rounding happens in to_double() at the point of angle evaluation.
class Phase {
public:
    static constexpr int kMaxPrecision = 120;
    static constexpr int kGuardBits = 32;

    Phase() : num_(0), precision_(1) {}
    static Phase zero(int precision = 1);
    static Phase from_numerator(u128 numerator, int precision);

    u128 numerator() const { return num_; }
    int precision() const { return precision_; }

    /// Change precision without changing the value. Raising is always
    /// exact; lowering throws if bits would be lost.
    Phase with_precision(int precision) const;

    Phase operator+(const Phase& rhs) const;
    Phase operator-(const Phase& rhs) const;
    Phase negated() const;

    /// value * 2^s mod 1. Negative s (division) must be exact.
    Phase scaled_pow2(int s) const;

    bool is_zero() const { return num_ == 0; }
    /// Value equality; precisions are aligned before comparing.
    bool operator==(const Phase& rhs) const;
    bool operator<(const Phase& rhs) const;

    double to_double() const;
    std::string dyadic_str() const;
    std::string decimal_str() const;

private:
    Phase(u128 num, int precision) : num_(num), precision_(precision) {}
    u128 num_;
    int precision_;
};

/// An exact dyadic offset in [-1/2, 1/2), the wrapped difference of two
/// phases on the circle.
class SignedOffset {
public:
    SignedOffset() : num_(0), precision_(1) {}
    static SignedOffset from_raw(i128 numerator, int precision);
    /// Wrap a mod-1 phase into [-1/2, 1/2).
    static SignedOffset wrap(const Phase& p);

    i128 numerator() const { return num_; }
    int precision() const { return precision_; }

    /// The congruent phase in [0, 1).
    Phase mod_one() const;
    /// |value| as a phase in [0, 1/2].
    Phase magnitude() const;

    bool is_zero() const { return num_ == 0; }
    bool operator==(const SignedOffset& rhs) const;

    double to_double() const;
    std::string dyadic_str() const;

private:
    SignedOffset(i128 num, int precision) : num_(num), precision_(precision) {}
    i128 num_;
    int precision_;
};

/// (0.x1 x2 ... xn) as an exact phase. precision 0 selects n + guard bits.
Phase phase_from_bits(const BitString& x, int precision = 0);

struct NearestEstimate {
    BitString bits;      // x_hat, the nearest n-bit multiple
    SignedOffset delta;  // phi - (0.x_hat) in [-2^-(n+1), 2^-(n+1))
};

/// Round phi to the nearest multiple of 2^-n on the circle. The offset is
/// wrapped into the half-open interval [-2^-(n+1), 2^-(n+1)), so an exact
/// tie selects the upper multiple (delta = -2^-(n+1)).
NearestEstimate nearest_estimate(const Phase& phi, int n);

/// The truncated correction phase (0.0 x_{p+1} ... x_{p+m-1}) for threshold
/// m, saturating at x_n; chi(x, n, m, n) = 0.
Phase chi(const BitString& x, int p, int m, int n);

/// min(|a-b|, 1-|a-b|), exact, in [0, 1/2].
Phase wrapped_distance(const Phase& a, const Phase& b);

struct PhaseParse {
    Phase value;
    bool rounded;  // true if the text was not exactly representable
};

/// Accepts decimal fractions ("0.3217"), dyadic fractions ("5/2^4") and
/// bit strings ("0.0101b"). Decimals round to nearest at the requested
/// precision; the other two forms are exact.
PhaseParse parse_phase(std::string_view text, int precision);

}  // namespace qftlab
