#include "qftlab/phase.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qftlab {

namespace {

constexpr u128 low_mask(int bits) {
    if (bits <= 0) return 0;
    if (bits >= 128) return ~u128{0};
    return (u128{1} << bits) - 1;
}

void check_precision(int precision) {
    if (precision < 1 || precision > Phase::kMaxPrecision)
        throw std::invalid_argument("phase precision out of range [1, " +
                                    std::to_string(Phase::kMaxPrecision) + "]");
}

u128 parse_u128_digits(std::string_view digits) {
    if (digits.empty()) throw std::invalid_argument("empty integer");
    u128 v = 0;
    const u128 limit = ~u128{0} / 10;
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad digit in integer");
        if (v > limit) throw std::invalid_argument("integer too large");
        v = v * 10 + static_cast<unsigned>(c - '0');
    }
    return v;
}

}  // namespace

std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::string to_string_i128(i128 v) {
    if (v < 0) return "-" + to_string_u128(static_cast<u128>(-v));
    return to_string_u128(static_cast<u128>(v));
}

BitString::BitString(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    for (uint8_t b : bits_)
        if (b > 1) throw std::invalid_argument("bit string entries must be 0 or 1");
}

BitString BitString::from_index(u128 index, int n) {
    if (n < 0 || n > 127) throw std::invalid_argument("bit string length out of range");
    std::vector<uint8_t> bits(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        bits[static_cast<size_t>(i)] = static_cast<uint8_t>((index >> (n - 1 - i)) & 1);
    return BitString(std::move(bits));
}

int BitString::bit(int p) const {
    if (p < 1 || p > size()) throw std::invalid_argument("bit index out of range");
    return bits_[static_cast<size_t>(p - 1)];
}

u128 BitString::to_index() const {
    u128 v = 0;
    for (uint8_t b : bits_) v = (v << 1) | b;
    return v;
}

std::string BitString::str() const {
    std::string out;
    out.reserve(bits_.size());
    for (uint8_t b : bits_) out.push_back(b ? '1' : '0');
    return out;
}

Phase Phase::zero(int precision) {
    check_precision(precision);
    return Phase(0, precision);
}

Phase Phase::from_numerator(u128 numerator, int precision) {
    check_precision(precision);
    return Phase(numerator & low_mask(precision), precision);
}

Phase Phase::with_precision(int precision) const {
    check_precision(precision);
    if (precision == precision_) return *this;
    if (precision > precision_) return Phase(num_ << (precision - precision_), precision);
    const int drop = precision_ - precision;
    if ((num_ & low_mask(drop)) != 0)
        throw std::invalid_argument("lowering phase precision would lose bits");
    return Phase(num_ >> drop, precision);
}

Phase Phase::operator+(const Phase& rhs) const {
    const int f = std::max(precision_, rhs.precision_);
    const Phase a = with_precision(f);
    const Phase b = rhs.with_precision(f);
    return Phase((a.num_ + b.num_) & low_mask(f), f);
}

Phase Phase::operator-(const Phase& rhs) const {
    const int f = std::max(precision_, rhs.precision_);
    const Phase a = with_precision(f);
    const Phase b = rhs.with_precision(f);
    return Phase((a.num_ - b.num_) & low_mask(f), f);
}

Phase Phase::negated() const {
    if (num_ == 0) return *this;
    return Phase((u128{1} << precision_) - num_, precision_);
}

Phase Phase::scaled_pow2(int s) const {
    if (s == 0 || num_ == 0) return *this;
    if (s > 0) {
        if (s >= precision_) return Phase(0, precision_);
        return Phase((num_ & low_mask(precision_ - s)) << s, precision_);
    }
    const int t = -s;
    if (t >= 128 || (num_ & low_mask(t)) != 0)
        throw std::invalid_argument("inexact power-of-two division of a phase");
    return Phase(num_ >> t, precision_);
}

bool Phase::operator==(const Phase& rhs) const {
    const int f = std::max(precision_, rhs.precision_);
    return with_precision(f).num_ == rhs.with_precision(f).num_;
}

bool Phase::operator<(const Phase& rhs) const {
    const int f = std::max(precision_, rhs.precision_);
    return with_precision(f).num_ < rhs.with_precision(f).num_;
}

double Phase::to_double() const {
    return std::ldexp(static_cast<double>(num_), -precision_);
}

std::string Phase::dyadic_str() const {
    return to_string_u128(num_) + "/2^" + std::to_string(precision_);
}

std::string Phase::decimal_str() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", to_double());
    return buf;
}

SignedOffset SignedOffset::from_raw(i128 numerator, int precision) {
    check_precision(precision);
    const i128 half = i128{1} << (precision - 1);
    if (numerator < -half || numerator >= half)
        throw std::invalid_argument("signed offset outside [-1/2, 1/2)");
    return SignedOffset(numerator, precision);
}

SignedOffset SignedOffset::wrap(const Phase& p) {
    const u128 half = u128{1} << (p.precision() - 1);
    if (p.numerator() >= half) {
        const u128 full = u128{1} << p.precision();
        return SignedOffset(-static_cast<i128>(full - p.numerator()), p.precision());
    }
    return SignedOffset(static_cast<i128>(p.numerator()), p.precision());
}

Phase SignedOffset::mod_one() const {
    if (num_ >= 0) return Phase::from_numerator(static_cast<u128>(num_), precision_);
    const u128 full = u128{1} << precision_;
    return Phase::from_numerator(full - static_cast<u128>(-num_), precision_);
}

Phase SignedOffset::magnitude() const {
    const u128 mag = num_ < 0 ? static_cast<u128>(-num_) : static_cast<u128>(num_);
    return Phase::from_numerator(mag, precision_);
}

bool SignedOffset::operator==(const SignedOffset& rhs) const {
    if (precision_ == rhs.precision_) return num_ == rhs.num_;
    const int f = std::max(precision_, rhs.precision_);
    return (num_ << (f - precision_)) == (rhs.num_ << (f - rhs.precision_));
}

double SignedOffset::to_double() const {
    return std::ldexp(static_cast<double>(num_), -precision_);
}

std::string SignedOffset::dyadic_str() const {
    return to_string_i128(num_) + "/2^" + std::to_string(precision_);
}

Phase phase_from_bits(const BitString& x, int precision) {
    const int n = x.size();
    if (n < 1) throw std::invalid_argument("empty bit string");
    if (precision == 0) precision = std::min(n + Phase::kGuardBits, Phase::kMaxPrecision);
    check_precision(precision);
    if (precision < n)
        throw std::invalid_argument("precision too small for bit string");
    u128 num = 0;
    for (int p = 1; p <= n; ++p)
        if (x.bit(p)) num |= u128{1} << (precision - p);
    return Phase::from_numerator(num, precision);
}

NearestEstimate nearest_estimate(const Phase& phi, int n) {
    if (n < 1 || n >= Phase::kMaxPrecision)
        throw std::invalid_argument("register size out of range");
    const Phase p = phi.with_precision(std::max(phi.precision(), n + 1));
    const int shift = p.precision() - n;
    const u128 half = u128{1} << (shift - 1);
    const u128 k_raw = (p.numerator() + half) >> shift;
    const i128 delta_num =
        static_cast<i128>(p.numerator()) - static_cast<i128>(k_raw << shift);
    NearestEstimate est;
    est.bits = BitString::from_index(k_raw & ((u128{1} << n) - 1), n);
    est.delta = SignedOffset::from_raw(delta_num, p.precision());
    return est;
}

Phase chi(const BitString& x, int p, int m, int n) {
    if (x.size() != n) throw std::invalid_argument("bit string length must equal n");
    if (p < 1 || p > n) throw std::invalid_argument("bit index out of range");
    m = std::clamp(m, std::min(2, n), n);
    const int precision = n + 1;
    const int j_max = std::min(p + m - 1, n);
    u128 num = 0;
    for (int j = p + 1; j <= j_max; ++j)
        if (x.bit(j)) num |= u128{1} << (precision - (j - p + 1));
    return Phase::from_numerator(num, precision);
}

Phase wrapped_distance(const Phase& a, const Phase& b) {
    const Phase d = a - b;
    const u128 half = u128{1} << (d.precision() - 1);
    if (d.numerator() > half) {
        const u128 full = u128{1} << d.precision();
        return Phase::from_numerator(full - d.numerator(), d.precision());
    }
    return d;
}

namespace {

PhaseParse parse_decimal(std::string_view frac_digits, int precision) {
    // Binary long division of D / 10^k, round half up at bit `precision`.
    if (frac_digits.size() > 36)
        throw std::invalid_argument("decimal fraction too long (max 36 digits)");
    u128 den = 1;
    for (size_t i = 0; i < frac_digits.size(); ++i) den *= 10;
    u128 rem = frac_digits.empty() ? 0 : parse_u128_digits(frac_digits);
    u128 num = 0;
    for (int i = 0; i < precision; ++i) {
        rem <<= 1;
        num <<= 1;
        if (rem >= den) {
            rem -= den;
            num |= 1;
        }
    }
    rem <<= 1;
    const bool round_bit = rem >= den;
    if (round_bit) rem -= den;
    const bool rounded = round_bit || rem != 0;
    if (round_bit) num += 1;  // may carry to 1.0, which wraps to 0 mod 1
    return {Phase::from_numerator(num, precision), rounded};
}

}  // namespace

PhaseParse parse_phase(std::string_view text, int precision) {
    check_precision(precision);
    if (text.empty()) throw std::invalid_argument("empty phase literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        // dyadic form k/2^F
        const std::string_view k_part = text.substr(0, slash);
        const std::string_view den_part = text.substr(slash + 1);
        if (den_part.size() < 3 || den_part.substr(0, 2) != "2^")
            throw std::invalid_argument("dyadic phase must have the form k/2^F");
        const u128 f_val = parse_u128_digits(den_part.substr(2));
        if (f_val < 1 || f_val > Phase::kMaxPrecision)
            throw std::invalid_argument("dyadic exponent out of range");
        const int f = static_cast<int>(f_val);
        const Phase exact = Phase::from_numerator(parse_u128_digits(k_part), f);
        if (f <= precision) return {exact.with_precision(precision), false};
        // Requested precision is coarser: round to nearest, half up.
        const int drop = f - precision;
        const u128 half = u128{1} << (drop - 1);
        const u128 rounded_num = (exact.numerator() + half) >> drop;
        const bool rounded = (exact.numerator() & ((u128{1} << drop) - 1)) != 0;
        return {Phase::from_numerator(rounded_num, precision), rounded};
    }

    if (text.back() == 'b') {
        if (text.size() < 4 || text.substr(0, 2) != "0.")
            throw std::invalid_argument("bit-string phase must have the form 0.bits...b");
        const std::string_view digits = text.substr(2, text.size() - 3);
        std::vector<uint8_t> bits;
        bits.reserve(digits.size());
        for (char c : digits) {
            if (c != '0' && c != '1') throw std::invalid_argument("bad bit in phase literal");
            bits.push_back(static_cast<uint8_t>(c - '0'));
        }
        if (bits.empty()) throw std::invalid_argument("bit-string phase has no bits");
        if (static_cast<int>(bits.size()) <= precision)
            return {phase_from_bits(BitString(std::move(bits)), precision), false};
        const Phase exact = phase_from_bits(BitString(std::move(bits)),
                                            static_cast<int>(digits.size()));
        const int drop = exact.precision() - precision;
        const u128 half = u128{1} << (drop - 1);
        const bool rounded = (exact.numerator() & ((u128{1} << drop) - 1)) != 0;
        return {Phase::from_numerator((exact.numerator() + half) >> drop, precision),
                rounded};
    }

    // decimal form, integer part reduced mod 1
    const auto dot = text.find('.');
    const std::string_view int_part = dot == std::string_view::npos ? text : text.substr(0, dot);
    const std::string_view frac_part =
        dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (!int_part.empty()) parse_u128_digits(int_part);  // validate digits only
    if (int_part.empty() && frac_part.empty())
        throw std::invalid_argument("empty phase literal");
    return parse_decimal(frac_part, precision);
}

}  // namespace qftlab
