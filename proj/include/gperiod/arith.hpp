#pragma once

// Least common multiples of small integers with exact, unbounded output.
//
// The inputs are digraph periods (each at most the vertex count) but their
// lcm grows like e^{sqrt(n log n)}, so the result is a big integer.

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gperiod {

using BigInt = boost::multiprecision::cpp_int;

struct PrimePower {
    std::uint64_t prime = 0;
    std::uint32_t multiplicity = 0;

    bool operator==(const PrimePower&) const = default;
};

struct PeriodResult {
    BigInt value{1};
    std::vector<PrimePower> factors;  // primes strictly increasing

    bool operator==(const PeriodResult&) const = default;
};

inline bool is_prime_by_trial_division(std::uint64_t c) {
    if (c < 2) return false;
    for (std::uint64_t d = 2; d * d <= c; ++d) {
        if (c % d == 0) return false;
    }
    return true;
}

inline BigInt multiply_out(std::span<const PrimePower> factors) {
    BigInt value = 1;
    for (const PrimePower& f : factors) {
        for (std::uint32_t i = 0; i < f.multiplicity; ++i) value *= f.prime;
    }
    return value;
}

// Scans candidate primes up to the largest input; for each prime dividing
// some input, the multiplicity is the largest m with prime^m dividing some
// input. The value is the product of the collected prime powers.
inline PeriodResult lcm_list(std::span<const std::int64_t> values) {
    std::int64_t largest = 1;
    for (std::int64_t v : values) {
        if (v <= 0) throw std::invalid_argument("lcm_list: inputs must be positive, got " + std::to_string(v));
        largest = std::max(largest, v);
    }

    PeriodResult out;
    for (std::uint64_t c = 2; c <= static_cast<std::uint64_t>(largest); ++c) {
        if (!is_prime_by_trial_division(c)) continue;
        auto divides_some = [&](std::uint64_t d) {
            return std::any_of(values.begin(), values.end(),
                               [d](std::int64_t v) { return static_cast<std::uint64_t>(v) % d == 0; });
        };
        if (!divides_some(c)) continue;
        PrimePower f{c, 1};
        // c^(m+1) <= largest keeps the power inside 64 bits.
        std::uint64_t pw = c;
        while (pw <= static_cast<std::uint64_t>(largest) / c && divides_some(pw * c)) {
            pw *= c;
            ++f.multiplicity;
        }
        out.factors.push_back(f);
    }
    out.value = multiply_out(out.factors);
    return out;
}

inline PeriodResult lcm_list(std::initializer_list<std::int64_t> values) {
    return lcm_list(std::span<const std::int64_t>(values.begin(), values.size()));
}

// "12 = 2^2 * 3"; the trivial result prints as "1".
inline std::string format_factored(const PeriodResult& r) {
    std::string out = r.value.str();
    if (r.factors.empty()) return out;
    out += " = ";
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        if (i > 0) out += " * ";
        out += std::to_string(r.factors[i].prime);
        if (r.factors[i].multiplicity > 1) out += "^" + std::to_string(r.factors[i].multiplicity);
    }
    return out;
}

}  // namespace gperiod
