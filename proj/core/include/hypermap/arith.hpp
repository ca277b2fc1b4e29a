#pragma once

#include <cstdint>
#include <vector>

namespace hypermap {

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Prime factors of n, ascending, without multiplicity.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// (base^exp) mod m.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// If n = p^e with p prime and e >= 1, returns p; otherwise 0.
std::uint64_t prime_power_base(std::uint64_t n);

}  // namespace hypermap
