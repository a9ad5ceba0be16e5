#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace primelab {

// Error taxonomy shared by the whole library. The CLI maps kinds to exit
// codes: usage -> 2, hypothesis -> 3, capacity -> 4.
enum class errc {
    usage,       // invalid arguments, domain violations, bad grids
    hypothesis,  // a theorem's hypotheses do not hold for the requested input
    capacity,    // requested computation exceeds a configured budget
};

class lab_error : public std::runtime_error {
  public:
    lab_error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const { return kind_; }

  private:
    errc kind_;
};

inline lab_error usage_error(const std::string& what) { return {errc::usage, what}; }
inline lab_error hypothesis_error(const std::string& what) { return {errc::hypothesis, what}; }
inline lab_error capacity_error(const std::string& what) { return {errc::capacity, what}; }

// Euler-Mascheroni constant, 20 decimal digits (OEIS A001620).
inline constexpr double kEulerGamma = 0.57721566490153286061;

// Per-run allocation ceiling for sieve bitmaps, prime tables and parity
// tables. Overridable through options structs; errors name the budget.
inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{1} << 30;

inline std::uint64_t isqrt(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

// Thread budget resolution: explicit value wins, then PRIMELAB_THREADS,
// then hardware concurrency. Results never depend on the value chosen.
inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("PRIMELAB_THREADS")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? (hw > 16 ? 16u : hw) : 1u;
}

}  // namespace primelab
