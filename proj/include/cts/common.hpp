#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cts {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CTS_ERROR(NAME)                                                    \
    struct NAME : Error {                                                  \
        explicit NAME(const std::string& what = #NAME) : Error(what) {}    \
    }

CTS_ERROR(DivisionByZero);
CTS_ERROR(IndeterminateSubstitution);
CTS_ERROR(ParseError);
CTS_ERROR(NoSolution);
CTS_ERROR(NormalizationError);
CTS_ERROR(CenterMismatch);
CTS_ERROR(NonTerminated);
CTS_ERROR(ReflectionUndefined);
CTS_ERROR(UnknownPreset);
CTS_ERROR(BadSeriesParams);
CTS_ERROR(RealizationInconsistent);
CTS_ERROR(NotSubmodule);
CTS_ERROR(DegenerateForm);
CTS_ERROR(NotApplicable);
CTS_ERROR(InvalidSeed);
CTS_ERROR(UnknownFixture);
CTS_ERROR(InvalidParams);

#undef CTS_ERROR

// Deterministic PRNG for property tests and seeded spinning vectors.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  private:
    std::uint64_t state_;
};

}  // namespace cts
