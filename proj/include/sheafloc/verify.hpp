#pragma once

#include "sheafloc/shift_index.hpp"
#include "sheafloc/weights.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sheafloc {

struct VerifyOptions {
    unsigned max_c2 = 4;
    std::int64_t l_range = 8;       // l in [-l_range, l_range]
    std::int64_t lprime_range = 3;  // l' in [-lprime_range, lprime_range]
    std::vector<WeightTriple> triples{WeightTriple(1, 2, 10), WeightTriple(1, 3, 100), WeightTriple(2, 5, 1000)};
};

struct VerifyReport {
    std::uint64_t cases = 0;
    std::uint64_t mismatches = 0;
    std::optional<std::string> first_counterexample;

    bool ok() const noexcept { return mismatches == 0; }
};

using ShiftFunction = std::function<unsigned(const ShiftInput&)>;

/// Compares `closed` against shift_oracle for every pair with
/// |alpha| + |beta| <= max_c2, every l and l' in range and every triple, then
/// compares betti_sym_component(alpha, {}) with the product of macdonald_sym
/// factors for |alpha| <= max_c2. The closed form is a parameter so a
/// deliberately broken one can be checked to fail.
VerifyReport run_verify(const VerifyOptions& opts, const ShiftFunction& closed = shift_closed);

}  // namespace sheafloc
