#pragma once

// Deterministic power iteration on T*T for L2 -> L2 operator norms.

#include <cstdint>
#include <functional>

#include "frlp/grid.hpp"

namespace frlp {

inline constexpr std::uint64_t kOpNormSeed = 0x5EED;

struct OpNormEstimate {
    double norm = 0.0;
    double last_increment = 0.0;
    int iterations = 0;
};

// apply/apply_adjoint act on signals over `grid`. The probe start vector is
// drawn from `seed`; pass `probe` to supply it explicitly (used to transport
// the same probe through a unitary change of frame).
OpNormEstimate operator_norm(const std::function<Signal(const Signal&)>& apply,
                             const std::function<Signal(const Signal&)>& apply_adjoint,
                             const GridSpec& grid,
                             int iterations = 200,
                             std::uint64_t seed = kOpNormSeed,
                             const Signal* probe = nullptr);

Signal random_probe(const GridSpec& grid, std::uint64_t seed);

} // namespace frlp
