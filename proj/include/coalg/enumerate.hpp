#pragma once

#include <cstdint>
#include <vector>

#include "coalg/fvalue.hpp"

namespace coalg {

/// Default enumeration cap (2^20 values), overridable through the
/// COALG_BLOWUP_CAP environment variable.
std::uint64_t default_cap();

struct EnumOptions {
    std::uint64_t cap = default_cap();
};

/// |F U| for |U| = n.  Throws BlowupGuard beyond `cap`.
std::uint64_t count_f(const FunctorExpr& F, std::uint64_t n, std::uint64_t cap);

/// All elements of F(universe), canonical and duplicate-free.
/// Requires F finitary; guarded by opts.cap.
std::vector<FValue> enumerate_f(const FunctorExpr& F,
                                const std::vector<FValue>& universe,
                                const EnumOptions& opts = {});

/// Convenience overload over an atom carrier.
std::vector<FValue> enumerate_f(const FunctorExpr& F, const AtomSet& carrier,
                                const EnumOptions& opts = {});

/// All subsets of `universe` of size <= max_size (all of them by default).
std::vector<std::vector<FValue>> subsets_of(const std::vector<FValue>& universe,
                                            std::size_t max_size);

} // namespace coalg
