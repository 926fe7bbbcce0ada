#pragma once

#include <vector>

#include "coalg/enumerate.hpp"
#include "coalg/fvalue.hpp"

namespace coalg {

/// Whether `xi` (a value of F over set-atoms, i.e. an element of F(P(A)))
/// redistributes every member of `phis`: each phi must be related to xi by
/// the lifting of the membership relation between A and P(A).
bool is_redistribution(const FunctorExpr& F, const FValue& xi,
                       const std::vector<FValue>& phis);

/// All redistributions of `phis` in F(P(A)) whose set-atoms have size at most
/// `base_cap`; the empty set-atom is always part of the universe, so with
/// base_cap = |A| the enumeration is exhaustive over F(P(A)).
std::vector<FValue> enumerate_redistributions(const FunctorExpr& F,
                                              const std::vector<FValue>& phis,
                                              const AtomSet& carrier,
                                              std::size_t base_cap,
                                              const EnumOptions& opts = {});

} // namespace coalg
