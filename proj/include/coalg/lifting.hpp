#pragma once

#include <functional>

#include "coalg/enumerate.hpp"
#include "coalg/fvalue.hpp"
#include "coalg/relation.hpp"

namespace coalg {

using LeafRel = std::function<bool(const FValue&, const FValue&)>;

/// Membership in the lifted relation, with an arbitrary predicate relating
/// the values at Id positions.  Compositional in the functor term:
///   Const: equal labels; Id: the predicate; Pow: Egli-Milner;
///   Prod/Sum/Exp: componentwise; Comp: lifting of the lifting;
///   Dist: a rational coupling supported on the relation with the two
///   distributions as marginals; Multi: an integer coupling.
bool lift_member_gen(const FunctorExpr& F, const LeafRel& rel,
                     const FValue& phi, const FValue& psi);

/// (phi, psi) in F̄(Z), for values over the declared atom universes of Z.
bool lift_member(const FunctorExpr& F, const Relation& Z,
                 const FValue& phi, const FValue& psi);

/// Definitional oracle: enumerates F(Z) with pairs as atoms and projects.
/// Independent of the compositional route; requires F finitary.
bool lift_member_oracle(const FunctorExpr& F, const Relation& Z,
                        const FValue& phi, const FValue& psi,
                        const EnumOptions& opts = {});

/// Whether a nonnegative coupling with the given marginals exists whose
/// support is contained in `rel`.  Exact rational max-flow feasibility;
/// integral marginals yield an integral coupling.
bool coupling_exists(const std::vector<std::pair<FValue, Rational>>& rows,
                     const std::vector<std::pair<FValue, Rational>>& cols,
                     const LeafRel& rel);

} // namespace coalg
