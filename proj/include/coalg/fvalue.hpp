#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "coalg/functor.hpp"

namespace coalg {

using Atom = std::string;
using AtomSet = std::set<Atom>;
using Rational = boost::rational<long long>;

/// An element of F S, as an inductive value over named atoms.
///
/// Values are canonical by construction: Set elements are sorted and
/// deduplicated, Fun entries are keyed in sorted order, Dist/Multi supports
/// are sorted with merged weights.  Structural equality therefore coincides
/// with semantic equality.
///
/// There is no node for functor composition: a value of F.G is an F-shaped
/// value whose Id leaves hold G-shaped values.
class FValue {
public:
    enum class Kind { Atom, Label, Set, Pair, In, Fun, Dist, Multi };

    static FValue atom(Atom name);
    static FValue label(std::string name);
    static FValue set(std::vector<FValue> elems);
    static FValue pair(FValue left, FValue right);
    static FValue inl(FValue v);
    static FValue inr(FValue v);
    static FValue fun(std::vector<std::pair<std::string, FValue>> entries);
    static FValue dist(std::vector<std::pair<FValue, Rational>> weights);
    static FValue multi(std::vector<std::pair<FValue, std::uint64_t>> counts);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }          // Atom / Label
    bool is_left() const { return left_; }                     // In
    const std::vector<FValue>& items() const { return items_; }
    const std::vector<std::string>& keys() const { return keys_; }
    const std::vector<Rational>& weights() const { return weights_; }
    const std::vector<std::uint64_t>& counts() const { return counts_; }

    const FValue& first() const { return items_[0]; }   // Pair left, In payload
    const FValue& second() const { return items_[1]; }  // Pair right

    bool contains(const FValue& v) const;  // Set membership

    std::string str() const;

    std::strong_ordering operator<=>(const FValue& other) const;
    bool operator==(const FValue& other) const { return (*this <=> other) == 0; }

private:
    FValue() = default;

    Kind kind_ = Kind::Atom;
    std::string name_;
    bool left_ = false;
    std::vector<FValue> items_;
    std::vector<std::string> keys_;
    std::vector<Rational> weights_;
    std::vector<std::uint64_t> counts_;
};

using FValueSet = std::set<FValue>;

/// Verifies that `v` is well-shaped for `F`; `leaf` is applied to every value
/// sitting at an Id position of `F`.  Throws MalformedValue otherwise.
void check_shape(const FunctorExpr& F, const FValue& v,
                 const std::function<void(const FValue&)>& leaf);

/// Well-shapedness over an atom universe: Id leaves must be atoms of `universe`.
void check_shape(const FunctorExpr& F, const FValue& v, const AtomSet& universe);

/// Applies `f` to every value at an Id position of `F` and re-canonicalizes.
FValue map_leaves(const FunctorExpr& F, const FValue& v,
                  const std::function<FValue(const FValue&)>& f);

/// The functorial action on a total atom map: applies `f` at every Id leaf.
/// Requires F finitary, `v` well-shaped and `f` defined on all of base(v).
FValue f_map(const FunctorExpr& F, const std::map<Atom, Atom>& f, const FValue& v);

/// The set of values sitting at Id positions of `F` in `v`.
FValueSet support(const FunctorExpr& F, const FValue& v);

/// The atoms at Id leaves of `v`: the least U with `v` in F U.
AtomSet base(const FunctorExpr& F, const FValue& v);

} // namespace coalg
