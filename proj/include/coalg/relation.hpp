#pragma once

#include <set>
#include <string>
#include <utility>

#include "coalg/fvalue.hpp"

namespace coalg {

using AtomPair = std::pair<Atom, Atom>;

/// A finite relation between two declared atom universes.
struct Relation {
    std::set<AtomPair> pairs;
    AtomSet source;
    AtomSet target;

    Relation() = default;
    Relation(std::set<AtomPair> pairs, AtomSet source, AtomSet target);

    bool contains(const Atom& a, const Atom& b) const {
        return pairs.count({a, b}) != 0;
    }

    /// R[a] = { b | (a,b) in R }.
    AtomSet image(const Atom& a) const;
    AtomSet range() const;
    AtomSet domain() const;

    Relation converse() const;
    /// this ; other = { (a,c) | (a,b) in this, (b,c) in other }.
    Relation compose(const Relation& other) const;
    Relation restrict_to(const AtomSet& src, const AtomSet& tgt) const;

    static Relation identity(const AtomSet& universe);
    static Relation full(const AtomSet& source, const AtomSet& target);

    bool operator==(const Relation& other) const { return pairs == other.pairs; }
    auto operator<=>(const Relation& other) const { return pairs <=> other.pairs; }

    std::string str() const;
};

} // namespace coalg
