#include "coalg/relation.hpp"

#include <sstream>

#include "coalg/errors.hpp"

namespace coalg {

Relation::Relation(std::set<AtomPair> pairs, AtomSet source, AtomSet target)
    : pairs(std::move(pairs)), source(std::move(source)), target(std::move(target)) {
    for (const auto& [a, b] : this->pairs) {
        if (!this->source.count(a))
            throw ValidationError("relation pair component " + a +
                                  " lies outside the source universe");
        if (!this->target.count(b))
            throw ValidationError("relation pair component " + b +
                                  " lies outside the target universe");
    }
}

AtomSet Relation::image(const Atom& a) const {
    AtomSet out;
    for (auto it = pairs.lower_bound({a, std::string()});
         it != pairs.end() && it->first == a; ++it)
        out.insert(it->second);
    return out;
}

AtomSet Relation::range() const {
    AtomSet out;
    for (const auto& [a, b] : pairs) out.insert(b);
    return out;
}

AtomSet Relation::domain() const {
    AtomSet out;
    for (const auto& [a, b] : pairs) out.insert(a);
    return out;
}

Relation Relation::converse() const {
    Relation out;
    out.source = target;
    out.target = source;
    for (const auto& [a, b] : pairs) out.pairs.insert({b, a});
    return out;
}

Relation Relation::compose(const Relation& other) const {
    Relation out;
    out.source = source;
    out.target = other.target;
    for (const auto& [a, b] : pairs)
        for (const auto& c : other.image(b))
            out.pairs.insert({a, c});
    return out;
}

Relation Relation::restrict_to(const AtomSet& src, const AtomSet& tgt) const {
    Relation out;
    out.source = src;
    out.target = tgt;
    for (const auto& [a, b] : pairs)
        if (src.count(a) && tgt.count(b))
            out.pairs.insert({a, b});
    return out;
}

Relation Relation::identity(const AtomSet& universe) {
    Relation out;
    out.source = universe;
    out.target = universe;
    for (const auto& a : universe) out.pairs.insert({a, a});
    return out;
}

Relation Relation::full(const AtomSet& source, const AtomSet& target) {
    Relation out;
    out.source = source;
    out.target = target;
    for (const auto& a : source)
        for (const auto& b : target)
            out.pairs.insert({a, b});
    return out;
}

std::string Relation::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [a, b] : pairs) {
        if (!first) os << ',';
        os << '(' << a << ',' << b << ')';
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace coalg
