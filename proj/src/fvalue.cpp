#include "coalg/fvalue.hpp"

#include <algorithm>
#include <sstream>

#include "coalg/errors.hpp"

namespace coalg {

FValue FValue::atom(Atom name) {
    FValue v;
    v.kind_ = Kind::Atom;
    v.name_ = std::move(name);
    return v;
}

FValue FValue::label(std::string name) {
    FValue v;
    v.kind_ = Kind::Label;
    v.name_ = std::move(name);
    return v;
}

FValue FValue::set(std::vector<FValue> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    FValue v;
    v.kind_ = Kind::Set;
    v.items_ = std::move(elems);
    return v;
}

FValue FValue::pair(FValue left, FValue right) {
    FValue v;
    v.kind_ = Kind::Pair;
    v.items_ = {std::move(left), std::move(right)};
    return v;
}

FValue FValue::inl(FValue payload) {
    FValue v;
    v.kind_ = Kind::In;
    v.left_ = true;
    v.items_ = {std::move(payload)};
    return v;
}

FValue FValue::inr(FValue payload) {
    FValue v;
    v.kind_ = Kind::In;
    v.left_ = false;
    v.items_ = {std::move(payload)};
    return v;
}

FValue FValue::fun(std::vector<std::pair<std::string, FValue>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    FValue v;
    v.kind_ = Kind::Fun;
    for (auto& [k, val] : entries) {
        if (!v.keys_.empty() && v.keys_.back() == k)
            throw MalformedValue("duplicate key '" + k + "' in function value");
        v.keys_.push_back(k);
        v.items_.push_back(std::move(val));
    }
    return v;
}

FValue FValue::dist(std::vector<std::pair<FValue, Rational>> weights) {
    std::map<FValue, Rational> merged;
    Rational total(0);
    for (auto& [key, w] : weights) {
        if (w <= Rational(0))
            throw MalformedValue("distribution weight must be positive");
        merged[key] += w;
        total += w;
    }
    if (total != Rational(1))
        throw MalformedValue("distribution weights must sum to 1");
    FValue v;
    v.kind_ = Kind::Dist;
    for (auto& [key, w] : merged) {
        v.items_.push_back(key);
        v.weights_.push_back(w);
    }
    return v;
}

FValue FValue::multi(std::vector<std::pair<FValue, std::uint64_t>> counts) {
    std::map<FValue, std::uint64_t> merged;
    for (auto& [key, n] : counts) {
        if (n == 0)
            throw MalformedValue("multiset multiplicity must be positive");
        merged[key] += n;
    }
    FValue v;
    v.kind_ = Kind::Multi;
    for (auto& [key, n] : merged) {
        v.items_.push_back(key);
        v.counts_.push_back(n);
    }
    return v;
}

bool FValue::contains(const FValue& v) const {
    return std::binary_search(items_.begin(), items_.end(), v);
}

std::strong_ordering FValue::operator<=>(const FValue& other) const {
    if (auto c = kind_ <=> other.kind_; c != 0) return c;
    if (auto c = name_ <=> other.name_; c != 0) return c;
    if (auto c = left_ <=> other.left_; c != 0) return c;
    if (auto c = keys_ <=> other.keys_; c != 0) return c;
    if (auto c = items_.size() <=> other.items_.size(); c != 0) return c;
    for (std::size_t i = 0; i < items_.size(); ++i)
        if (auto c = items_[i] <=> other.items_[i]; c != 0) return c;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (auto c = weights_[i].numerator() <=> other.weights_[i].numerator(); c != 0)
            return c;
        if (auto c = weights_[i].denominator() <=> other.weights_[i].denominator(); c != 0)
            return c;
    }
    if (auto c = counts_ <=> other.counts_; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string FValue::str() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::Atom:
    case Kind::Label:
        os << name_;
        break;
    case Kind::Set: {
        os << '{';
        bool first = true;
        for (const auto& e : items_) {
            if (!first) os << ',';
            os << e.str();
            first = false;
        }
        os << '}';
        break;
    }
    case Kind::Pair:
        os << '(' << items_[0].str() << ',' << items_[1].str() << ')';
        break;
    case Kind::In:
        os << (left_ ? "inl " : "inr ") << items_[0].str();
        break;
    case Kind::Fun: {
        os << '[';
        for (std::size_t i = 0; i < keys_.size(); ++i) {
            if (i) os << ',';
            os << keys_[i] << "->" << items_[i].str();
        }
        os << ']';
        break;
    }
    case Kind::Dist: {
        os << "dist{";
        for (std::size_t i = 0; i < items_.size(); ++i) {
            if (i) os << ',';
            os << items_[i].str() << ':' << weights_[i].numerator();
            if (weights_[i].denominator() != 1)
                os << '/' << weights_[i].denominator();
        }
        os << '}';
        break;
    }
    case Kind::Multi: {
        os << "multi{";
        for (std::size_t i = 0; i < items_.size(); ++i) {
            if (i) os << ',';
            os << items_[i].str() << ':' << counts_[i];
        }
        os << '}';
        break;
    }
    }
    return os.str();
}

namespace {

[[noreturn]] void shape_fail(const FunctorExpr& F, const FValue& v, const char* want) {
    throw MalformedValue("value " + v.str() + " does not fit " + F.str() +
                         ": expected " + want);
}

bool label_member(const std::vector<std::string>& labels, const std::string& l) {
    return std::find(labels.begin(), labels.end(), l) != labels.end();
}

} // namespace

void check_shape(const FunctorExpr& F, const FValue& v,
                 const std::function<void(const FValue&)>& leaf) {
    using FK = FunctorExpr::Kind;
    using VK = FValue::Kind;
    switch (F.kind()) {
    case FK::Id:
        leaf(v);
        return;
    case FK::Const:
        if (v.kind() != VK::Label && v.kind() != VK::Atom)
            shape_fail(F, v, "a label");
        if (!label_member(F.labels(), v.name()))
            throw MalformedValue("label " + v.name() + " not in " + F.str());
        return;
    case FK::Pow:
        if (v.kind() != VK::Set) shape_fail(F, v, "a set");
        for (const auto& e : v.items()) leaf(e);
        return;
    case FK::Prod:
        if (v.kind() != VK::Pair) shape_fail(F, v, "a pair");
        check_shape(F.left(), v.first(), leaf);
        check_shape(F.right(), v.second(), leaf);
        return;
    case FK::Sum:
        if (v.kind() != VK::In) shape_fail(F, v, "an injection");
        check_shape(v.is_left() ? F.left() : F.right(), v.first(), leaf);
        return;
    case FK::Exp: {
        if (v.kind() != VK::Fun) shape_fail(F, v, "a function value");
        std::vector<std::string> want(F.labels());
        std::sort(want.begin(), want.end());
        if (v.keys() != want)
            throw MalformedValue("function value " + v.str() +
                                 " is not total on the exponent set of " + F.str());
        for (const auto& e : v.items()) check_shape(F.left(), e, leaf);
        return;
    }
    case FK::Comp:
        check_shape(F.left(), v,
                    [&](const FValue& w) { check_shape(F.right(), w, leaf); });
        return;
    case FK::Dist:
        if (v.kind() != VK::Dist) shape_fail(F, v, "a distribution");
        for (const auto& e : v.items()) leaf(e);
        return;
    case FK::Multi:
        if (v.kind() != VK::Multi) shape_fail(F, v, "a multiset");
        for (const auto& e : v.items()) leaf(e);
        return;
    }
}

void check_shape(const FunctorExpr& F, const FValue& v, const AtomSet& universe) {
    check_shape(F, v, [&](const FValue& w) {
        if (w.kind() != FValue::Kind::Atom)
            throw MalformedValue("expected an atom at an Id position, got " + w.str());
        if (!universe.count(w.name()))
            throw MalformedValue("atom " + w.name() + " is not in the carrier");
    });
}

FValue map_leaves(const FunctorExpr& F, const FValue& v,
                  const std::function<FValue(const FValue&)>& f) {
    using FK = FunctorExpr::Kind;
    switch (F.kind()) {
    case FK::Id:
        return f(v);
    case FK::Const:
        return v;
    case FK::Pow: {
        std::vector<FValue> elems;
        elems.reserve(v.items().size());
        for (const auto& e : v.items()) elems.push_back(f(e));
        return FValue::set(std::move(elems));
    }
    case FK::Prod:
        return FValue::pair(map_leaves(F.left(), v.first(), f),
                            map_leaves(F.right(), v.second(), f));
    case FK::Sum: {
        FValue payload = map_leaves(v.is_left() ? F.left() : F.right(), v.first(), f);
        return v.is_left() ? FValue::inl(std::move(payload))
                           : FValue::inr(std::move(payload));
    }
    case FK::Exp: {
        std::vector<std::pair<std::string, FValue>> entries;
        for (std::size_t i = 0; i < v.keys().size(); ++i)
            entries.emplace_back(v.keys()[i], map_leaves(F.left(), v.items()[i], f));
        return FValue::fun(std::move(entries));
    }
    case FK::Comp:
        return map_leaves(F.left(), v, [&](const FValue& w) {
            return map_leaves(F.right(), w, f);
        });
    case FK::Dist: {
        std::vector<std::pair<FValue, Rational>> weights;
        for (std::size_t i = 0; i < v.items().size(); ++i)
            weights.emplace_back(f(v.items()[i]), v.weights()[i]);
        return FValue::dist(std::move(weights));
    }
    case FK::Multi: {
        std::vector<std::pair<FValue, std::uint64_t>> counts;
        for (std::size_t i = 0; i < v.items().size(); ++i)
            counts.emplace_back(f(v.items()[i]), v.counts()[i]);
        return FValue::multi(std::move(counts));
    }
    }
    return v;
}

FValue f_map(const FunctorExpr& F, const std::map<Atom, Atom>& f, const FValue& v) {
    if (!F.finitary())
        throw NonFinitaryFunctor("f_map requires a finitary functor, got " + F.str());
    check_shape(F, v, [](const FValue& w) {
        if (w.kind() != FValue::Kind::Atom)
            throw MalformedValue("expected an atom at an Id position, got " + w.str());
    });
    return map_leaves(F, v, [&](const FValue& w) {
        auto it = f.find(w.name());
        if (it == f.end())
            throw PartialMap("map undefined on atom " + w.name());
        return FValue::atom(it->second);
    });
}

FValueSet support(const FunctorExpr& F, const FValue& v) {
    FValueSet out;
    check_shape(F, v, [&](const FValue& w) { out.insert(w); });
    return out;
}

AtomSet base(const FunctorExpr& F, const FValue& v) {
    AtomSet out;
    check_shape(F, v, [&](const FValue& w) {
        if (w.kind() != FValue::Kind::Atom)
            throw MalformedValue("expected an atom at an Id position, got " + w.str());
        out.insert(w.name());
    });
    return out;
}

} // namespace coalg
