#include "coalg/enumerate.hpp"

#include <cstdlib>
#include <string>

#include "coalg/errors.hpp"

namespace coalg {

std::uint64_t default_cap() {
    static const std::uint64_t cap = [] {
        if (const char* env = std::getenv("COALG_BLOWUP_CAP")) {
            char* end = nullptr;
            unsigned long long parsed = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && parsed > 0)
                return static_cast<std::uint64_t>(parsed);
        }
        return std::uint64_t{1} << 20;
    }();
    return cap;
}

namespace {

[[noreturn]] void blowup(const FunctorExpr& F, std::uint64_t n, std::uint64_t cap) {
    throw BlowupGuard("enumeration of " + F.str() + " over a universe of size " +
                          std::to_string(n) + " exceeds the cap of " +
                          std::to_string(cap) + " values",
                      cap);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t lim) {
    if (a != 0 && b > lim / a)
        return lim + 1;
    return a * b;
}

std::uint64_t checked_pow(std::uint64_t b, std::uint64_t e, std::uint64_t lim) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        r = checked_mul(r, b, lim);
        if (r > lim)
            return lim + 1;
    }
    return r;
}

std::uint64_t count_rec(const FunctorExpr& F, std::uint64_t n, std::uint64_t cap) {
    using Kind = FunctorExpr::Kind;
    switch (F.kind()) {
    case Kind::Const: return F.labels().size();
    case Kind::Id: return n;
    case Kind::Pow:
        if (n >= 64) return cap + 1;
        return checked_pow(2, n, cap);
    case Kind::Prod:
        return checked_mul(count_rec(F.left(), n, cap), count_rec(F.right(), n, cap), cap);
    case Kind::Sum: {
        std::uint64_t l = count_rec(F.left(), n, cap);
        std::uint64_t r = count_rec(F.right(), n, cap);
        return (l > cap || r > cap || l + r < l) ? cap + 1 : l + r;
    }
    case Kind::Exp:
        return checked_pow(count_rec(F.left(), n, cap), F.labels().size(), cap);
    case Kind::Comp: {
        std::uint64_t inner = count_rec(F.right(), n, cap);
        if (inner > cap) return cap + 1;
        return count_rec(F.left(), inner, cap);
    }
    case Kind::Dist:
    case Kind::Multi:
        throw NonFinitaryFunctor("cannot enumerate " + F.str());
    }
    return 0;
}

std::vector<FValue> enum_rec(const FunctorExpr& F, const std::vector<FValue>& universe,
                             std::uint64_t cap) {
    using Kind = FunctorExpr::Kind;
    switch (F.kind()) {
    case Kind::Const: {
        std::vector<FValue> out;
        for (const auto& l : F.labels()) out.push_back(FValue::label(l));
        return out;
    }
    case Kind::Id:
        return universe;
    case Kind::Pow: {
        std::vector<FValue> out;
        for (auto& sub : subsets_of(universe, universe.size()))
            out.push_back(FValue::set(std::move(sub)));
        std::sort(out.begin(), out.end());
        return out;
    }
    case Kind::Prod: {
        auto ls = enum_rec(F.left(), universe, cap);
        auto rs = enum_rec(F.right(), universe, cap);
        std::vector<FValue> out;
        out.reserve(ls.size() * rs.size());
        for (const auto& l : ls)
            for (const auto& r : rs)
                out.push_back(FValue::pair(l, r));
        return out;
    }
    case Kind::Sum: {
        std::vector<FValue> out;
        for (const auto& l : enum_rec(F.left(), universe, cap))
            out.push_back(FValue::inl(l));
        for (const auto& r : enum_rec(F.right(), universe, cap))
            out.push_back(FValue::inr(r));
        return out;
    }
    case Kind::Exp: {
        auto bodies = enum_rec(F.left(), universe, cap);
        const auto& keys = F.labels();
        std::vector<FValue> out;
        std::vector<std::size_t> pick(keys.size(), 0);
        if (bodies.empty())
            return out;
        for (;;) {
            std::vector<std::pair<std::string, FValue>> entries;
            for (std::size_t i = 0; i < keys.size(); ++i)
                entries.emplace_back(keys[i], bodies[pick[i]]);
            out.push_back(FValue::fun(std::move(entries)));
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == bodies.size())
                pick[i++] = 0;
            if (i == pick.size())
                break;
        }
        return out;
    }
    case Kind::Comp:
        return enum_rec(F.left(), enum_rec(F.right(), universe, cap), cap);
    case Kind::Dist:
    case Kind::Multi:
        throw NonFinitaryFunctor("cannot enumerate " + F.str());
    }
    return {};
}

} // namespace

std::uint64_t count_f(const FunctorExpr& F, std::uint64_t n, std::uint64_t cap) {
    std::uint64_t c = count_rec(F, n, cap);
    if (c > cap)
        blowup(F, n, cap);
    return c;
}

std::vector<FValue> enumerate_f(const FunctorExpr& F,
                                const std::vector<FValue>& universe,
                                const EnumOptions& opts) {
    if (!F.finitary())
        throw NonFinitaryFunctor("cannot enumerate non-finitary " + F.str());
    count_f(F, universe.size(), opts.cap);
    auto out = enum_rec(F, universe, opts.cap);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<FValue> enumerate_f(const FunctorExpr& F, const AtomSet& carrier,
                                const EnumOptions& opts) {
    std::vector<FValue> universe;
    universe.reserve(carrier.size());
    for (const auto& a : carrier) universe.push_back(FValue::atom(a));
    return enumerate_f(F, universe, opts);
}

std::vector<std::vector<FValue>> subsets_of(const std::vector<FValue>& universe,
                                            std::size_t max_size) {
    std::vector<std::vector<FValue>> out{{}};
    for (const auto& v : universe) {
        std::size_t n = out.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (out[i].size() >= max_size)
                continue;
            auto next = out[i];
            next.push_back(v);
            out.push_back(std::move(next));
        }
    }
    return out;
}

} // namespace coalg
