#include "coalg/lifting.hpp"

#include <deque>
#include <numeric>

#include "coalg/errors.hpp"

namespace coalg {

namespace {

bool egli_milner(const std::vector<FValue>& xs, const std::vector<FValue>& ys,
                 const std::function<bool(const FValue&, const FValue&)>& rel) {
    for (const auto& x : xs) {
        bool covered = false;
        for (const auto& y : ys)
            if (rel(x, y)) { covered = true; break; }
        if (!covered)
            return false;
    }
    for (const auto& y : ys) {
        bool covered = false;
        for (const auto& x : xs)
            if (rel(x, y)) { covered = true; break; }
        if (!covered)
            return false;
    }
    return true;
}

} // namespace

bool coupling_exists(const std::vector<std::pair<FValue, Rational>>& rows,
                     const std::vector<std::pair<FValue, Rational>>& cols,
                     const LeafRel& rel) {
    Rational row_total = std::accumulate(
        rows.begin(), rows.end(), Rational(0),
        [](Rational acc, const auto& p) { return acc + p.second; });
    Rational col_total = std::accumulate(
        cols.begin(), cols.end(), Rational(0),
        [](Rational acc, const auto& p) { return acc + p.second; });
    if (row_total != col_total)
        return false;
    if (row_total == Rational(0))
        return true;

    // Edmonds-Karp on source -> rows -> cols -> sink with exact rationals.
    std::size_t n = rows.size() + cols.size() + 2;
    std::size_t src = n - 2, snk = n - 1;
    std::vector<std::vector<Rational>> cap(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < rows.size(); ++i)
        cap[src][i] = rows[i].second;
    for (std::size_t j = 0; j < cols.size(); ++j)
        cap[rows.size() + j][snk] = cols[j].second;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (rel(rows[i].first, cols[j].first))
                cap[i][rows.size() + j] = row_total;

    Rational flow(0);
    for (;;) {
        std::vector<std::size_t> parent(n, n);
        std::deque<std::size_t> queue{src};
        parent[src] = src;
        while (!queue.empty() && parent[snk] == n) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v = 0; v < n; ++v)
                if (parent[v] == n && cap[u][v] > Rational(0)) {
                    parent[v] = u;
                    queue.push_back(v);
                }
        }
        if (parent[snk] == n)
            break;
        Rational bottleneck = row_total;
        for (std::size_t v = snk; v != src; v = parent[v])
            bottleneck = std::min(bottleneck, cap[parent[v]][v]);
        for (std::size_t v = snk; v != src; v = parent[v]) {
            cap[parent[v]][v] -= bottleneck;
            cap[v][parent[v]] += bottleneck;
        }
        flow += bottleneck;
    }
    return flow == row_total;
}

bool lift_member_gen(const FunctorExpr& F, const LeafRel& rel,
                     const FValue& phi, const FValue& psi) {
    using FK = FunctorExpr::Kind;
    switch (F.kind()) {
    case FK::Id:
        return rel(phi, psi);
    case FK::Const:
        return phi.name() == psi.name();
    case FK::Pow:
        return egli_milner(phi.items(), psi.items(), rel);
    case FK::Prod:
        return lift_member_gen(F.left(), rel, phi.first(), psi.first()) &&
               lift_member_gen(F.right(), rel, phi.second(), psi.second());
    case FK::Sum:
        if (phi.is_left() != psi.is_left())
            return false;
        return lift_member_gen(phi.is_left() ? F.left() : F.right(), rel,
                               phi.first(), psi.first());
    case FK::Exp: {
        for (std::size_t i = 0; i < phi.items().size(); ++i)
            if (!lift_member_gen(F.left(), rel, phi.items()[i], psi.items()[i]))
                return false;
        return true;
    }
    case FK::Comp:
        return lift_member_gen(F.left(),
                               [&](const FValue& u, const FValue& v) {
                                   return lift_member_gen(F.right(), rel, u, v);
                               },
                               phi, psi);
    case FK::Dist: {
        std::vector<std::pair<FValue, Rational>> rows, cols;
        for (std::size_t i = 0; i < phi.items().size(); ++i)
            rows.emplace_back(phi.items()[i], phi.weights()[i]);
        for (std::size_t i = 0; i < psi.items().size(); ++i)
            cols.emplace_back(psi.items()[i], psi.weights()[i]);
        return coupling_exists(rows, cols, rel);
    }
    case FK::Multi: {
        std::vector<std::pair<FValue, Rational>> rows, cols;
        for (std::size_t i = 0; i < phi.items().size(); ++i)
            rows.emplace_back(phi.items()[i],
                              Rational(static_cast<long long>(phi.counts()[i])));
        for (std::size_t i = 0; i < psi.items().size(); ++i)
            cols.emplace_back(psi.items()[i],
                              Rational(static_cast<long long>(psi.counts()[i])));
        return coupling_exists(rows, cols, rel);
    }
    }
    return false;
}

bool lift_member(const FunctorExpr& F, const Relation& Z,
                 const FValue& phi, const FValue& psi) {
    check_shape(F, phi, [&](const FValue& w) {
        if (w.kind() != FValue::Kind::Atom)
            throw MalformedValue("expected an atom at an Id position, got " + w.str());
        if (!Z.source.count(w.name()))
            throw UniverseMismatch("atom " + w.name() +
                                   " lies outside the source universe");
    });
    check_shape(F, psi, [&](const FValue& w) {
        if (w.kind() != FValue::Kind::Atom)
            throw MalformedValue("expected an atom at an Id position, got " + w.str());
        if (!Z.target.count(w.name()))
            throw UniverseMismatch("atom " + w.name() +
                                   " lies outside the target universe");
    });
    return lift_member_gen(F,
                           [&](const FValue& u, const FValue& v) {
                               return Z.contains(u.name(), v.name());
                           },
                           phi, psi);
}

bool lift_member_oracle(const FunctorExpr& F, const Relation& Z,
                        const FValue& phi, const FValue& psi,
                        const EnumOptions& opts) {
    if (!F.finitary())
        throw NonFinitaryFunctor("the lifting oracle requires a finitary functor");
    std::vector<FValue> pair_universe;
    for (const auto& [a, b] : Z.pairs)
        pair_universe.push_back(FValue::pair(FValue::atom(a), FValue::atom(b)));
    auto project = [&](const FValue& witness, bool right) {
        return map_leaves(F, witness, [&](const FValue& p) {
            return right ? p.second() : p.first();
        });
    };
    for (const auto& witness : enumerate_f(F, pair_universe, opts))
        if (project(witness, false) == phi && project(witness, true) == psi)
            return true;
    return false;
}

} // namespace coalg
