#include "coalg/redistribution.hpp"

#include "coalg/errors.hpp"
#include "coalg/lifting.hpp"

namespace coalg {

namespace {

// u a carrier atom, v a set-atom: membership behind the functor.
bool in_set_atom(const FValue& u, const FValue& v) {
    if (v.kind() != FValue::Kind::Set)
        throw MalformedValue("expected a set-atom, got " + v.str());
    return v.contains(u);
}

} // namespace

bool is_redistribution(const FunctorExpr& F, const FValue& xi,
                       const std::vector<FValue>& phis) {
    check_shape(F, xi, [](const FValue& w) {
        if (w.kind() != FValue::Kind::Set)
            throw MalformedValue("redistribution leaves must be set-atoms, got " +
                                 w.str());
    });
    for (const auto& phi : phis)
        if (!lift_member_gen(F, in_set_atom, phi, xi))
            return false;
    return true;
}

std::vector<FValue> enumerate_redistributions(const FunctorExpr& F,
                                              const std::vector<FValue>& phis,
                                              const AtomSet& carrier,
                                              std::size_t base_cap,
                                              const EnumOptions& opts) {
    std::vector<FValue> atoms;
    for (const auto& a : carrier) atoms.push_back(FValue::atom(a));
    std::vector<FValue> set_universe;
    for (auto& sub : subsets_of(atoms, base_cap))
        set_universe.push_back(FValue::set(std::move(sub)));
    std::sort(set_universe.begin(), set_universe.end());

    std::vector<FValue> out;
    for (const auto& xi : enumerate_f(F, set_universe, opts))
        if (is_redistribution(F, xi, phis))
            out.push_back(xi);
    return out;
}

} // namespace coalg
