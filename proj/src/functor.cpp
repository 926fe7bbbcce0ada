#include "coalg/functor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "coalg/errors.hpp"

namespace coalg {

namespace {

void check_label_set(const std::vector<std::string>& labels, const char* what) {
    if (labels.empty())
        throw ValidationError(std::string(what) + " set must be non-empty");
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty())
            throw ValidationError(std::string(what) + " contains an empty name");
        if (!seen.insert(l).second)
            throw ValidationError(std::string(what) + " contains duplicate '" + l + "'");
    }
}

} // namespace

FunctorExpr FunctorExpr::make(Kind kind, std::vector<std::string> labels,
                              std::vector<FunctorExpr> children) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->labels = std::move(labels);
    node->children = std::move(children);
    return FunctorExpr(std::move(node));
}

FunctorExpr FunctorExpr::constant(std::vector<std::string> labels) {
    check_label_set(labels, "Const label");
    return make(Kind::Const, std::move(labels), {});
}

FunctorExpr FunctorExpr::id() { return make(Kind::Id, {}, {}); }
FunctorExpr FunctorExpr::pow() { return make(Kind::Pow, {}, {}); }
FunctorExpr FunctorExpr::dist() { return make(Kind::Dist, {}, {}); }
FunctorExpr FunctorExpr::multi() { return make(Kind::Multi, {}, {}); }

FunctorExpr FunctorExpr::pow_of(FunctorExpr inner) {
    return comp(pow(), std::move(inner));
}

FunctorExpr FunctorExpr::prod(FunctorExpr left, FunctorExpr right) {
    return make(Kind::Prod, {}, {std::move(left), std::move(right)});
}

FunctorExpr FunctorExpr::sum(FunctorExpr left, FunctorExpr right) {
    return make(Kind::Sum, {}, {std::move(left), std::move(right)});
}

FunctorExpr FunctorExpr::exp(std::vector<std::string> exponents, FunctorExpr body) {
    check_label_set(exponents, "Exp exponent");
    return make(Kind::Exp, std::move(exponents), {std::move(body)});
}

FunctorExpr FunctorExpr::comp(FunctorExpr outer, FunctorExpr inner) {
    // F . Id = Id . F = F
    if (inner.kind() == Kind::Id)
        return outer;
    if (outer.kind() == Kind::Id)
        return inner;
    return make(Kind::Comp, {}, {std::move(outer), std::move(inner)});
}

bool FunctorExpr::finitary() const {
    switch (kind()) {
    case Kind::Dist:
    case Kind::Multi:
        return false;
    case Kind::Const:
    case Kind::Id:
    case Kind::Pow:
        return true;
    case Kind::Exp:
        return left().finitary();
    case Kind::Prod:
    case Kind::Sum:
    case Kind::Comp:
        return left().finitary() && right().finitary();
    }
    return true;
}

namespace {

// Precedence: + < * < . ; Pow/Const/Id/Dist/Multi and F^{..} are atomic.
enum Prec { PrecSum = 0, PrecProd = 1, PrecComp = 2, PrecAtom = 3 };

void print(const FunctorExpr& f, std::ostream& os, int min_prec);

void print_labels(const std::vector<std::string>& labels, std::ostream& os) {
    os << '{';
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) os << ',';
        os << labels[i];
    }
    os << '}';
}

void print_infix(const FunctorExpr& f, std::ostream& os, int min_prec, int prec,
                 const char* op) {
    bool paren = prec < min_prec;
    if (paren) os << '(';
    print(f.left(), os, prec);
    os << ' ' << op << ' ';
    print(f.right(), os, prec + 1);
    if (paren) os << ')';
}

void print(const FunctorExpr& f, std::ostream& os, int min_prec) {
    using Kind = FunctorExpr::Kind;
    switch (f.kind()) {
    case Kind::Const:
        os << "Const";
        print_labels(f.labels(), os);
        return;
    case Kind::Id: os << "Id"; return;
    case Kind::Pow: os << "Pow(Id)"; return;
    case Kind::Dist: os << "Dist"; return;
    case Kind::Multi: os << "Multi"; return;
    case Kind::Exp:
        print(f.left(), os, PrecAtom);
        os << '^';
        print_labels(f.labels(), os);
        return;
    case Kind::Prod: print_infix(f, os, min_prec, PrecProd, "*"); return;
    case Kind::Sum: print_infix(f, os, min_prec, PrecSum, "+"); return;
    case Kind::Comp:
        if (f.left().kind() == Kind::Pow) {
            os << "Pow(";
            print(f.right(), os, PrecSum);
            os << ')';
            return;
        }
        print_infix(f, os, min_prec, PrecComp, ".");
        return;
    }
}

} // namespace

std::string FunctorExpr::str() const {
    std::ostringstream os;
    print(*this, os, PrecSum);
    return os.str();
}

std::strong_ordering FunctorExpr::operator<=>(const FunctorExpr& other) const {
    if (node_ == other.node_)
        return std::strong_ordering::equal;
    if (auto c = kind() <=> other.kind(); c != 0)
        return c;
    if (auto c = node_->labels <=> other.node_->labels; c != 0)
        return c;
    if (auto c = node_->children.size() <=> other.node_->children.size(); c != 0)
        return c;
    for (std::size_t i = 0; i < node_->children.size(); ++i)
        if (auto c = node_->children[i] <=> other.node_->children[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

bool FunctorExpr::operator==(const FunctorExpr& other) const {
    return (*this <=> other) == 0;
}

} // namespace coalg
