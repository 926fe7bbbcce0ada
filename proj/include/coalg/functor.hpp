#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

namespace coalg {

/// A term of the functor grammar. Immutable; cheap to copy.
///
/// The grammar:  Const{c1,..} | Id | Pow | F * G | F + G | F^{d1,..} | F . G
/// | Dist | Multi.  `Pow(F)` in the textual syntax is sugar for `Pow . F`.
class FunctorExpr {
public:
    enum class Kind { Const, Id, Pow, Prod, Sum, Exp, Comp, Dist, Multi };

    static FunctorExpr constant(std::vector<std::string> labels);
    static FunctorExpr id();
    static FunctorExpr pow();
    static FunctorExpr pow_of(FunctorExpr inner);
    static FunctorExpr prod(FunctorExpr left, FunctorExpr right);
    static FunctorExpr sum(FunctorExpr left, FunctorExpr right);
    static FunctorExpr exp(std::vector<std::string> exponents, FunctorExpr body);
    static FunctorExpr comp(FunctorExpr outer, FunctorExpr inner);
    static FunctorExpr dist();
    static FunctorExpr multi();

    Kind kind() const { return node_->kind; }

    /// Const labels or Exp exponents, in declared order.
    const std::vector<std::string>& labels() const { return node_->labels; }

    /// Prod/Sum left component, Comp outer, Exp body.
    const FunctorExpr& left() const { return node_->children[0]; }
    /// Prod/Sum right component, Comp inner.
    const FunctorExpr& right() const { return node_->children[1]; }

    /// True iff the term contains no Dist/Multi node.
    bool finitary() const;

    std::string str() const;

    bool operator==(const FunctorExpr& other) const;
    std::strong_ordering operator<=>(const FunctorExpr& other) const;

private:
    struct Node {
        Kind kind;
        std::vector<std::string> labels;
        std::vector<FunctorExpr> children;
    };

    explicit FunctorExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static FunctorExpr make(Kind kind, std::vector<std::string> labels,
                            std::vector<FunctorExpr> children);

    std::shared_ptr<const Node> node_;
};

} // namespace coalg
