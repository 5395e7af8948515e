#ifndef HOMSUM_SPACE_EXPR_HPP
#define HOMSUM_SPACE_EXPR_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "homsum/chain_complex.hpp"
#include "homsum/graded_group.hpp"

namespace homsum {

/// Closed-manifold metadata carried by the manifold-valued expression nodes.
struct ManifoldInfo {
    int dimension = 0;
    bool simply_connected = false;
};

/// Expression tree over the space catalog. Immutable; copies share nodes.
///
/// Atoms: spheres S^n, complex projective spaces CP^n, Moore spaces
/// S^{n-1} u_k e^n, and connected sums of r copies of S^3 x S^3.
/// Constructors: product, wedge, smash, suspension, connected sum,
/// punctured manifold (chart complement), and the half-smash
/// (b x f)/(pt x f).
class SpaceExpr {
public:
    enum class Kind {
        sphere,
        cp,
        moore,
        sigma_sigma,
        product,
        wedge,
        smash,
        suspension,
        connected_sum,
        punctured,
        half_smash,
    };

    static SpaceExpr sphere(int n);
    static SpaceExpr cp(int n);
    static SpaceExpr moore(int n, Int k);
    static SpaceExpr sigma_sigma(int r);
    static SpaceExpr product(SpaceExpr left, SpaceExpr right);
    static SpaceExpr wedge(SpaceExpr left, SpaceExpr right);
    static SpaceExpr smash(SpaceExpr left, SpaceExpr right);
    static SpaceExpr suspension(SpaceExpr child);
    /// Children must be closed simply connected manifolds of equal dimension.
    static SpaceExpr connected_sum(SpaceExpr left, SpaceExpr right);
    /// Child must be a closed simply connected manifold.
    static SpaceExpr punctured(SpaceExpr child);
    static SpaceExpr half_smash(SpaceExpr base, SpaceExpr fiber);

    Kind kind() const { return node_->kind; }
    /// n for sphere/cp/moore, r for sigma_sigma.
    int param() const { return node_->param; }
    /// k for moore.
    const Int& order() const { return node_->order; }
    std::size_t child_count() const { return node_->children.size(); }
    const SpaceExpr& child(std::size_t i) const { return node_->children[i]; }

    /// Set only on closed-manifold nodes; product and connected sum
    /// propagate it, the homotopy constructors do not.
    const std::optional<ManifoldInfo>& manifold_info() const { return node_->manifold; }
    bool is_closed_manifold() const { return node_->manifold.has_value(); }
    bool is_simply_connected_manifold() const
    {
        return node_->manifold && node_->manifold->simply_connected;
    }

    bool operator==(const SpaceExpr& other) const;
    bool operator!=(const SpaceExpr& other) const { return !(*this == other); }

private:
    struct Node {
        Kind kind;
        int param = 0;
        Int order = 0;
        std::vector<SpaceExpr> children;
        std::optional<ManifoldInfo> manifold;
    };

    explicit SpaceExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static SpaceExpr make(Node node);

    std::shared_ptr<const Node> node_;
};

/// Thrown by chain_model() for nodes that only have a homology formula
/// (punctured manifolds and half-smashes).
class ChainModelUnsupported : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Unreduced integral homology of the space denoted by the expression.
GradedGroup evaluate(const SpaceExpr& e);

/// True when the expression lies in the fragment that has a cellular model.
bool has_chain_model(const SpaceExpr& e);

/// Cellular chain complex whose homology equals evaluate(e). Throws
/// ChainModelUnsupported outside the modelled fragment.
ChainComplex chain_model(const SpaceExpr& e);

/// H_*(X x Y) from the factors' homology (Kunneth, with Tor terms).
GradedGroup kunneth_product(const GradedGroup& x, const GradedGroup& y);

/// Reduced H_* of a smash from the factors' reduced homology; inputs and
/// output omit degree 0.
GradedGroup kunneth_reduced(const GradedGroup& x_reduced, const GradedGroup& y_reduced);

}  // namespace homsum

#endif
