#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace acmp {

enum class NodeClass : std::uint8_t { outside, interior, boundary };

/// In-set flags on a rectangular array, x fastest. `ny == 1` describes a 1-d domain.
struct Mask {
    int nx = 0;
    int ny = 1;
    std::vector<std::uint8_t> in_set;

    bool at(int i, int j) const { return in_set[static_cast<size_t>(i + nx * j)] != 0; }
};

/**
 * Node-centred uniform grid standing in for a bounded open set.
 *
 * Nodes are indexed `i + nx * j`. In-set nodes are either interior or
 * boundary; every interior node has all 2n axis neighbours in the set.
 * Links are the pairs of axis-adjacent in-set nodes, stored with the lower
 * index first, x-links before y-links. All assembly loops walk these lists
 * in order so sums are reproducible.
 */
class Domain {
public:
    int dim() const { return dim_; }
    double h() const { return h_; }
    int nx() const { return shape_[0]; }
    int ny() const { return shape_[1]; }
    std::array<int, 2> shape() const { return shape_; }
    int num_nodes() const { return shape_[0] * shape_[1]; }

    NodeClass node_class(int k) const { return classes_[static_cast<size_t>(k)]; }
    bool in_set(int k) const { return node_class(k) != NodeClass::outside; }
    bool is_interior(int k) const { return node_class(k) == NodeClass::interior; }
    bool is_boundary(int k) const { return node_class(k) == NodeClass::boundary; }

    const std::vector<int>& in_set_nodes() const { return in_set_; }
    const std::vector<int>& interior_nodes() const { return interior_; }
    const std::vector<int>& boundary_nodes() const { return boundary_; }
    const std::vector<std::pair<int, int>>& links() const { return links_; }

    int index(int i, int j = 0) const { return i + shape_[0] * j; }
    std::array<int, 2> grid_index(int k) const { return {k % shape_[0], k / shape_[0]}; }

    /// Coordinates of node k (length dim()).
    Eigen::VectorXd position(int k) const;

    /// Quadrature weight: 1 for interior nodes, 1/2 for boundary nodes.
    double node_weight(int k) const { return is_interior(k) ? 1.0 : (is_boundary(k) ? 0.5 : 0.0); }

    /// h^dim
    double cell_volume() const { return cell_volume_; }

    /// In-set axis neighbours of k.
    std::vector<int> neighbors(int k) const;

    Eigen::VectorXd center() const;

    bool operator==(const Domain& other) const;

    friend std::shared_ptr<const Domain> build_box_domain(int, std::span<const double>, double);
    friend std::shared_ptr<const Domain> build_masked_domain(const Mask&, double, std::array<double, 2>);

private:
    Domain(int dim, double h, std::array<int, 2> shape, std::array<double, 2> origin,
           std::vector<NodeClass> classes);

    int dim_;
    double h_;
    double cell_volume_;
    std::array<int, 2> shape_;
    std::array<double, 2> origin_;
    std::vector<NodeClass> classes_;
    std::vector<int> in_set_;
    std::vector<int> interior_;
    std::vector<int> boundary_;
    std::vector<std::pair<int, int>> links_;
};

using DomainPtr = std::shared_ptr<const Domain>;

/// Interval (n = 1) or rectangle (n = 2) [0, extent_0] x [0, extent_1].
DomainPtr build_box_domain(int n, std::span<const double> extents, double h);

/// Throws DomainNotConnected when the interior splits, InvalidArgument when it is empty.
DomainPtr build_masked_domain(const Mask& mask, double h, std::array<double, 2> origin = {0.0, 0.0});

/// Values in R^m on every grid node; entries on outside nodes are kept at zero.
struct VectorField {
    DomainPtr domain;
    int m = 0;
    Eigen::MatrixXd values; // m x num_nodes, column k is node k

    VectorField() = default;
    VectorField(DomainPtr d, int m_, double fill = 0.0);
    VectorField(DomainPtr d, const Eigen::VectorXd& fill);

    auto node(int k) { return values.col(k); }
    auto node(int k) const { return values.col(k); }
    std::span<const double> node_span(int k) const
    {
        return {values.data() + static_cast<size_t>(m) * static_cast<size_t>(k), static_cast<size_t>(m)};
    }
    std::span<double> node_span(int k)
    {
        return {values.data() + static_cast<size_t>(m) * static_cast<size_t>(k), static_cast<size_t>(m)};
    }

    /// True when every in-set value is finite.
    bool is_finite() const;
};

struct ScalarField {
    DomainPtr domain;
    Eigen::VectorXd values;

    ScalarField() = default;
    explicit ScalarField(DomainPtr d, double fill = 0.0);
};

using BoundaryMap = std::function<Eigen::VectorXd(const Eigen::VectorXd& x)>;

/// Copy of `field` with boundary nodes replaced by g(x); interior untouched.
VectorField set_boundary(const VectorField& field, const BoundaryMap& g);

/// max over boundary nodes of |field - a|
double boundary_radius(const VectorField& field, const Eigen::VectorXd& a);

/// max over interior nodes of |field - a|, with the arg max node.
std::pair<double, int> interior_radius(const VectorField& field, const Eigen::VectorXd& a);

bool same_domain(const VectorField& u, const VectorField& v);

} // namespace acmp
