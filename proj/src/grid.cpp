#include "acmp/grid.hpp"

#include "acmp/errors.hpp"

#include <cmath>
#include <deque>
#include <string>

namespace acmp {

Domain::Domain(int dim, double h, std::array<int, 2> shape, std::array<double, 2> origin,
               std::vector<NodeClass> classes)
    : dim_(dim)
    , h_(h)
    , cell_volume_(dim == 1 ? h : h * h)
    , shape_(shape)
    , origin_(origin)
    , classes_(std::move(classes))
{
    for (int k = 0; k < num_nodes(); ++k) {
        switch (node_class(k)) {
        case NodeClass::interior:
            interior_.push_back(k);
            in_set_.push_back(k);
            break;
        case NodeClass::boundary:
            boundary_.push_back(k);
            in_set_.push_back(k);
            break;
        case NodeClass::outside:
            break;
        }
    }
    for (int j = 0; j < ny(); ++j) {
        for (int i = 0; i + 1 < nx(); ++i) {
            const int k = index(i, j);
            if (in_set(k) && in_set(k + 1)) {
                links_.emplace_back(k, k + 1);
            }
        }
    }
    if (dim_ == 2) {
        for (int j = 0; j + 1 < ny(); ++j) {
            for (int i = 0; i < nx(); ++i) {
                const int k = index(i, j);
                const int up = index(i, j + 1);
                if (in_set(k) && in_set(up)) {
                    links_.emplace_back(k, up);
                }
            }
        }
    }
}

Eigen::VectorXd Domain::position(int k) const
{
    const auto [i, j] = grid_index(k);
    Eigen::VectorXd x(dim_);
    x[0] = origin_[0] + h_ * i;
    if (dim_ == 2) {
        x[1] = origin_[1] + h_ * j;
    }
    return x;
}

std::vector<int> Domain::neighbors(int k) const
{
    std::vector<int> out;
    const auto [i, j] = grid_index(k);
    auto consider = [&](int ii, int jj) {
        if (ii >= 0 && ii < nx() && jj >= 0 && jj < ny() && in_set(index(ii, jj))) {
            out.push_back(index(ii, jj));
        }
    };
    consider(i - 1, j);
    consider(i + 1, j);
    if (dim_ == 2) {
        consider(i, j - 1);
        consider(i, j + 1);
    }
    return out;
}

Eigen::VectorXd Domain::center() const
{
    Eigen::VectorXd c(dim_);
    c[0] = origin_[0] + 0.5 * h_ * (nx() - 1);
    if (dim_ == 2) {
        c[1] = origin_[1] + 0.5 * h_ * (ny() - 1);
    }
    return c;
}

bool Domain::operator==(const Domain& other) const
{
    return dim_ == other.dim_ && h_ == other.h_ && shape_ == other.shape_ && origin_ == other.origin_
        && classes_ == other.classes_;
}

DomainPtr build_box_domain(int n, std::span<const double> extents, double h)
{
    if (n != 1 && n != 2) {
        throw InvalidArgument("build_box_domain: dimension must be 1 or 2");
    }
    if (!(h > 0.0)) {
        throw InvalidArgument("build_box_domain: h must be positive");
    }
    if (static_cast<int>(extents.size()) != n) {
        throw InvalidArgument("build_box_domain: need one extent per axis");
    }
    std::array<int, 2> shape{1, 1};
    for (int axis = 0; axis < n; ++axis) {
        if (!(extents[axis] > 0.0)) {
            throw InvalidArgument("build_box_domain: extents must be positive");
        }
        const int count = static_cast<int>(std::floor(extents[axis] / h + 1e-9)) + 1;
        if (count < 3) {
            throw InvalidArgument("build_box_domain: fewer than 3 nodes along axis " + std::to_string(axis));
        }
        shape[axis] = count;
    }
    std::vector<NodeClass> classes(static_cast<size_t>(shape[0] * shape[1]), NodeClass::interior);
    for (int j = 0; j < shape[1]; ++j) {
        for (int i = 0; i < shape[0]; ++i) {
            const bool edge = i == 0 || i == shape[0] - 1 || (n == 2 && (j == 0 || j == shape[1] - 1));
            if (edge) {
                classes[static_cast<size_t>(i + shape[0] * j)] = NodeClass::boundary;
            }
        }
    }
    return DomainPtr(new Domain(n, h, shape, {0.0, 0.0}, std::move(classes)));
}

DomainPtr build_masked_domain(const Mask& mask, double h, std::array<double, 2> origin)
{
    if (mask.nx < 1 || mask.ny < 1 || mask.in_set.size() != static_cast<size_t>(mask.nx * mask.ny)) {
        throw InvalidArgument("build_masked_domain: mask is empty or malformed");
    }
    if (!(h > 0.0)) {
        throw InvalidArgument("build_masked_domain: h must be positive");
    }
    const int n = mask.ny == 1 ? 1 : 2;
    const int nx = mask.nx;
    const int ny = mask.ny;

    auto member = [&](int i, int j) { return i >= 0 && i < nx && j >= 0 && j < ny && mask.at(i, j); };

    std::vector<NodeClass> classes(static_cast<size_t>(nx * ny), NodeClass::outside);
    int n_interior = 0;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            if (!mask.at(i, j)) {
                continue;
            }
            bool closed = member(i - 1, j) && member(i + 1, j);
            if (n == 2) {
                closed = closed && member(i, j - 1) && member(i, j + 1);
            }
            classes[static_cast<size_t>(i + nx * j)] = closed ? NodeClass::interior : NodeClass::boundary;
            n_interior += closed ? 1 : 0;
        }
    }
    if (n_interior == 0) {
        throw InvalidArgument("build_masked_domain: mask has no interior nodes");
    }

    // flood fill over interior nodes
    std::vector<std::uint8_t> seen(classes.size(), 0);
    std::deque<int> queue;
    for (size_t k = 0; k < classes.size(); ++k) {
        if (classes[k] == NodeClass::interior) {
            queue.push_back(static_cast<int>(k));
            seen[k] = 1;
            break;
        }
    }
    int reached = 0;
    while (!queue.empty()) {
        const int k = queue.front();
        queue.pop_front();
        ++reached;
        const int i = k % nx;
        const int j = k / nx;
        const std::array<std::array<int, 2>, 4> steps{{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};
        for (const auto& [di, dj] : steps) {
            const int ii = i + di;
            const int jj = j + dj;
            if (ii < 0 || ii >= nx || jj < 0 || jj >= ny) {
                continue;
            }
            const auto kk = static_cast<size_t>(ii + nx * jj);
            if (classes[kk] == NodeClass::interior && !seen[kk]) {
                seen[kk] = 1;
                queue.push_back(static_cast<int>(kk));
            }
        }
    }
    if (reached != n_interior) {
        throw DomainNotConnected("build_masked_domain: interior has more than one connected component");
    }
    return DomainPtr(new Domain(n, h, {nx, ny}, origin, std::move(classes)));
}

VectorField::VectorField(DomainPtr d, int m_, double fill)
    : domain(std::move(d))
    , m(m_)
    , values(Eigen::MatrixXd::Zero(m_, domain->num_nodes()))
{
    for (int k : domain->in_set_nodes()) {
        values.col(k).setConstant(fill);
    }
}

VectorField::VectorField(DomainPtr d, const Eigen::VectorXd& fill)
    : domain(std::move(d))
    , m(static_cast<int>(fill.size()))
    , values(Eigen::MatrixXd::Zero(fill.size(), domain->num_nodes()))
{
    for (int k : domain->in_set_nodes()) {
        values.col(k) = fill;
    }
}

bool VectorField::is_finite() const
{
    for (int k : domain->in_set_nodes()) {
        if (!values.col(k).allFinite()) {
            return false;
        }
    }
    return true;
}

ScalarField::ScalarField(DomainPtr d, double fill)
    : domain(std::move(d))
    , values(Eigen::VectorXd::Zero(domain->num_nodes()))
{
    for (int k : domain->in_set_nodes()) {
        values[k] = fill;
    }
}

VectorField set_boundary(const VectorField& field, const BoundaryMap& g)
{
    VectorField out = field;
    for (int k : field.domain->boundary_nodes()) {
        const Eigen::VectorXd value = g(field.domain->position(k));
        if (value.size() != field.m) {
            throw InvalidArgument("set_boundary: boundary map returns the wrong dimension");
        }
        out.values.col(k) = value;
    }
    return out;
}

double boundary_radius(const VectorField& field, const Eigen::VectorXd& a)
{
    double radius = 0.0;
    for (int k : field.domain->boundary_nodes()) {
        radius = std::max(radius, (field.values.col(k) - a).norm());
    }
    return radius;
}

std::pair<double, int> interior_radius(const VectorField& field, const Eigen::VectorXd& a)
{
    double radius = 0.0;
    int arg = field.domain->interior_nodes().front();
    for (int k : field.domain->interior_nodes()) {
        const double d = (field.values.col(k) - a).norm();
        if (d > radius) {
            radius = d;
            arg = k;
        }
    }
    return {radius, arg};
}

bool same_domain(const VectorField& u, const VectorField& v)
{
    return u.m == v.m && (u.domain == v.domain || *u.domain == *v.domain);
}

} // namespace acmp
