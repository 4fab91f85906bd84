#ifndef QFLOYD_MATRIX_HPP
#define QFLOYD_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qfloyd/ext_distance.hpp"
#include "qfloyd/graph.hpp"

namespace qfloyd {

// Dense row-major V x V matrix.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    SquareMatrix(std::size_t size, T fill) : size_(size), cells_(size * size, fill) {}

    std::size_t size() const noexcept { return size_; }

    T& operator()(std::size_t i, std::size_t j) noexcept { return cells_[i * size_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const noexcept { return cells_[i * size_ + j]; }

    std::span<T> row(std::size_t i) noexcept { return {cells_.data() + i * size_, size_}; }
    std::span<const T> row(std::size_t i) const noexcept { return {cells_.data() + i * size_, size_}; }

    std::span<const T> cells() const noexcept { return cells_; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t size_ = 0;
    std::vector<T> cells_;
};

using DistanceMatrix = SquareMatrix<ExtDistance>;

// Records how the best known i -> j path was formed: no path, the direct
// edge, or a split through an intermediate pivot (pred[i][j] = k).
class Pred {
public:
    enum class Kind : std::uint8_t { NoPath, Direct, Via };

    constexpr Pred() noexcept = default;
    static constexpr Pred no_path() noexcept { return Pred(Kind::NoPath, 0); }
    static constexpr Pred direct() noexcept { return Pred(Kind::Direct, 0); }
    static constexpr Pred via(NodeId k) noexcept { return Pred(Kind::Via, k); }

    constexpr Kind kind() const noexcept { return kind_; }
    constexpr bool is_via() const noexcept { return kind_ == Kind::Via; }
    // Pivot node; only meaningful when is_via().
    constexpr NodeId node() const noexcept { return node_; }

    friend constexpr bool operator==(Pred, Pred) noexcept = default;

private:
    constexpr Pred(Kind kind, NodeId node) noexcept : kind_(kind), node_(node) {}

    Kind kind_ = Kind::NoPath;
    NodeId node_ = 0;
};

using PredecessorMatrix = SquareMatrix<Pred>;

std::string to_string(Pred p);
std::ostream& operator<<(std::ostream& os, Pred p);

struct ApspResult {
    DistanceMatrix dist;
    PredecessorMatrix pred;
};

// dist[i][i] = 0, dist[i][j] = w(i,j) for edges, Infinity otherwise.
// pred is Direct on the diagonal and on edges, NoPath elsewhere.
ApspResult init_distance(const Graph& graph);

// Raised when a pred/dist pair cannot describe a set of shortest paths.
class InconsistentResult : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Expands pred recursively (Via(k) -> path(i,k) + path(k,j)) into the node
// sequence i, ..., j. Returns nullopt iff dist[i][j] is Infinity. Throws
// InconsistentResult on a cycle during expansion, a Direct entry without a
// matching edge, or a path whose weight differs from dist[i][j].
std::optional<std::vector<NodeId>> reconstruct_path(const Graph& graph,
                                                    const PredecessorMatrix& pred,
                                                    const DistanceMatrix& dist, NodeId i,
                                                    NodeId j);

// Sum of edge weights along `path`; throws InconsistentResult when a hop is
// not an edge of `graph`.
ExtDistance path_weight(const Graph& graph, std::span<const NodeId> path);

// One row per line, entries separated by a single space, Infinity as "INF".
std::string format_matrix(const DistanceMatrix& dist);

// First row-major cell where the matrices differ, if any. Sizes must match.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const DistanceMatrix& a,
                                                                    const DistanceMatrix& b);

}  // namespace qfloyd

#endif  // QFLOYD_MATRIX_HPP
