#pragma once

// The abstract crystal contract, the pairwise tensor-product combinator,
// exhaustive graph generation from a highest-weight seed, and the canonical
// isomorphism between generated graphs.

#include "crystal/cartan.hpp"
#include "crystal/errors.hpp"

#include <array>
#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crystal {

inline constexpr std::size_t kDefaultMaxNodes = 1'000'000;

/// Contract every realization implements: a weight, string statistics per
/// color, partial raising/lowering maps, a total order for exact visited
/// sets, and a canonical label.
template <typename T>
concept CrystalElement =
    std::copyable<T> && std::totally_ordered<T> &&
    requires(const T& b, int i) {
        { b.rank() } -> std::convertible_to<int>;
        { b.weight() } -> std::same_as<Weight>;
        { b.phi(i) } -> std::convertible_to<int>;
        { b.epsilon(i) } -> std::convertible_to<int>;
        { b.f_tilde(i) } -> std::same_as<std::optional<T>>;
        { b.e_tilde(i) } -> std::same_as<std::optional<T>>;
        { b.canonical_string() } -> std::convertible_to<std::string>;
    };

/// Pair in the tensor product of two crystals. The lowering operator acts on
/// the left factor exactly when phi(left) > eps(right), the raising operator
/// when phi(left) >= eps(right); the pair statistics are the usual maxima so
/// that the pair satisfies the same contract as its factors.
template <CrystalElement L, CrystalElement R>
class TensorElement {
public:
    TensorElement(L left, R right) : left_(std::move(left)), right_(std::move(right)) {
        if (left_.rank() != right_.rank()) throw std::invalid_argument("tensor factor rank mismatch");
    }

    const L& left() const { return left_; }
    const R& right() const { return right_; }

    int rank() const { return left_.rank(); }
    Weight weight() const { return left_.weight() + right_.weight(); }

    int epsilon(int i) const {
        return std::max(left_.epsilon(i), right_.epsilon(i) - left_.weight().pairing(i));
    }
    int phi(int i) const {
        return std::max(right_.phi(i), left_.phi(i) + right_.weight().pairing(i));
    }

    std::optional<TensorElement> f_tilde(int i) const {
        if (left_.phi(i) > right_.epsilon(i)) {
            auto l = left_.f_tilde(i);
            if (!l) return std::nullopt;
            return TensorElement(*l, right_);
        }
        auto r = right_.f_tilde(i);
        if (!r) return std::nullopt;
        return TensorElement(left_, *r);
    }

    std::optional<TensorElement> e_tilde(int i) const {
        if (left_.phi(i) >= right_.epsilon(i)) {
            auto l = left_.e_tilde(i);
            if (!l) return std::nullopt;
            return TensorElement(*l, right_);
        }
        auto r = right_.e_tilde(i);
        if (!r) return std::nullopt;
        return TensorElement(left_, *r);
    }

    std::string canonical_string() const {
        return left_.canonical_string() + "(x)" + right_.canonical_string();
    }

    friend bool operator==(const TensorElement&, const TensorElement&) = default;
    friend auto operator<=>(const TensorElement&, const TensorElement&) = default;

private:
    L left_;
    R right_;
};

template <CrystalElement L, CrystalElement R>
TensorElement<L, R> tensor(L left, R right) {
    return TensorElement<L, R>(std::move(left), std::move(right));
}

/// Finite colored directed graph of a generated crystal. Nodes are numbered
/// in BFS discovery order from the highest-weight seed with children visited
/// in color order, so equal inputs yield byte-identical exports.
class CrystalGraph {
public:
    CrystalGraph() = default;
    CrystalGraph(int rank, Weight highest_weight)
        : rank_(rank), highest_weight_(std::move(highest_weight)) {}

    int rank() const { return rank_; }
    int highest() const { return 0; }
    const Weight& highest_weight() const { return highest_weight_; }

    std::size_t node_count() const { return labels_.size(); }
    const std::string& label(int node) const { return labels_.at(static_cast<std::size_t>(node)); }
    const Weight& weight_of(int node) const { return weights_.at(static_cast<std::size_t>(node)); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Target of the color-i edge out of `node`, or -1.
    int target(int node, int i) const {
        return out_.at(static_cast<std::size_t>(node)).at(static_cast<std::size_t>(i - 1));
    }
    /// Source of the color-i edge into `node`, or -1.
    int source(int node, int i) const {
        return in_.at(static_cast<std::size_t>(node)).at(static_cast<std::size_t>(i - 1));
    }

    int add_node(std::string label, Weight weight);
    void add_edge(int from, int color, int to);

    /// Edges as (from, color, to), sorted by (from, color).
    std::vector<std::array<int, 3>> edges() const;

    /// Multiplicity of each weight among the nodes.
    std::map<Weight, std::size_t> weight_multiplicities() const;

    int find_label(const std::string& label) const;  // -1 when absent

    std::string to_dot() const;
    std::string to_json_string() const;
    std::string to_ascii() const;

private:
    int rank_ = 0;
    Weight highest_weight_;
    std::vector<std::string> labels_;
    std::vector<Weight> weights_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Generated graph together with the elements behind each node, index-aligned
/// with the graph's node numbering.
template <CrystalElement T>
struct Generated {
    CrystalGraph graph;
    std::vector<T> elements;
};

/// Closure of the seed under all lowering operators, by BFS with children in
/// color order 1..rank. The seed must be killed by every raising operator;
/// exceeding `max_nodes` raises NodeLimitError.
template <CrystalElement T>
Generated<T> generate_with_elements(const T& seed, std::size_t max_nodes = kDefaultMaxNodes) {
    const int rank = seed.rank();
    for (int i = 1; i <= rank; ++i)
        if (seed.epsilon(i) != 0)
            throw std::domain_error("seed is not highest weight: epsilon(" + std::to_string(i) +
                                    ") = " + std::to_string(seed.epsilon(i)));

    Generated<T> result;
    result.graph = CrystalGraph(rank, seed.weight());
    std::map<T, int> index;

    result.elements.push_back(seed);
    result.graph.add_node(seed.canonical_string(), seed.weight());
    index.emplace(seed, 0);

    for (std::size_t u = 0; u < result.elements.size(); ++u) {
        for (int i = 1; i <= rank; ++i) {
            const T element = result.elements[u];  // copy: vector may grow
            auto image = element.f_tilde(i);
            if (!image) continue;
            auto [it, inserted] = index.emplace(*image, static_cast<int>(result.elements.size()));
            if (inserted) {
                if (result.elements.size() >= max_nodes) throw NodeLimitError(max_nodes);
                result.elements.push_back(*image);
                result.graph.add_node(image->canonical_string(), image->weight());
            }
            result.graph.add_edge(static_cast<int>(u), i, it->second);
        }
    }
    return result;
}

template <CrystalElement T>
CrystalGraph generate(const T& seed, std::size_t max_nodes = kDefaultMaxNodes) {
    return generate_with_elements(seed, max_nodes).graph;
}

/// The unique node map between two generated graphs that fixes the highest
/// nodes and commutes with every colored edge, as a vector indexed by nodes
/// of `a`. Throws IsoError naming the first operator string that fails.
std::vector<int> canonical_iso(const CrystalGraph& a, const CrystalGraph& b);

}  // namespace crystal
