#include "crystal/crystal.hpp"

#include <nlohmann/json.hpp>

#include <deque>
#include <sstream>
#include <stdexcept>

namespace crystal {

int CrystalGraph::add_node(std::string label, Weight weight) {
    labels_.push_back(std::move(label));
    weights_.push_back(std::move(weight));
    out_.emplace_back(static_cast<std::size_t>(rank_), -1);
    in_.emplace_back(static_cast<std::size_t>(rank_), -1);
    return static_cast<int>(labels_.size()) - 1;
}

void CrystalGraph::add_edge(int from, int color, int to) {
    auto& out_slot = out_.at(static_cast<std::size_t>(from)).at(static_cast<std::size_t>(color - 1));
    auto& in_slot = in_.at(static_cast<std::size_t>(to)).at(static_cast<std::size_t>(color - 1));
    if (out_slot != -1 || in_slot != -1)
        throw std::logic_error("duplicate color-" + std::to_string(color) + " edge at node " +
                               std::to_string(from));
    out_slot = to;
    in_slot = from;
}

std::vector<std::array<int, 3>> CrystalGraph::edges() const {
    std::vector<std::array<int, 3>> result;
    for (int u = 0; u < static_cast<int>(node_count()); ++u)
        for (int i = 1; i <= rank_; ++i)
            if (int v = target(u, i); v != -1) result.push_back({u, i, v});
    return result;
}

std::map<Weight, std::size_t> CrystalGraph::weight_multiplicities() const {
    std::map<Weight, std::size_t> mult;
    for (const Weight& w : weights_) ++mult[w];
    return mult;
}

int CrystalGraph::find_label(const std::string& label) const {
    for (std::size_t k = 0; k < labels_.size(); ++k)
        if (labels_[k] == label) return static_cast<int>(k);
    return -1;
}

std::string CrystalGraph::to_dot() const {
    std::ostringstream os;
    os << "digraph crystal {\n  rankdir=TB;\n  node [shape=box];\n";
    for (std::size_t k = 0; k < labels_.size(); ++k)
        os << "  n" << k << " [label=\"" << labels_[k] << "\"];\n";
    for (const auto& [from, color, to] : edges())
        os << "  n" << from << " -> n" << to << " [label=\"" << color << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string CrystalGraph::to_json_string() const {
    nlohmann::json j;
    j["rank"] = rank_;
    j["weight"] = nlohmann::json::array();
    for (int i = 1; i <= highest_weight_.rank(); ++i) j["weight"].push_back(highest_weight_.coeff(i));
    j["nodes"] = nlohmann::json::array();
    for (std::size_t k = 0; k < labels_.size(); ++k) {
        nlohmann::json node;
        node["id"] = k;
        node["label"] = labels_[k];
        node["weight"] = nlohmann::json::array();
        for (int i = 1; i <= rank_; ++i) node["weight"].push_back(weights_[k].coeff(i));
        j["nodes"].push_back(std::move(node));
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& [from, color, to] : edges())
        j["edges"].push_back({{"from", from}, {"to", to}, {"color", color}});
    j["highest"] = highest();
    return j.dump();
}

std::string CrystalGraph::to_ascii() const {
    std::ostringstream os;
    os << "nodes: " << node_count() << ", rank: " << rank_ << ", highest weight: "
       << highest_weight_.to_string() << "\n";
    for (std::size_t k = 0; k < labels_.size(); ++k)
        os << k << ": " << labels_[k] << " [" << weights_[k].to_string() << "]\n";
    for (const auto& [from, color, to] : edges())
        os << from << " -" << color << "-> " << to << "\n";
    return os.str();
}

std::vector<int> canonical_iso(const CrystalGraph& a, const CrystalGraph& b) {
    if (a.rank() != b.rank())
        throw IsoError("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                       std::to_string(b.rank()));
    if (a.node_count() != b.node_count())
        throw IsoError("node count mismatch: " + std::to_string(a.node_count()) + " vs " +
                       std::to_string(b.node_count()));
    if (a.node_count() == 0) return {};
    if (a.weight_of(a.highest()) != b.weight_of(b.highest()))
        throw IsoError("weight mismatch at highest node: " + a.weight_of(a.highest()).to_string() +
                       " vs " + b.weight_of(b.highest()).to_string());

    std::vector<int> map(a.node_count(), -1);
    std::vector<int> seen_in_b(b.node_count(), -1);
    map[static_cast<std::size_t>(a.highest())] = b.highest();
    seen_in_b[static_cast<std::size_t>(b.highest())] = a.highest();

    // Pairs reached by the same operator string, plus that string for reports.
    std::deque<std::pair<int, std::string>> queue;
    queue.emplace_back(a.highest(), "");
    while (!queue.empty()) {
        auto [u, path] = queue.front();
        queue.pop_front();
        int v = map[static_cast<std::size_t>(u)];
        if (a.weight_of(u) != b.weight_of(v))
            throw IsoError("weight mismatch after \"" + path + "\": " + a.weight_of(u).to_string() +
                           " vs " + b.weight_of(v).to_string());
        for (int i = 1; i <= a.rank(); ++i) {
            const int ua = a.target(u, i);
            const int vb = b.target(v, i);
            const std::string step = path.empty() ? "f" + std::to_string(i)
                                                  : path + " f" + std::to_string(i);
            if ((ua == -1) != (vb == -1))
                throw IsoError("edge mismatch at \"" + step + "\": present in " +
                               ((ua != -1) ? "first" : "second") + " graph only");
            if (ua == -1) continue;
            int& assigned = map[static_cast<std::size_t>(ua)];
            if (assigned == -1) {
                if (seen_in_b[static_cast<std::size_t>(vb)] != -1)
                    throw IsoError("map is not injective at \"" + step + "\"");
                assigned = vb;
                seen_in_b[static_cast<std::size_t>(vb)] = ua;
                queue.emplace_back(ua, step);
            } else if (assigned != vb) {
                throw IsoError("edge targets disagree at \"" + step + "\"");
            }
        }
    }
    for (std::size_t k = 0; k < map.size(); ++k)
        if (map[k] == -1) throw IsoError("graph is not connected at node " + std::to_string(k));
    return map;
}

}  // namespace crystal
