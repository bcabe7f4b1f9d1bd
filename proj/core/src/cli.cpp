#include "crystal/cli.hpp"

#include "crystal/cartan.hpp"
#include "crystal/correspondence.hpp"
#include "crystal/crystal.hpp"
#include "crystal/errors.hpp"
#include "crystal/membership.hpp"
#include "crystal/monomial.hpp"
#include "crystal/tableaux.hpp"
#include "crystal/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>

namespace crystal {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNodeLimit = 3;

std::size_t default_max_nodes() {
    if (const char* env = std::getenv("CRYSTAL_MAX_NODES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
    }
    return kDefaultMaxNodes;
}

struct CommonOptions {
    int rank = 0;
    std::string weight_text;
    std::size_t max_nodes = default_max_nodes();

    Weight weight() const {
        Weight w = Weight::parse(weight_text, rank);
        if (!w.is_dominant()) throw std::domain_error("weight must be dominant: " + weight_text);
        return w;
    }
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool weight_required = true) {
    cmd->add_option("--rank", opts.rank, "rank n of the algebra (positive)")
        ->required()
        ->check(CLI::PositiveNumber);
    auto* w = cmd->add_option("--weight", opts.weight_text,
                              "dominant weight as comma-separated coefficients, e.g. 1,2,1");
    if (weight_required) w->required();
    cmd->add_option("--max-nodes", opts.max_nodes,
                    "generation node budget (env CRYSTAL_MAX_NODES overrides the default)")
        ->check(CLI::PositiveNumber);
}

int cmd_graph(const CommonOptions& opts, const std::string& model, const std::string& format,
              const std::string& seed_text, std::ostream& out) {
    CrystalGraph graph;
    if (!seed_text.empty()) {
        if (model != "monomial")
            throw std::domain_error("--seed is only meaningful with --model monomial");
        Monomial seed = Monomial::parse(seed_text, opts.rank);
        if (!opts.weight_text.empty() && seed.weight() != opts.weight())
            throw std::domain_error("seed weight " + seed.weight().to_string() +
                                    " does not match --weight " + opts.weight_text);
        graph = generate(seed, opts.max_nodes);
    } else {
        if (opts.weight_text.empty()) throw std::domain_error("--weight or --seed is required");
        const Weight lambda = opts.weight();
        if (model == "monomial")
            graph = generate(Monomial::highest_weight(lambda), opts.max_nodes);
        else if (model == "tableau")
            graph = generate(Tableau::highest(lambda, Orientation::standard), opts.max_nodes);
        else if (model == "reverse-tableau")
            graph = generate(Tableau::highest(lambda, Orientation::reverse), opts.max_nodes);
        else
            throw std::domain_error("unknown model: " + model);
    }
    if (format == "dot")
        out << graph.to_dot();
    else if (format == "json")
        out << graph.to_json_string() << "\n";
    else if (format == "ascii")
        out << graph.to_ascii();
    else
        throw std::domain_error("unknown format: " + format);
    return kExitOk;
}

int cmd_member(const CommonOptions& opts, const std::string& monomial_text,
               const std::string& format, std::ostream& out) {
    const Weight lambda = opts.weight();
    const Monomial m = Monomial::parse(monomial_text, opts.rank);
    if (!is_member(m, lambda)) {
        out << "non-member\n";
        return kExitNegative;
    }
    auto x = x_factorize(m);
    out << "member\n";
    if (format == "json")
        out << x->to_json_string() << "\n";
    else
        out << x->to_ascii();
    return kExitOk;
}

int cmd_map(const CommonOptions& opts, const std::string& input, const std::string& target,
            bool inverse, const std::string& format, std::ostream& out) {
    const Weight lambda = opts.weight();
    if (!inverse) {
        const Monomial m = Monomial::parse(input, opts.rank);
        const Tableau image = target == "psi" ? psi(m, lambda) : phi_map(m, lambda);
        if (format == "json")
            out << image.to_json_string() << "\n";
        else
            out << image.to_ascii();
        return kExitOk;
    }
    const Tableau t = Tableau::from_json_string(input, opts.rank);
    if (t.shape() != Shape::of_weight(lambda))
        throw std::domain_error("tableau shape does not match --weight " + lambda.to_string());
    const Monomial m = target == "psi" ? psi_inverse(t) : psi_inverse(varphi_inverse(t));
    if (format == "json")
        out << m.to_json_string() << "\n";
    else
        out << m.to_string() << "\n";
    return kExitOk;
}

int cmd_dim(const CommonOptions& opts, std::ostream& out) {
    const CartanDatum cartan(opts.rank);
    out << cartan.weyl_dim(opts.weight()) << "\n";
    return kExitOk;
}

int cmd_verify(const CommonOptions& opts, std::ostream& out) {
    const VerifyReport report = verify_weight(opts.weight(), opts.max_nodes);
    out << format_report(report);
    return report.all_passed() ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact crystal graphs: monomial and tableau realizations"};
    app.require_subcommand(1);

    CommonOptions graph_opts, member_opts, map_opts, dim_opts, verify_opts;
    std::string model = "monomial", graph_format = "dot", seed_text;
    std::string member_monomial, member_format = "ascii";
    std::string map_input, map_target, map_format = "ascii";
    bool map_inverse = false;

    CLI::App* graph_cmd = app.add_subcommand("graph", "generate a crystal graph");
    add_common(graph_cmd, graph_opts, /*weight_required=*/false);
    graph_cmd->add_option("--model", model, "monomial | tableau | reverse-tableau")
        ->check(CLI::IsMember({"monomial", "tableau", "reverse-tableau"}));
    graph_cmd->add_option("--format", graph_format, "dot | json | ascii")
        ->check(CLI::IsMember({"dot", "json", "ascii"}));
    graph_cmd->add_option("--seed", seed_text, "monomial seed overriding the highest-weight seed");

    CLI::App* member_cmd = app.add_subcommand("member", "test crystal membership of a monomial");
    add_common(member_cmd, member_opts);
    member_cmd->add_option("monomial", member_monomial, "monomial, e.g. \"Y1(0)*Y2(1)^-1\"")
        ->required();
    member_cmd->add_option("--format", member_format, "ascii | json")
        ->check(CLI::IsMember({"ascii", "json"}));

    CLI::App* map_cmd = app.add_subcommand("map", "apply a realization isomorphism");
    add_common(map_cmd, map_opts);
    map_cmd->add_option("input", map_input, "monomial (forward) or tableau JSON (--inverse)")
        ->required();
    map_cmd->add_option("--to", map_target, "psi (reverse tableau) | phi (standard tableau)")
        ->required()
        ->check(CLI::IsMember({"psi", "phi"}));
    map_cmd->add_flag("--inverse", map_inverse, "map a tableau back to its monomial");
    map_cmd->add_option("--format", map_format, "ascii | json")
        ->check(CLI::IsMember({"ascii", "json"}));

    CLI::App* dim_cmd = app.add_subcommand("dim", "dimension of the crystal of a dominant weight");
    add_common(dim_cmd, dim_opts);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the invariant suite for one weight");
    add_common(verify_cmd, verify_opts);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (graph_cmd->parsed()) return cmd_graph(graph_opts, model, graph_format, seed_text, out);
        if (member_cmd->parsed())
            return cmd_member(member_opts, member_monomial, member_format, out);
        if (map_cmd->parsed())
            return cmd_map(map_opts, map_input, map_target, map_inverse, map_format, out);
        if (dim_cmd->parsed()) return cmd_dim(dim_opts, out);
        if (verify_cmd->parsed()) return cmd_verify(verify_opts, out);
        err << "error: no subcommand\n";
        return kExitUsage;
    } catch (const NodeLimitError& e) {
        err << "error: " << e.what() << "\n";
        return kExitNodeLimit;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace crystal
