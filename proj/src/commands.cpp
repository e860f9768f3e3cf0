#include "sl2ext/commands.hpp"

#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "sl2ext/ext_engine.hpp"
#include "sl2ext/hilbert.hpp"
#include "sl2ext/oracles.hpp"
#include "sl2ext/verify.hpp"
#include "sl2ext/weights.hpp"

namespace sl2ext {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Prime require_prime(Index p)
{
    if (!is_prime(p))
        throw UsageError("--p " + std::to_string(p) + " is not prime");
    return Prime(p);
}

void require_twist(Index r)
{
    if (r < 1)
        throw UsageError("--r must be at least 1");
}

std::string render(const Json& envelope)
{
    return envelope.dump(2) + "\n";
}

Json envelope(const std::string& command, Json parameters, Json result, Json notes = Json::array())
{
    Json e;
    e["command"] = command;
    e["parameters"] = std::move(parameters);
    e["result"] = std::move(result);
    e["engine_version"] = engine_version;
    e["notes"] = std::move(notes);
    return e;
}

// Maps domain errors onto the exit-status contract.
CommandOutput guarded(const std::function<CommandOutput()>& body)
{
    try {
        return body();
    } catch (const UsageError& e) {
        return {"", std::string("usage error: ") + e.what() + "\n", exit_usage_error};
    } catch (const std::invalid_argument& e) {
        return {"", std::string("usage error: ") + e.what() + "\n", exit_usage_error};
    } catch (const OverflowError& e) {
        return {"", std::string("error: ") + e.what() + "\n", exit_check_failure};
    }
}

Json split_to_json(Weight n, Prime p)
{
    const auto split = p_decompose(n, p);
    Json j;
    j["n"] = n;
    j["a"] = split.quotient;
    j["i"] = split.digit;
    return j;
}

} // namespace

Json natural_to_json(const Natural& x)
{
    if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max())
        return Json(x.convert_to<std::uint64_t>());
    return Json(x.str());
}

Json trace_to_json(const TraceDag& dag)
{
    Json j;
    if (dag.roots().size() == 1) {
        j["root"] = node_id(dag.node(dag.root()).query);
    } else {
        Json roots = Json::array();
        for (const NodeIndex r : dag.roots())
            roots.push_back(node_id(dag.node(r).query));
        j["roots"] = std::move(roots);
    }
    Json nodes = Json::object();
    for (const auto& node : dag.nodes()) {
        Json children = Json::array();
        for (const auto& edge : node.children)
            children.push_back({{"i", edge.summand}, {"node_id", node_id(dag.node(edge.child).query)}});
        Json entry;
        entry["m"] = node.query.degree;
        entry["n"] = node.query.weight;
        entry["s"] = node.query.twist;
        entry["rule"] = to_string(node.rule);
        entry["dim"] = natural_to_json(node.dim);
        entry["children"] = std::move(children);
        nodes[node_id(node.query)] = std::move(entry);
    }
    j["nodes"] = std::move(nodes);
    return j;
}

CommandOutput cmd_ext(Index p_value, Index r, std::optional<Index> q_flag)
{
    return guarded([&]() -> CommandOutput {
        const Prime p = require_prime(p_value);
        require_twist(r);
        const Index top = two_p_pow(r - 1, p);
        const Index q = q_flag.value_or(top);

        ExtEngine engine;
        const auto summands = engine.decompose_ext_k_nabla2(q, r, p);
        ExtDim dim = 0;
        for (const auto& s : summands)
            dim += s.dim;

        Json parameters{{"p", p.value()}, {"r", r}, {"q", q}};
        Json result;
        result["q"] = q;
        result["dim"] = natural_to_json(dim);
        result["top_degree"] = q == top;
        Json notes = Json::array();
        if (q == top) {
            Json decomposition = Json::array();
            for (const auto& s : summands)
                decomposition.push_back({{"n", s.n}, {"dim", natural_to_json(s.dim)}});
            result["decomposition"] = std::move(decomposition);
            const CornerReport corner = e2_corner(r, p);
            result["corner"] = {{"dim", natural_to_json(corner.dim)}, {"steps", corner.steps}};
            result["gl2_dim"] = natural_to_json(dim);
            notes.push_back("q = 2p^(r-1): dim Ext^q(k, gl2^(r)) = dim Ext^q(k, nabla(2)^(r))");
            notes.push_back("restriction from GL2 to SL2 is an isomorphism on Ext(k, gl2^(r)); gl2_dim equals dim");
        } else {
            notes.push_back("formula extrapolation: the summation over n is only established at q = 2p^(r-1) = " +
                            std::to_string(top));
        }
        return {render(envelope("ext", std::move(parameters), std::move(result), std::move(notes))), "",
                exit_success};
    });
}

CommandOutput cmd_ext_dn(Index p_value, Index n, Index m, Index s)
{
    return guarded([&]() -> CommandOutput {
        const Prime p = require_prime(p_value);
        const ExtQuery query{m, n, s, p};
        ExtEngine engine;
        const ExtDim dim = engine.ext_delta_nabla2(query);
        Json parameters{{"p", p.value()}, {"n", n}, {"m", m}, {"s", s}};
        Json result{{"dim", natural_to_json(dim)}, {"rule", to_string(rule_for(query))}};
        return {render(envelope("ext-dn", std::move(parameters), std::move(result))), "", exit_success};
    });
}

CommandOutput cmd_trace(Index p_value, Index n, Index m, Index s, const std::string& format, bool prune)
{
    return guarded([&]() -> CommandOutput {
        const Prime p = require_prime(p_value);
        if (format != "json" && format != "dot")
            throw UsageError("--format must be json or dot, got '" + format + "'");
        TraceDag dag = trace({m, n, s, p});
        if (prune)
            dag = dag.pruned();
        if (format == "dot")
            return {to_dot(dag), "", exit_success};
        Json parameters{{"p", p.value()}, {"n", n}, {"m", m}, {"s", s}, {"format", format}, {"prune", prune}};
        return {render(envelope("trace", std::move(parameters), trace_to_json(dag))), "", exit_success};
    });
}

CommandOutput cmd_blocks(Index p_value, Index lambda, Index mu, std::optional<Index> oracle_bound)
{
    return guarded([&]() -> CommandOutput {
        const Prime p = require_prime(p_value);
        Json parameters{{"p", p.value()}, {"lambda", lambda}, {"mu", mu}};
        Json result;
        result["lambda"] = split_to_json(lambda, p);
        result["mu"] = split_to_json(mu, p);
        result["same_block"] = same_block(lambda, mu, p);
        Json notes = Json::array();
        notes.push_back("same_block is a necessary condition for block membership");
        if (oracle_bound) {
            parameters["oracle"] = *oracle_bound;
            const bool linked = oracles::orbit_linked(lambda, mu, p, {*oracle_bound});
            result["oracle"] = {{"bound", *oracle_bound}, {"orbit_linked", linked}};
        }
        return {render(envelope("blocks", std::move(parameters), std::move(result), std::move(notes))), "",
                exit_success};
    });
}

CommandOutput cmd_verify(const std::vector<Index>& prime_values, Index r_max)
{
    return guarded([&]() -> CommandOutput {
        if (prime_values.empty())
            throw UsageError("--primes must list at least one prime");
        std::vector<Prime> primes;
        for (const Index v : prime_values)
            primes.push_back(require_prime(v));
        require_twist(r_max);

        const VerifyReport report = run_verification(primes, r_max);
        Json checks = Json::array();
        for (const auto& c : report.checks) {
            Json entry;
            entry["check"] = c.name;
            entry["p"] = c.p;
            entry["r"] = c.r ? Json(*c.r) : Json(nullptr);
            entry["n"] = c.n ? Json(*c.n) : Json(nullptr);
            entry["passed"] = c.passed;
            entry["detail"] = c.detail;
            checks.push_back(std::move(entry));
        }
        Json sorted_primes = Json::array();
        for (const auto& c : report.checks)
            if (sorted_primes.empty() || sorted_primes.back() != c.p)
                sorted_primes.push_back(c.p);
        Json parameters{{"primes", sorted_primes}, {"r_max", r_max}};
        Json result{{"all_passed", report.all_passed()}, {"checks", std::move(checks)}};
        return {render(envelope("verify", std::move(parameters), std::move(result))), report.lines(),
                report.all_passed() ? exit_success : exit_check_failure};
    });
}

CommandOutput cmd_hilbert(Index p_value, Index r, Index max_degree)
{
    return guarded([&]() -> CommandOutput {
        const Prime p = require_prime(p_value);
        require_twist(r);
        Json generators = Json::array();
        for (const auto& g : generator_ledger(r, p))
            generators.push_back({{"i", g.index},
                                  {"degree", g.degree},
                                  {"coefficient_dim", g.coefficient_dim},
                                  {"frobenius_pullback", g.frobenius_pullback}});
        Json coefficients = Json::array();
        for (const auto& c : hilbert(r, p, max_degree).coefficients)
            coefficients.push_back(natural_to_json(c));
        Json parameters{{"p", p.value()}, {"r", r}, {"max_degree", max_degree}};
        Json result{{"generators", std::move(generators)}, {"coefficients", std::move(coefficients)}};
        Json notes = Json::array({"series of the polynomial algebra on the universal classes; an upper-bound "
                                  "witness for growth, not the series of the cohomology ring"});
        return {render(envelope("hilbert", std::move(parameters), std::move(result), std::move(notes))), "",
                exit_success};
    });
}

CommandOutput run_cli(const std::vector<std::string>& args)
{
    CLI::App app{"Exact Ext dimensions for SL2 and GL2 in characteristic p", "sl2ext"};
    app.require_subcommand(1);

    Index p = 0, r = 0, n = 0, m = 0, s = 0, lambda = 0, mu = 0, r_max = 0, max_degree = 0;
    std::optional<Index> q, oracle;
    std::vector<Index> primes;
    std::string format = "json";
    bool prune = false;

    auto* ext = app.add_subcommand("ext", "dim Ext^q(k, gl2^(r)); q defaults to 2p^(r-1)");
    ext->add_option("--p", p, "prime characteristic")->required();
    ext->add_option("--r", r, "Frobenius twist, r >= 1")->required();
    ext->add_option("--q", q, "cohomological degree");

    auto* ext_dn = app.add_subcommand("ext-dn", "dim Ext^m(Delta(n), nabla(2)^(s))");
    auto* trace_cmd = app.add_subcommand("trace", "recursion DAG of Ext^m(Delta(n), nabla(2)^(s))");
    for (auto* sub : {ext_dn, trace_cmd}) {
        sub->add_option("--p", p, "prime characteristic")->required();
        sub->add_option("--n", n, "weight of the Weyl module")->required();
        sub->add_option("--m", m, "cohomological degree")->required();
        sub->add_option("--s", s, "Frobenius twist of nabla(2)")->required();
    }
    trace_cmd->add_option("--format", format, "json or dot");
    trace_cmd->add_flag("--prune", prune, "drop zero-dimension children");

    auto* blocks = app.add_subcommand("blocks", "block condition for two weights");
    blocks->add_option("--p", p, "prime characteristic")->required();
    blocks->add_option("--lambda", lambda, "first weight")->required();
    blocks->add_option("--mu", mu, "second weight")->required();
    blocks->add_option("--oracle", oracle, "also run the dot-orbit oracle with this cutoff");

    auto* verify = app.add_subcommand("verify", "run the verification grid");
    verify->add_option("--primes", primes, "comma-separated primes")->required()->delimiter(',');
    verify->add_option("--r-max", r_max, "largest twist")->required();

    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series of the generator algebra");
    hilbert_cmd->add_option("--p", p, "prime characteristic")->required();
    hilbert_cmd->add_option("--r", r, "number of generators, r >= 1")->required();
    hilbert_cmd->add_option("--max-degree", max_degree, "truncation degree")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        return {out.str(), err.str(), code == 0 ? exit_success : exit_usage_error};
    }

    if (ext->parsed())
        return cmd_ext(p, r, q);
    if (ext_dn->parsed())
        return cmd_ext_dn(p, n, m, s);
    if (trace_cmd->parsed())
        return cmd_trace(p, n, m, s, format, prune);
    if (blocks->parsed())
        return cmd_blocks(p, lambda, mu, oracle);
    if (verify->parsed())
        return cmd_verify(primes, r_max);
    return cmd_hilbert(p, r, max_degree);
}

} // namespace sl2ext
