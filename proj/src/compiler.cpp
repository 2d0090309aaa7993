#include "spikecsp/compiler.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace spikecsp {

std::string_view to_string(MotifKind kind) {
    switch (kind) {
    case MotifKind::variable_wta: return "variable_wta";
    case MotifKind::mutex_wta: return "mutex_wta";
    case MotifKind::or_clause: return "or_clause";
    case MotifKind::bias: return "bias";
    }
    return "bias";
}

void CompilerParams::validate() const {
    if (!(w_max > 0.0) || !std::isfinite(w_max)) throw std::invalid_argument("w_max must be > 0");
    if (!std::isfinite(bias_default)) throw std::invalid_argument("bias_default must be finite");
    if (!(or_push_strength > 0.0) || !std::isfinite(or_push_strength)) {
        throw std::invalid_argument("or_push_strength must be > 0");
    }
}

double heuristic_weight(std::size_t degree, std::size_t domain_size, double w_max) {
    if (domain_size < 2) throw std::invalid_argument("WTA weight needs a domain of size >= 2");
    if (!(w_max > 0.0)) throw std::invalid_argument("w_max must be > 0");
    const std::size_t saturation = domain_size - 1;
    if (degree >= saturation) return w_max;
    return static_cast<double>(degree) / static_cast<double>(saturation) * w_max;
}

std::span<const Network::Neighbor> Network::neighbors(NeuronId i) const {
    return {adjacency_.data() + row_offset_[i], row_offset_[i + 1] - row_offset_[i]};
}

double Network::weight(NeuronId i, NeuronId j) const {
    for (const auto& nb : neighbors(i)) {
        if (nb.neuron == j) return nb.weight;
    }
    return 0.0;
}

std::vector<Synapse> Network::synapses() const {
    std::vector<Synapse> out;
    for (NeuronId i = 0; i < size(); ++i) {
        for (const auto& nb : neighbors(i)) {
            if (i < nb.neuron) out.push_back({i, nb.neuron, nb.weight});
        }
    }
    return out;
}

Network Network::from_motifs(const std::vector<std::size_t>& domain_sizes,
                             std::size_t n_auxiliary, std::vector<MotifInstance> motifs) {
    Network net;
    net.var_offset_.push_back(0);
    for (VarIndex v = 0; v < domain_sizes.size(); ++v) {
        for (ValueIndex val = 0; val < domain_sizes[v]; ++val) net.principal_.push_back({v, val});
        net.var_offset_.push_back(net.principal_.size());
    }
    const std::size_t n = net.principal_.size() + n_auxiliary;
    net.biases_.assign(n, 0.0);

    std::map<std::pair<NeuronId, NeuronId>, double> weights;
    for (const auto& m : motifs) {
        for (const auto& b : m.biases) {
            if (b.neuron >= n) throw std::invalid_argument("bias term on unknown neuron");
            net.biases_[b.neuron] += b.bias;
        }
        for (const auto& s : m.synapses) {
            if (s.a >= n || s.b >= n) throw std::invalid_argument("synapse on unknown neuron");
            if (s.a == s.b) throw std::invalid_argument("self-coupling");
            if (!std::isfinite(s.weight)) throw std::invalid_argument("non-finite weight");
            weights[{std::min(s.a, s.b), std::max(s.a, s.b)}] += s.weight;
        }
        for (auto id : m.members) {
            if (id >= n) throw std::invalid_argument("motif member out of range");
        }
    }

    std::vector<std::vector<Neighbor>> rows(n);
    for (const auto& [key, w] : weights) {
        rows[key.first].push_back({key.second, w});
        rows[key.second].push_back({key.first, w});
    }
    net.row_offset_.push_back(0);
    for (auto& row : rows) {
        std::sort(row.begin(), row.end(),
                  [](const Neighbor& a, const Neighbor& b) { return a.neuron < b.neuron; });
        net.adjacency_.insert(net.adjacency_.end(), row.begin(), row.end());
        net.row_offset_.push_back(net.adjacency_.size());
    }
    net.motifs_ = std::move(motifs);
    return net;
}

Network compile(const Csp& csp, const CompilerParams& params) {
    params.validate();
    const auto graph = constraint_graph(csp);
    std::vector<std::size_t> domain_sizes;
    std::vector<std::size_t> first;
    std::size_t n_principal = 0;
    for (VarIndex v = 0; v < csp.num_variables(); ++v) {
        domain_sizes.push_back(csp.domain_size(v));
        first.push_back(n_principal);
        n_principal += csp.domain_size(v);
    }
    auto neuron = [&](const Literal& l) { return first[l.var] + l.value; };

    std::vector<MotifInstance> motifs;
    const double b = params.bias_default;

    for (VarIndex v = 0; v < csp.num_variables(); ++v) {
        const std::size_t d = csp.domain_size(v);
        MotifInstance bias{MotifKind::bias, {}, {}, d == 1 ? 4.0 * b : b, v, {}, {}};
        for (ValueIndex val = 0; val < d; ++val) {
            bias.members.push_back(first[v] + val);
            bias.biases.push_back({first[v] + val, bias.strength});
        }
        motifs.push_back(std::move(bias));
        if (d < 2) continue;

        const double w = params.heuristic_enabled
                             ? heuristic_weight(graph.degree(v), d, params.w_max)
                             : params.w_max;
        MotifInstance wta{MotifKind::variable_wta, {}, {}, w, v, {}, {}};
        for (ValueIndex a = 0; a < d; ++a) {
            wta.members.push_back(first[v] + a);
            for (ValueIndex c = a + 1; c < d; ++c) {
                wta.synapses.push_back({first[v] + a, first[v] + c, -w});
            }
        }
        motifs.push_back(std::move(wta));
    }

    // Two auxiliaries per clause: a push unit that drives the literals while
    // none holds, and a veto unit that literal activity recruits to silence
    // the push. Alone these reward every extra active literal by S, so the
    // literals also inhibit each other: with strength S for up to three
    // literals the auxiliary-minimised energy is -S/2 with no literal active
    // and exactly -3S/2 otherwise; longer clauses use 2S/(k-1), which keeps
    // every satisfied state at least S below the unsatisfied one.
    const double s = params.or_push_strength;
    std::size_t next_aux = n_principal;
    for (std::size_t ci = 0; ci < csp.num_constraints(); ++ci) {
        const auto& c = csp.constraints()[ci];
        if (const auto* m = std::get_if<MutexPair>(&c)) {
            const NeuronId a = neuron(m->a), bn = neuron(m->b);
            motifs.push_back({MotifKind::mutex_wta, {a, bn}, {}, params.w_max, ci,
                              {{a, bn, -params.w_max}}, {}});
            continue;
        }
        const auto& clause = std::get<Clause>(c);
        const NeuronId push = next_aux++;
        const NeuronId veto = next_aux++;
        MotifInstance orm{MotifKind::or_clause, {}, {push, veto}, s, ci, {}, {}};
        orm.biases = {{push, 0.5 * s}, {veto, -s}};
        orm.synapses.push_back({push, veto, -s});
        const std::size_t k = clause.literals.size();
        const double lateral = k <= 3 ? s : 2.0 * s / static_cast<double>(k - 1);
        for (const auto& lit : clause.literals) {
            const NeuronId l = neuron(lit);
            for (auto other : orm.members) orm.synapses.push_back({other, l, -lateral});
            orm.members.push_back(l);
            orm.synapses.push_back({push, l, s});
            orm.synapses.push_back({veto, l, s});
        }
        motifs.push_back(std::move(orm));
    }

    return Network::from_motifs(domain_sizes, next_aux - n_principal, std::move(motifs));
}

namespace {

void check_dimension(const Network& net, std::span<const std::uint8_t> x) {
    if (x.size() != net.size()) {
        throw std::invalid_argument("state has " + std::to_string(x.size()) +
                                    " entries, network has " + std::to_string(net.size()) +
                                    " neurons");
    }
}

}  // namespace

double energy(const Network& net, std::span<const std::uint8_t> x) {
    check_dimension(net, x);
    double e = 0.0;
    for (NeuronId i = 0; i < net.size(); ++i) {
        if (!x[i]) continue;
        e -= net.bias(i);
        for (const auto& nb : net.neighbors(i)) {
            // Each unordered pair is visited twice, matching the 1/2 factor.
            if (x[nb.neuron]) e -= 0.5 * nb.weight;
        }
    }
    return e;
}

EnergyBreakdown energy_breakdown(const Network& net, std::span<const std::uint8_t> x) {
    check_dimension(net, x);
    EnergyBreakdown out;
    for (const auto& m : net.motifs()) {
        double e = 0.0;
        for (const auto& b : m.biases) {
            if (x[b.neuron]) e -= b.bias;
        }
        for (const auto& s : m.synapses) {
            if (x[s.a] && x[s.b]) e -= s.weight;
        }
        switch (m.kind) {
        case MotifKind::bias: out.bias += e; break;
        case MotifKind::variable_wta:
        case MotifKind::mutex_wta: out.wta += e; break;
        case MotifKind::or_clause: out.orc += e; break;
        }
    }
    return out;
}

void dump_network_json(const Network& net, const Csp& csp, std::ostream& out) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["kind"] = std::string(to_string(csp.kind()));
    doc["n_principal"] = net.num_principal();
    doc["n_auxiliary"] = net.num_auxiliary();

    ordered_json neurons = ordered_json::array();
    for (NeuronId i = 0; i < net.size(); ++i) {
        ordered_json n;
        n["id"] = i;
        if (i < net.num_principal()) {
            const auto& lit = net.literal_of(i);
            n["variable"] = csp.variables()[lit.var];
            n["value"] = csp.domain(lit.var)[lit.value];
        } else {
            n["auxiliary"] = true;
        }
        n["bias"] = net.bias(i);
        neurons.push_back(std::move(n));
    }
    doc["neurons"] = std::move(neurons);

    ordered_json weights = ordered_json::array();
    for (const auto& s : net.synapses()) weights.push_back({s.a, s.b, s.weight});
    doc["weights"] = std::move(weights);

    ordered_json motifs = ordered_json::array();
    for (const auto& m : net.motifs()) {
        ordered_json j;
        j["kind"] = std::string(to_string(m.kind));
        j["source"] = m.source;
        j["strength"] = m.strength;
        j["members"] = m.members;
        if (!m.auxiliary.empty()) j["auxiliary"] = m.auxiliary;
        motifs.push_back(std::move(j));
    }
    doc["motifs"] = std::move(motifs);
    out << doc.dump(2) << '\n';
}

}  // namespace spikecsp
