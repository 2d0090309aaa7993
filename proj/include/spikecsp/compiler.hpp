// compiler.hpp - maps a Csp onto a network of binary stochastic neurons wired
//  by bias, winner-take-all (WTA) and OR motifs, and evaluates the network
//  energy E(x) = -sum_i b_i x_i - 1/2 sum_ij w_ij x_i x_j.
#ifndef SPIKECSP_COMPILER_HPP
#define SPIKECSP_COMPILER_HPP

#include "spikecsp/csp.hpp"

#include <cstdint>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

namespace spikecsp {

using NeuronId = std::size_t;

/// Binary activity over all neurons (principal first, then auxiliary).
using State = std::vector<std::uint8_t>;

enum class MotifKind { variable_wta, mutex_wta, or_clause, bias };

std::string_view to_string(MotifKind kind);

struct Synapse {
    NeuronId a = 0;
    NeuronId b = 0;
    double weight = 0.0;
};

struct BiasTerm {
    NeuronId neuron = 0;
    double bias = 0.0;
};

/// One motif and the exact energy terms it contributes.
struct MotifInstance {
    MotifKind kind = MotifKind::bias;
    std::vector<NeuronId> members;    // principal neurons
    std::vector<NeuronId> auxiliary;  // neurons owned by this motif
    double strength = 0.0;
    std::size_t source = 0;  // constraint index, or variable index for WTA/bias
    std::vector<Synapse> synapses;
    std::vector<BiasTerm> biases;
};

struct CompilerParams {
    double w_max = 2.0;
    double bias_default = 1.0;
    double or_push_strength = 2.0;
    bool heuristic_enabled = true;

    void validate() const;
};

/// Per-variable WTA weight from the variable's constraint-graph degree:
/// w_max when degree >= domain_size - 1, otherwise degree / (domain_size - 1)
/// scaled by w_max. Throws std::invalid_argument for domain_size < 2 or a
/// non-positive w_max.
double heuristic_weight(std::size_t degree, std::size_t domain_size, double w_max);

/// Immutable compiled network. Weights are symmetric with a zero diagonal
/// and stored as per-neuron neighbour lists.
class Network {
public:
    struct Neighbor {
        NeuronId neuron;
        double weight;
    };

    std::size_t size() const { return biases_.size(); }
    std::size_t num_principal() const { return principal_.size(); }
    std::size_t num_auxiliary() const { return size() - num_principal(); }
    std::size_t num_variables() const { return var_offset_.size() - 1; }

    double bias(NeuronId i) const { return biases_[i]; }
    const std::vector<double>& biases() const { return biases_; }
    std::span<const Neighbor> neighbors(NeuronId i) const;
    double weight(NeuronId i, NeuronId j) const;

    /// Principal neuron of a (variable, value) pair.
    NeuronId neuron_of(const Literal& lit) const { return var_offset_[lit.var] + lit.value; }
    /// (variable, value) of a principal neuron.
    const Literal& literal_of(NeuronId principal) const { return principal_.at(principal); }
    NeuronId first_neuron(VarIndex v) const { return var_offset_[v]; }
    std::size_t domain_size(VarIndex v) const { return var_offset_[v + 1] - var_offset_[v]; }

    const std::vector<MotifInstance>& motifs() const { return motifs_; }

    /// Unique (i < j) synapses with their summed weights, sorted.
    std::vector<Synapse> synapses() const;

    /// Builds a network directly from energy terms; used by the compiler and
    /// by tests that need hand-made micro networks. Principal neurons are
    /// numbered first, one per (variable, value) in `domain_sizes` order.
    static Network from_motifs(const std::vector<std::size_t>& domain_sizes,
                               std::size_t n_auxiliary, std::vector<MotifInstance> motifs);

private:
    std::vector<double> biases_;
    std::vector<std::size_t> row_offset_;
    std::vector<Neighbor> adjacency_;
    std::vector<Literal> principal_;
    std::vector<std::size_t> var_offset_;
    std::vector<MotifInstance> motifs_;
};

Network compile(const Csp& csp, const CompilerParams& params);

/// Exact energy. Throws std::invalid_argument on a dimension mismatch.
double energy(const Network& net, std::span<const std::uint8_t> x);

struct EnergyBreakdown {
    double bias = 0.0;
    double wta = 0.0;
    double orc = 0.0;

    double total() const { return bias + wta + orc; }
};

/// Energy split by motif kind; auxiliary bias terms count toward their
/// owning motif.
EnergyBreakdown energy_breakdown(const Network& net, std::span<const std::uint8_t> x);

/// Deterministic JSON listing of neurons, biases, weights and motifs.
void dump_network_json(const Network& net, const Csp& csp, std::ostream& out);

}  // namespace spikecsp

#endif  // SPIKECSP_COMPILER_HPP
