#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "szlab/suzuki.hpp"
#include "szlab/walks.hpp"

namespace szlab {

/// k-regular undirected graph with materialized neighbor lists (neighbors
/// carry multiplicity, so coinciding generators keep the degree at 4).
struct AdjacencyList {
    uint32_t n = 0;
    uint16_t degree = 0;
    std::vector<uint32_t> nbr;  // n * degree entries

    std::span<const uint32_t> neighbors(uint32_t v) const {
        return {nbr.data() + size_t(v) * degree, size_t(degree)};
    }
};

/// Cayley graph on an enumerated group: x ~ xs for s in {a, a^-1, b, b^-1}.
AdjacencyList build_cayley(const GroupIndex& index, const GeneratorPair& pair);

/// Cayley graph of Z/n with connection set {+-s : s in shifts}.
AdjacencyList circulant_graph(uint32_t n, std::span<const int> shifts);

bool is_connected(const AdjacencyList& g);

struct ExpansionRatio {
    double value = 0;
    bool flagged_large = false;  // |A| > n/2, outside expander semantics
};

/// |boundary(A)| / |A|: vertices outside A adjacent to A.
ExpansionRatio vertex_expansion(const AdjacencyList& g, std::span<const uint32_t> a);

struct EdgeFormExpansion {
    double sym_diff_ratio = 0;  // |A symdiff AS| / |A|
    double growth_ratio = 0;    // |A S'| / |A| with S' = S + identity
    bool flagged_large = false;
};

EdgeFormExpansion edge_form_expansion(const AdjacencyList& g, std::span<const uint32_t> a);

struct EigenEstimate {
    double lambda2 = 0;      // largest nontrivial eigenvalue of P = A/degree
    double lambda_min = 0;   // most negative eigenvalue
    double residual2 = 0;    // ||P v - lambda v|| at return
    double residual_min = 0;
    int iters2 = 0;
    int iters_min = 0;
    bool converged2 = false;
    bool converged_min = false;
};

/// Power iteration on (I + P)/2 and (I - P)/2 with the constant vector
/// deflated, seeded start vector, fixed reduction order. Non-convergence
/// within max_iter is flagged, never hidden.
EigenEstimate second_eigenvalue(const AdjacencyList& g, double tol, int max_iter, uint64_t seed);

struct MultiplicityProbe {
    int count = 0;               // eigenvalues found within tol of the target
    bool budget_exhausted = false;
    std::vector<double> eigenvalues;  // every eigenvalue found, in discovery order
};

/// Repeated deflated power iteration from the top of the spectrum; counts
/// eigenvalues within tol of lambda until one falls below or the budget is
/// spent. Full re-orthogonalization against all found vectors per step.
MultiplicityProbe multiplicity_probe(const AdjacencyList& g, double lambda, double tol,
                                     int budget, uint64_t seed, int max_iter = 4000);

struct SweepCut {
    std::vector<uint32_t> set;
    double expansion = 0;  // edge-form expansion of the returned set
};

/// Sorts vertices by value (ties by index) and returns the prefix of size
/// <= n/2 minimizing the edge-form expansion.
SweepCut sweep_cut(const AdjacencyList& g, std::span<const double> values);

/// Binary eigenvector dump: n little-endian doubles.
void write_vector_dump(const std::string& path, std::span<const double> values);

}  // namespace szlab
