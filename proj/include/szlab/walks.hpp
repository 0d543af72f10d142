#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "szlab/rng.hpp"
#include "szlab/suzuki.hpp"
#include "szlab/words.hpp"

namespace szlab {

/// A generator pair with its provenance (the seed it was drawn from, or 0
/// for explicitly constructed pairs).
struct GeneratorPair {
    SuzukiElement a, b;
    uint64_t seed = 0;
};

GeneratorPair sample_pair(const Field& f, uint64_t seed);
/// Resamples until the pair generates (checked by BFS closure); the stream
/// is derived from (seed, attempt), so the result is reproducible.
GeneratorPair sample_generating_pair(const Field& f, uint64_t seed, int max_attempts = 64);

/// One-step measure: weight 1/4 on each of a, a^-1, b, b^-1, with weights
/// accumulating when points coincide.
std::vector<std::pair<SuzukiElement, double>> mu_atoms(const GeneratorPair& pair);

/// Membership predicate for a subgroup, with a member sampler used both for
/// the registration self-check and for closure spot tests.
class SubgroupTarget {
public:
    static SubgroupTarget whole_group(const Field& f);
    static SubgroupTarget borel(const Field& f);
    /// The embedded Sz(q0) for the subfield of degree m0 (handle must
    /// outlive the target).
    static SubgroupTarget subfield(const SubfieldSuzuki& sub);
    static SubgroupTarget cyclic(const SuzukiElement& g);
    static SubgroupTarget custom(std::string tag, std::function<bool(const SuzukiElement&)> member,
                                 std::function<SuzukiElement(Rng&)> sample);

    /// x^-1 (this) x.
    SubgroupTarget conjugated(const SuzukiElement& x) const;

    const std::string& tag() const { return tag_; }
    bool contains(const SuzukiElement& g) const { return member_(g); }
    SuzukiElement sample_member(Rng& rng) const { return sample_(rng); }

    /// Product closure on sampled member pairs; throws internal_error on a
    /// violation. Runs at registration time by the factories above.
    void self_check(uint64_t seed, int samples = 1000) const;

    /// Membership mask over a full group index.
    std::vector<uint8_t> mask(const GroupIndex& index) const;

private:
    std::string tag_;
    std::function<bool(const SuzukiElement&)> member_;
    std::function<SuzukiElement(Rng&)> sample_;
};

/// Exact distribution of the n-step walk driven by {a, a^-1, b, b^-1} on an
/// enumerated group: one double per element, stepped through precomputed
/// action tables in a fixed order.
class ExactWalk {
public:
    /// Starts at the point mass on the identity.
    ExactWalk(const GroupIndex& index, const GeneratorPair& pair);

    const GroupIndex& index() const { return *index_; }
    int steps_taken() const { return steps_; }
    void step(int n = 1);

    double mass_at(uint64_t i) const { return mass_[i]; }
    double total_mass() const;
    double mass_of(const std::vector<uint8_t>& mask) const;
    const std::vector<double>& probabilities() const { return mass_; }

private:
    const GroupIndex* index_;
    std::array<std::vector<uint32_t>, 4> act_;
    std::vector<double> mass_;
    std::vector<double> scratch_;
    int steps_ = 0;
};

/// Endpoints of `trials` independent n-step walks from the identity.
struct SampledWalk {
    std::vector<SuzukiElement> endpoints;
    uint64_t seed = 0;
    int steps = 0;
};

/// Budget guard: steps * trials <= 1e9.
SampledWalk sample_walk(const GeneratorPair& pair, int steps, uint64_t trials, uint64_t seed);

struct MassEstimate {
    double value = 0;
    double half_width = 0;  // 1.96 sigma binomial, sampled mode
};

double subgroup_mass(const ExactWalk& walk, const SubgroupTarget& target);
MassEstimate subgroup_mass(const SampledWalk& walk, const SubgroupTarget& target);

struct CauchySchwarzCheck {
    double lhs = 0;  // mu^(n+m)(H)
    double rhs = 0;  // sqrt(mu^(2n)(H))
    bool holds = false;
};

/// mu^(n+m)(H) <= sqrt(mu^(2n)(H)), the convolution halving step, computed
/// exactly on an enumerated group.
CauchySchwarzCheck cauchy_schwarz_check(const GroupIndex& index, const GeneratorPair& pair,
                                        const SubgroupTarget& target, int n, int m);

struct SigmaEstimate {
    double value = 0;
    double half_width = 0;
    uint64_t hits = 0;
    uint64_t samples = 0;
    double bound_shape = 0;  // the asymptotic shape it is reported against
};

/// Fraction of (pair, word) samples where some characteristic coefficient
/// of w(a,b) lands in a proper subfield away from zero. Words are uniform
/// length-n generator strings. Reported against q^(-1/6) log q.
SigmaEstimate sigma1_estimate(const Field& f, int word_length, uint64_t word_samples,
                              uint64_t pair_samples, uint64_t seed);

/// Fraction where all three coefficients vanish; every hit is verified to
/// satisfy w(a,b)^4 = id exactly (internal_error otherwise). Reported
/// against q^(-1/2) log q.
SigmaEstimate sigma2_estimate(const Field& f, int word_length, uint64_t word_samples,
                              uint64_t pair_samples, uint64_t seed);

struct NonconcRow {
    std::string target_tag;
    int steps = 0;
    uint64_t conjugator_seed = 0;  // 0 = unconjugated
    double mass = 0;
    double half_width = 0;  // 0 in exact mode
    double threshold = 0;   // q^(-delta0)
    bool flagged = false;   // mass >= threshold
};

/// mu^(n)(x^-1 H x) for every target, step count and sampled conjugator.
/// Exact mode (full GroupIndex required).
std::vector<NonconcRow> nonconcentration_report(const GroupIndex& index,
                                                const GeneratorPair& pair,
                                                const std::vector<int>& n_schedule,
                                                const std::vector<SubgroupTarget>& targets,
                                                int conjugators, double delta0, uint64_t seed);

/// Default step schedule ceil(C log q) for C in {5, 10, 20, 40}.
std::vector<int> default_n_schedule(const Field& f);

}  // namespace szlab
