#include "szlab/walks.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace szlab {

GeneratorPair sample_pair(const Field& f, uint64_t seed) {
    Rng rng = Rng::derive(seed, {stream::kPair});
    GeneratorPair p{sample_uniform(f, rng), sample_uniform(f, rng), seed};
    return p;
}

GeneratorPair sample_generating_pair(const Field& f, uint64_t seed, int max_attempts) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Rng rng = Rng::derive(seed, {stream::kPair, uint64_t(attempt)});
        GeneratorPair p{sample_uniform(f, rng), sample_uniform(f, rng), seed};
        uint64_t cap = uint64_t(group_order(f.degree()) + 1);
        if (generates(p.a, p.b, cap).status == GenerationResult::Status::kGenerates) {
            return p;
        }
    }
    throw std::runtime_error("sample_generating_pair: no generating pair within the attempt cap");
}

std::vector<std::pair<SuzukiElement, double>> mu_atoms(const GeneratorPair& pair) {
    std::vector<std::pair<SuzukiElement, double>> atoms;
    for (const SuzukiElement& g : {pair.a, pair.a.inversed(), pair.b, pair.b.inversed()}) {
        bool merged = false;
        for (auto& [h, w] : atoms) {
            if (h == g) {
                w += 0.25;
                merged = true;
                break;
            }
        }
        if (!merged) atoms.emplace_back(g, 0.25);
    }
    return atoms;
}

// --------------------------------------------------------- SubgroupTarget --

SubgroupTarget SubgroupTarget::whole_group(const Field& f) {
    return custom("group", [](const SuzukiElement&) { return true; },
                  [&f](Rng& rng) { return sample_uniform(f, rng); });
}

SubgroupTarget SubgroupTarget::borel(const Field& f) {
    SubgroupTarget t;
    t.tag_ = "borel";
    t.member_ = [](const SuzukiElement& g) { return g.in_borel(); };
    t.sample_ = [&f](Rng& rng) {
        FieldElement al = f.element(rng.below(f.order()));
        FieldElement be = f.element(rng.below(f.order()));
        FieldElement ga = f.element(1 + rng.below(f.order() - 1));
        return SuzukiElement::assemble(BruhatParams::borel(al, be, ga));
    };
    t.self_check(17);
    return t;
}

SubgroupTarget SubgroupTarget::subfield(const SubfieldSuzuki& sub) {
    SubgroupTarget t;
    t.tag_ = "sz" + std::to_string(sub.sub().order());
    t.member_ = [&sub](const SuzukiElement& g) { return sub.contains(g); };
    t.sample_ = [&sub](Rng& rng) { return sub.sample(rng); };
    t.self_check(17);
    return t;
}

SubgroupTarget SubgroupTarget::cyclic(const SuzukiElement& g) {
    auto elems = std::make_shared<std::vector<SuzukiElement>>();
    SuzukiElement h = g;
    elems->push_back(SuzukiElement::identity(g.field()));
    while (!h.is_identity()) {
        elems->push_back(h);
        h = h * g;
    }
    SubgroupTarget t;
    t.tag_ = "cyclic" + std::to_string(elems->size());
    t.member_ = [elems](const SuzukiElement& x) {
        return std::find(elems->begin(), elems->end(), x) != elems->end();
    };
    t.sample_ = [elems](Rng& rng) { return (*elems)[rng.below(elems->size())]; };
    t.self_check(17);
    return t;
}

SubgroupTarget SubgroupTarget::custom(std::string tag,
                                      std::function<bool(const SuzukiElement&)> member,
                                      std::function<SuzukiElement(Rng&)> sample) {
    SubgroupTarget t;
    t.tag_ = std::move(tag);
    t.member_ = std::move(member);
    t.sample_ = std::move(sample);
    t.self_check(17);
    return t;
}

SubgroupTarget SubgroupTarget::conjugated(const SuzukiElement& x) const {
    SubgroupTarget t;
    t.tag_ = tag_ + "-conj";
    SuzukiElement xi = x.inversed();
    auto member = member_;
    auto sample = sample_;
    // g in x^-1 H x iff x g x^-1 in H
    t.member_ = [member, x, xi](const SuzukiElement& g) { return member(x * g * xi); };
    t.sample_ = [sample, x, xi](Rng& rng) { return xi * sample(rng) * x; };
    t.self_check(17);
    return t;
}

void SubgroupTarget::self_check(uint64_t seed, int samples) const {
    Rng rng = Rng::derive(seed, {stream::kTargetCheck, fnv1a64(tag_)});
    for (int i = 0; i < samples; ++i) {
        SuzukiElement x = sample_(rng);
        SuzukiElement y = sample_(rng);
        if (!member_(x) || !member_(y) || !member_(x * y) || !member_(x.inversed())) {
            throw internal_error("SubgroupTarget '" + tag_ +
                                 "': sampled members escape the predicate");
        }
    }
}

std::vector<uint8_t> SubgroupTarget::mask(const GroupIndex& index) const {
    std::vector<uint8_t> m(index.size(), 0);
    for (uint64_t i = 0; i < index.size(); ++i) {
        m[i] = member_(index.element_at(i)) ? 1 : 0;
    }
    return m;
}

// -------------------------------------------------------------- ExactWalk --

ExactWalk::ExactWalk(const GroupIndex& index, const GeneratorPair& pair)
    : index_(&index), act_(index.action_tables(pair.a, pair.b)) {
    mass_.assign(index.size(), 0.0);
    scratch_.assign(index.size(), 0.0);
    uint64_t id = *index.index_of(SuzukiElement::identity(index.field()).params());
    mass_[id] = 1.0;
}

void ExactWalk::step(int n) {
    for (int s = 0; s < n; ++s) {
        std::fill(scratch_.begin(), scratch_.end(), 0.0);
        for (int g = 0; g < 4; ++g) {
            const std::vector<uint32_t>& table = act_[size_t(g)];
            for (size_t i = 0; i < mass_.size(); ++i) {
                scratch_[table[i]] += 0.25 * mass_[i];
            }
        }
        mass_.swap(scratch_);
        ++steps_;
    }
}

double ExactWalk::total_mass() const {
    double t = 0;
    for (double v : mass_) t += v;
    return t;
}

double ExactWalk::mass_of(const std::vector<uint8_t>& mask) const {
    if (mask.size() != mass_.size()) {
        throw std::invalid_argument("ExactWalk::mass_of: mask size mismatch");
    }
    double t = 0;
    for (size_t i = 0; i < mass_.size(); ++i) {
        if (mask[i]) t += mass_[i];
    }
    return t;
}

// ------------------------------------------------------------ SampledWalk --

SampledWalk sample_walk(const GeneratorPair& pair, int steps, uint64_t trials, uint64_t seed) {
    if (steps < 0) throw std::invalid_argument("sample_walk: negative step count");
    if (uint64_t(steps) * trials > 1'000'000'000ull) {
        throw capacity_error("sample_walk: steps * trials capped at 1e9");
    }
    const std::array<SuzukiElement, 4> gens{pair.a, pair.a.inversed(), pair.b,
                                            pair.b.inversed()};
    SampledWalk walk;
    walk.seed = seed;
    walk.steps = steps;
    walk.endpoints.reserve(trials);
    for (uint64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::derive(seed, {stream::kWalk, t});
        SuzukiElement g = SuzukiElement::identity(pair.a.field());
        for (int s = 0; s < steps; ++s) g = g * gens[rng.below(4)];
        walk.endpoints.push_back(std::move(g));
    }
    return walk;
}

double subgroup_mass(const ExactWalk& walk, const SubgroupTarget& target) {
    double t = 0;
    const GroupIndex& idx = walk.index();
    for (uint64_t i = 0; i < idx.size(); ++i) {
        if (target.contains(idx.element_at(i))) t += walk.mass_at(i);
    }
    return t;
}

MassEstimate subgroup_mass(const SampledWalk& walk, const SubgroupTarget& target) {
    uint64_t hits = 0;
    for (const SuzukiElement& g : walk.endpoints) {
        if (target.contains(g)) ++hits;
    }
    MassEstimate e;
    double n = double(walk.endpoints.size());
    e.value = double(hits) / n;
    e.half_width = 1.96 * std::sqrt(e.value * (1 - e.value) / n);
    return e;
}

CauchySchwarzCheck cauchy_schwarz_check(const GroupIndex& index, const GeneratorPair& pair,
                                        const SubgroupTarget& target, int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("cauchy_schwarz_check: negative step count");
    std::vector<uint8_t> mask = target.mask(index);
    ExactWalk w1(index, pair);
    w1.step(n + m);
    ExactWalk w2(index, pair);
    w2.step(2 * n);
    CauchySchwarzCheck c;
    c.lhs = w1.mass_of(mask);
    c.rhs = std::sqrt(w2.mass_of(mask));
    c.holds = c.lhs <= c.rhs + 1e-9;
    return c;
}

// -------------------------------------------------------- sigma estimates --

namespace {

struct SigmaCounters {
    uint64_t hits = 0;
    uint64_t samples = 0;
};

template <typename HitFn>
SigmaCounters sigma_scan(const Field& f, int word_length, uint64_t word_samples,
                         uint64_t pair_samples, uint64_t seed, HitFn&& is_hit) {
    SigmaCounters c;
    for (uint64_t ps = 0; ps < pair_samples; ++ps) {
        Rng rng = Rng::derive(seed, {stream::kWalk, ps});
        SuzukiElement a = sample_uniform(f, rng);
        SuzukiElement b = sample_uniform(f, rng);
        const std::array<SuzukiElement, 4> gens{a, a.inversed(), b, b.inversed()};
        for (uint64_t ws = 0; ws < word_samples; ++ws) {
            SuzukiElement g = SuzukiElement::identity(f);
            for (int s = 0; s < word_length; ++s) g = g * gens[rng.below(4)];
            ++c.samples;
            if (is_hit(g)) ++c.hits;
        }
    }
    return c;
}

SigmaEstimate finish_sigma(const SigmaCounters& c, double bound_shape) {
    SigmaEstimate e;
    e.hits = c.hits;
    e.samples = c.samples;
    e.value = double(c.hits) / double(c.samples);
    e.half_width = 1.96 * std::sqrt(e.value * (1 - e.value) / double(c.samples));
    e.bound_shape = bound_shape;
    return e;
}

}  // namespace

SigmaEstimate sigma1_estimate(const Field& f, int word_length, uint64_t word_samples,
                              uint64_t pair_samples, uint64_t seed) {
    auto counters = sigma_scan(f, word_length, word_samples, pair_samples, seed,
                               [](const SuzukiElement& g) {
                                   for (FieldElement c : charpoly_coeffs(g.matrix())) {
                                       if (!c.is_zero() && in_proper_subfield(c)) return true;
                                   }
                                   return false;
                               });
    double q = double(f.order());
    return finish_sigma(counters, std::pow(q, -1.0 / 6.0) * std::log(q));
}

SigmaEstimate sigma2_estimate(const Field& f, int word_length, uint64_t word_samples,
                              uint64_t pair_samples, uint64_t seed) {
    auto counters = sigma_scan(
        f, word_length, word_samples, pair_samples, seed, [&f](const SuzukiElement& g) {
            auto c = charpoly_coeffs(g.matrix());
            if (!c[0].is_zero() || !c[1].is_zero() || !c[2].is_zero()) return false;
            // characteristic polynomial lambda^4 + 1 forces g^4 = id
            if (!g.pow(4).is_identity()) {
                throw internal_error("sigma2_estimate: vanishing coefficients but g^4 != id");
            }
            return true;
        });
    double q = double(f.order());
    return finish_sigma(counters, std::pow(q, -0.5) * std::log(q));
}

std::vector<NonconcRow> nonconcentration_report(const GroupIndex& index,
                                                const GeneratorPair& pair,
                                                const std::vector<int>& n_schedule,
                                                const std::vector<SubgroupTarget>& targets,
                                                int conjugators, double delta0, uint64_t seed) {
    const Field& f = index.field();
    const double threshold = std::pow(double(f.order()), -delta0);

    struct MaskedTarget {
        std::string tag;
        uint64_t conj_seed;
        std::vector<uint8_t> mask;
    };
    std::vector<MaskedTarget> masked;
    for (const SubgroupTarget& t : targets) {
        masked.push_back({t.tag(), 0, t.mask(index)});
        for (int c = 1; c <= conjugators; ++c) {
            Rng rng = Rng::derive(seed, {stream::kPair, uint64_t(c), fnv1a64(t.tag())});
            SubgroupTarget conj = t.conjugated(sample_uniform(f, rng));
            masked.push_back({conj.tag(), uint64_t(c), conj.mask(index)});
        }
    }

    std::vector<int> schedule = n_schedule;
    std::sort(schedule.begin(), schedule.end());
    std::vector<NonconcRow> rows;
    ExactWalk walk(index, pair);
    int at = 0;
    for (int n : schedule) {
        walk.step(n - at);
        at = n;
        for (const MaskedTarget& t : masked) {
            NonconcRow row;
            row.target_tag = t.tag;
            row.steps = n;
            row.conjugator_seed = t.conj_seed;
            row.mass = walk.mass_of(t.mask);
            row.threshold = threshold;
            row.flagged = row.mass >= threshold;
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<int> default_n_schedule(const Field& f) {
    double logq = std::log(double(f.order()));
    std::vector<int> ns;
    for (int c : {5, 10, 20, 40}) ns.push_back(int(std::ceil(c * logq)));
    return ns;
}

}  // namespace szlab
