#include "szlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

namespace szlab {

AdjacencyList build_cayley(const GroupIndex& index, const GeneratorPair& pair) {
    auto tables = index.action_tables(pair.a, pair.b);
    AdjacencyList g;
    g.n = uint32_t(index.size());
    g.degree = 4;
    g.nbr.resize(size_t(g.n) * 4);
    for (uint32_t v = 0; v < g.n; ++v) {
        for (int s = 0; s < 4; ++s) g.nbr[size_t(v) * 4 + size_t(s)] = tables[size_t(s)][v];
    }
    return g;
}

AdjacencyList circulant_graph(uint32_t n, std::span<const int> shifts) {
    if (n == 0) throw std::invalid_argument("circulant_graph: empty vertex set");
    AdjacencyList g;
    g.n = n;
    g.degree = uint16_t(2 * shifts.size());
    g.nbr.resize(size_t(n) * g.degree);
    for (uint32_t v = 0; v < n; ++v) {
        size_t at = size_t(v) * g.degree;
        for (int s : shifts) {
            uint32_t step = uint32_t(((s % int(n)) + int(n)) % int(n));
            g.nbr[at++] = (v + step) % n;
            g.nbr[at++] = (v + n - step) % n;
        }
    }
    return g;
}

bool is_connected(const AdjacencyList& g) {
    if (g.n == 0) return false;
    std::vector<uint8_t> seen(g.n, 0);
    std::vector<uint32_t> stack{0};
    seen[0] = 1;
    uint32_t visited = 1;
    while (!stack.empty()) {
        uint32_t v = stack.back();
        stack.pop_back();
        for (uint32_t u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++visited;
                stack.push_back(u);
            }
        }
    }
    return visited == g.n;
}

ExpansionRatio vertex_expansion(const AdjacencyList& g, std::span<const uint32_t> a) {
    if (a.empty()) throw std::invalid_argument("vertex_expansion: empty set");
    std::vector<uint8_t> in_a(g.n, 0);
    for (uint32_t v : a) in_a[v] = 1;
    std::vector<uint8_t> in_boundary(g.n, 0);
    uint64_t boundary = 0;
    for (uint32_t v : a) {
        for (uint32_t u : g.neighbors(v)) {
            if (!in_a[u] && !in_boundary[u]) {
                in_boundary[u] = 1;
                ++boundary;
            }
        }
    }
    ExpansionRatio r;
    r.value = double(boundary) / double(a.size());
    r.flagged_large = 2 * a.size() > g.n;
    return r;
}

EdgeFormExpansion edge_form_expansion(const AdjacencyList& g, std::span<const uint32_t> a) {
    if (a.empty()) throw std::invalid_argument("edge_form_expansion: empty set");
    std::vector<uint8_t> in_a(g.n, 0);
    for (uint32_t v : a) in_a[v] = 1;
    // w in AS iff w has a neighbor in A (S is symmetric).
    uint64_t as_size = 0, a_and_as = 0;
    for (uint32_t w = 0; w < g.n; ++w) {
        bool in_as = false;
        for (uint32_t u : g.neighbors(w)) {
            if (in_a[u]) {
                in_as = true;
                break;
            }
        }
        if (in_as) {
            ++as_size;
            if (in_a[w]) ++a_and_as;
        }
    }
    uint64_t sym_diff = a.size() + as_size - 2 * a_and_as;
    uint64_t a_sprime = a.size() + as_size - a_and_as;  // |A union AS|
    EdgeFormExpansion e;
    e.sym_diff_ratio = double(sym_diff) / double(a.size());
    e.growth_ratio = double(a_sprime) / double(a.size());
    e.flagged_large = 2 * a.size() > g.n;
    return e;
}

// ---------------------------------------------------------- eigenvalues --

namespace {

// y = P x with P = A / degree; fixed accumulation order.
void apply_walk_operator(const AdjacencyList& g, const std::vector<double>& x,
                         std::vector<double>& y) {
    const double inv_deg = 1.0 / double(g.degree);
    for (uint32_t v = 0; v < g.n; ++v) {
        double acc = 0;
        for (uint32_t u : g.neighbors(v)) acc += x[u];
        y[v] = acc * inv_deg;
    }
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
    double acc = 0;
    for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

double norm(const std::vector<double>& x) { return std::sqrt(dot(x, x)); }

void axpy(std::vector<double>& x, double c, const std::vector<double>& y) {
    for (size_t i = 0; i < x.size(); ++i) x[i] += c * y[i];
}

struct PowerResult {
    double q_eigenvalue = 0;  // eigenvalue of the shifted operator Q
    double residual = 0;      // ||Q v - lambda v||
    int iters = 0;
    bool converged = false;
    std::vector<double> vector;
};

// Dominant eigenpair of Q = (I + sign*P)/2 restricted to the orthogonal
// complement of `deflate` (which must contain the constant vector).
PowerResult shifted_power_iteration(const AdjacencyList& g, int sign, double tol, int max_iter,
                                    uint64_t seed,
                                    const std::vector<std::vector<double>>& deflate) {
    std::vector<double> v(g.n), pv(g.n), qv(g.n);
    Rng rng = Rng::derive(seed, {stream::kSpectral, uint64_t(sign + 2), deflate.size()});
    for (auto& x : v) x = rng.unit() - 0.5;

    auto orthogonalize = [&](std::vector<double>& x) {
        for (const auto& d : deflate) axpy(x, -dot(x, d), d);
    };

    PowerResult res;
    orthogonalize(v);
    double n0 = norm(v);
    if (n0 == 0) throw internal_error("power iteration: degenerate start vector");
    for (auto& x : v) x /= n0;

    for (int it = 1; it <= max_iter; ++it) {
        apply_walk_operator(g, v, pv);
        for (uint32_t i = 0; i < g.n; ++i) qv[i] = 0.5 * (v[i] + double(sign) * pv[i]);
        orthogonalize(qv);
        double lambda = dot(v, qv);
        double rnorm = 0;
        for (uint32_t i = 0; i < g.n; ++i) {
            double r = qv[i] - lambda * v[i];
            rnorm += r * r;
        }
        rnorm = std::sqrt(rnorm);
        double qn = norm(qv);
        if (qn == 0) throw internal_error("power iteration: collapsed iterate");
        for (uint32_t i = 0; i < g.n; ++i) v[i] = qv[i] / qn;
        res.q_eigenvalue = lambda;
        res.iters = it;
        if (rnorm <= tol) {
            res.residual = rnorm;
            res.converged = true;
            break;
        }
        res.residual = rnorm;
    }
    res.vector = std::move(v);
    return res;
}

std::vector<double> constant_unit_vector(uint32_t n) {
    return std::vector<double>(n, 1.0 / std::sqrt(double(n)));
}

}  // namespace

EigenEstimate second_eigenvalue(const AdjacencyList& g, double tol, int max_iter, uint64_t seed) {
    if (!is_connected(g)) {
        throw std::invalid_argument("second_eigenvalue: graph must be connected");
    }
    std::vector<std::vector<double>> deflate{constant_unit_vector(g.n)};
    // Q-residuals are half the P-residuals, so iterate to tol/2.
    PowerResult top = shifted_power_iteration(g, +1, tol / 2, max_iter, seed, deflate);
    PowerResult bot = shifted_power_iteration(g, -1, tol / 2, max_iter, seed, deflate);
    EigenEstimate e;
    e.lambda2 = 2 * top.q_eigenvalue - 1;
    e.lambda_min = 1 - 2 * bot.q_eigenvalue;
    e.residual2 = 2 * top.residual;
    e.residual_min = 2 * bot.residual;
    e.iters2 = top.iters;
    e.iters_min = bot.iters;
    e.converged2 = top.converged;
    e.converged_min = bot.converged;
    return e;
}

MultiplicityProbe multiplicity_probe(const AdjacencyList& g, double lambda, double tol,
                                     int budget, uint64_t seed, int max_iter) {
    if (!is_connected(g)) {
        throw std::invalid_argument("multiplicity_probe: graph must be connected");
    }
    MultiplicityProbe probe;
    std::vector<std::vector<double>> deflate{constant_unit_vector(g.n)};
    for (int found = 0; found < budget; ++found) {
        PowerResult r = shifted_power_iteration(g, +1, tol / 4, max_iter, seed, deflate);
        double ev = 2 * r.q_eigenvalue - 1;
        probe.eigenvalues.push_back(ev);
        if (std::abs(ev - lambda) <= tol) {
            ++probe.count;
        } else if (ev < lambda - tol) {
            return probe;  // fell below the cluster: done
        }
        deflate.push_back(std::move(r.vector));
    }
    probe.budget_exhausted = true;
    return probe;
}

SweepCut sweep_cut(const AdjacencyList& g, std::span<const double> values) {
    if (values.size() != g.n) throw std::invalid_argument("sweep_cut: value vector size mismatch");
    std::vector<uint32_t> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](uint32_t x, uint32_t y) {
        if (values[x] != values[y]) return values[x] < values[y];
        return x < y;
    });

    // Incremental |A symdiff AS| while vertices join A in sweep order:
    // cover[w] counts neighbors of w inside A.
    std::vector<uint32_t> cover(g.n, 0);
    std::vector<uint8_t> in_a(g.n, 0);
    uint64_t a_size = 0, as_size = 0, a_and_as = 0;

    double best = -1;
    size_t best_prefix = 0;
    for (uint32_t step = 0; step < g.n / 2; ++step) {
        uint32_t v = order[step];
        in_a[v] = 1;
        ++a_size;
        if (cover[v] > 0) ++a_and_as;
        for (uint32_t u : g.neighbors(v)) {
            if (cover[u] == 0) {
                ++as_size;
                if (in_a[u]) ++a_and_as;
            }
            ++cover[u];
        }
        double expansion = double(a_size + as_size - 2 * a_and_as) / double(a_size);
        if (best < 0 || expansion < best) {
            best = expansion;
            best_prefix = step + 1;
        }
    }

    SweepCut cut;
    cut.set.assign(order.begin(), order.begin() + std::ptrdiff_t(best_prefix));
    cut.expansion = best;
    return cut;
}

void write_vector_dump(const std::string& path, std::span<const double> values) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_vector_dump: cannot open " + path);
    out.write(reinterpret_cast<const char*>(values.data()),
              std::streamsize(values.size() * sizeof(double)));
    if (!out) throw std::runtime_error("write_vector_dump: write failed for " + path);
}

}  // namespace szlab
