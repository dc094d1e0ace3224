#include "quant/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "quant/entropy.hpp"
#include "quant/parallel.hpp"

namespace quant {

namespace {

constexpr double kFeasibleSlack = 1e-12;
constexpr double kTieTol = 1e-15;

// Per-cell tables over grid indices i < j.
struct CellTable {
    std::size_t points;
    std::vector<double> mass;
    std::vector<double> cost;
    std::vector<double> codepoint;

    std::size_t at(std::size_t i, std::size_t j) const { return i * points + j; }
};

CellTable build_cells(const GridInstance& inst, DistortionExponent r)
{
    const auto g = inst.grid();
    const std::size_t n = g.size();
    const Density d(inst.density());
    CellTable t{n, std::vector<double>(n * n, 0.0), std::vector<double>(n * n, 0.0),
                std::vector<double>(n * n, 0.0)};
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Interval cell(g[i], g[j]);
            const double m = d.cdf(g[j]) - d.cdf(g[i]);
            const double c = optimal_codepoint(cell, d, r);
            double cost = 0.0;
            const auto b = inst.density().breakpoints();
            const auto h = inst.density().heights();
            for (std::size_t k = 0; k < h.size(); ++k) {
                const double lo = std::max(g[i], b[k]);
                const double hi = std::min(g[j], b[k + 1]);
                if (hi > lo) {
                    cost += h[k] * abs_power_integral(lo, hi, c, r.value());
                }
            }
            t.mass[t.at(i, j)] = std::max(m, 0.0);
            t.cost[t.at(i, j)] = cost;
            t.codepoint[t.at(i, j)] = c;
        }
    }
    return t;
}

struct Candidate {
    double value = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> cuts; // grid indices, first 0, last n-1
    std::size_t feasible = 0;
};

// True when (value, cuts) beats `best` under the documented tie-break.
bool better(double value, const std::vector<std::size_t>& cuts, const Candidate& best)
{
    if (best.cuts.empty()) {
        return true;
    }
    const double scale = std::max(std::abs(value), std::abs(best.value));
    if (value < best.value - kTieTol * scale) {
        return true;
    }
    if (value > best.value + kTieTol * scale) {
        return false;
    }
    if (cuts.size() != best.cuts.size()) {
        return cuts.size() < best.cuts.size();
    }
    return cuts < best.cuts;
}

// Enumerates every composition of the grid into exactly `cells` cells.
Candidate search_k_cells(const CellTable& t, std::size_t cells, RenyiOrder alpha, double rate)
{
    const std::size_t n = t.points;
    Candidate best;
    std::vector<std::size_t> cuts{0};
    std::vector<double> masses;
    masses.reserve(cells);

    auto evaluate = [&]() {
        double value = 0.0;
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
            value += t.cost[t.at(cuts[k], cuts[k + 1])];
        }
        double total = 0.0;
        for (double m : masses) {
            total += m;
        }
        std::vector<double> normalized = masses;
        for (double& m : normalized) {
            m /= total;
        }
        const double h = renyi_entropy(ProbVector(std::move(normalized)), alpha);
        if (h > rate + kFeasibleSlack) {
            return;
        }
        ++best.feasible;
        if (better(value, cuts, best)) {
            best.value = value;
            best.cuts = cuts;
        }
    };

    auto recurse = [&](auto&& self, std::size_t remaining) -> void {
        const std::size_t from = cuts.back();
        if (remaining == 1) {
            cuts.push_back(n - 1);
            masses.push_back(t.mass[t.at(from, n - 1)]);
            evaluate();
            masses.pop_back();
            cuts.pop_back();
            return;
        }
        // Leave at least one grid step per remaining cell.
        for (std::size_t next = from + 1; next + (remaining - 1) <= n - 1; ++next) {
            cuts.push_back(next);
            masses.push_back(t.mass[t.at(from, next)]);
            self(self, remaining - 1);
            masses.pop_back();
            cuts.pop_back();
        }
    };
    recurse(recurse, cells);
    return best;
}

} // namespace

GridInstance::GridInstance(PiecewiseConstantDensity density, std::vector<double> grid,
                           std::size_t max_cells)
    : density_(std::move(density)), grid_(std::move(grid)), max_cells_(max_cells)
{
    if (grid_.size() < 2 || grid_.size() > kMaxGridPoints) {
        throw InvalidArgument("oracle grid must have between 2 and 32 points");
    }
    if (max_cells_ < 1 || max_cells_ > kMaxOracleCells) {
        throw InvalidArgument("oracle max_cells must lie in [1, 8]");
    }
    for (std::size_t i = 1; i < grid_.size(); ++i) {
        if (!(grid_[i] > grid_[i - 1])) {
            throw InvalidArgument("oracle grid must be strictly increasing");
        }
    }
    const Interval sup = density_.support();
    if (grid_.front() != sup.lo || grid_.back() != sup.hi) {
        throw InvalidArgument("oracle grid must span the density support exactly");
    }
    for (double b : density_.breakpoints()) {
        if (!std::binary_search(grid_.begin(), grid_.end(), b)) {
            throw InvalidArgument("oracle grid must contain every density breakpoint");
        }
    }
}

GridInstance GridInstance::subdivided(PiecewiseConstantDensity density, std::size_t points,
                                      std::size_t max_cells)
{
    const auto knots = density.breakpoints();
    const std::size_t pieces = knots.size() - 1;
    if (points < pieces + 1) {
        throw InvalidArgument("too few grid points to cover every density piece");
    }
    // one segment per piece, the rest handed out by largest remaining share
    const double width = density.support().length();
    const std::size_t spare = points - 1 - pieces;
    std::vector<std::size_t> split(pieces, 1);
    std::vector<double> share(pieces);
    std::size_t given = 0;
    for (std::size_t i = 0; i < pieces; ++i) {
        share[i] = double(spare) * (knots[i + 1] - knots[i]) / width;
        split[i] += static_cast<std::size_t>(share[i]);
        given += static_cast<std::size_t>(share[i]);
        share[i] -= std::floor(share[i]);
    }
    while (given < spare) {
        const auto it = std::max_element(share.begin(), share.end());
        ++split[it - share.begin()];
        *it = -1.0;
        ++given;
    }
    std::vector<double> grid{knots.front()};
    for (std::size_t i = 0; i < pieces; ++i) {
        for (std::size_t j = 1; j < split[i]; ++j) {
            grid.push_back(knots[i] + (knots[i + 1] - knots[i]) * (double(j) / double(split[i])));
        }
        grid.push_back(knots[i + 1]);
    }
    return GridInstance(std::move(density), std::move(grid), max_cells);
}

GridInstance GridInstance::regular(PiecewiseConstantDensity density, std::size_t points,
                                   std::size_t max_cells)
{
    if (points < 2) {
        throw InvalidArgument("oracle grid needs at least two points");
    }
    const Interval sup = density.support();
    std::vector<double> grid;
    for (std::size_t i = 0; i < points; ++i) {
        grid.push_back(sup.lo + sup.length() * (double(i) / double(points - 1)));
    }
    grid.front() = sup.lo;
    grid.back() = sup.hi;
    for (double b : density.breakpoints()) {
        // Snap near-coincident grid points onto breakpoints.
        auto it = std::min_element(grid.begin(), grid.end(), [b](double x, double y) {
            return std::abs(x - b) < std::abs(y - b);
        });
        if (std::abs(*it - b) <= 1e-12 * sup.length()) {
            *it = b;
        } else {
            grid.push_back(b);
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return {std::move(density), std::move(grid), max_cells};
}

GridInstance GridInstance::transformed(double scale, double shift) const
{
    const Density moved = similarity_transform(Density(density_), scale, shift);
    std::vector<double> grid;
    for (double x : grid_) {
        grid.push_back(scale * x + shift);
    }
    PiecewiseConstantDensity pc = *moved.piecewise();
    // Keep the grid and the density breakpoints bit-identical.
    auto b = pc.breakpoints();
    for (double& x : grid) {
        auto it = std::lower_bound(b.begin(), b.end(), x);
        for (auto cand : {it, it == b.begin() ? it : it - 1}) {
            if (cand != b.end() && std::abs(*cand - x) <= 1e-12 * std::abs(scale)) {
                x = *cand;
            }
        }
    }
    return {std::move(pc), std::move(grid), max_cells_};
}

OracleResult brute_force_optimal(const GridInstance& inst, RenyiOrder alpha, double rate,
                                 DistortionExponent r)
{
    if (!(rate >= 0.0)) {
        throw InvalidArgument("oracle rate must be nonnegative");
    }
    const CellTable table = build_cells(inst, r);
    const std::size_t segments = inst.grid().size() - 1;
    const std::size_t kmax = std::min(inst.max_cells(), segments);

    std::vector<Candidate> per_k(kmax + 1);
    parallel_for(kmax, [&](std::size_t idx) {
        per_k[idx + 1] = search_k_cells(table, idx + 1, alpha, rate);
    });

    // Deterministic reduction in order of increasing cell count.
    Candidate best;
    std::size_t feasible = 0;
    for (std::size_t k = 1; k <= kmax; ++k) {
        feasible += per_k[k].feasible;
        if (!per_k[k].cuts.empty() && better(per_k[k].value, per_k[k].cuts, best)) {
            best.value = per_k[k].value;
            best.cuts = per_k[k].cuts;
        }
    }
    if (best.cuts.empty()) {
        throw NumericalError("oracle found no feasible quantizer");
    }
    const auto g = inst.grid();
    std::vector<double> b;
    std::vector<double> c;
    for (std::size_t k = 0; k < best.cuts.size(); ++k) {
        b.push_back(g[best.cuts[k]]);
        if (k + 1 < best.cuts.size()) {
            c.push_back(table.codepoint[table.at(best.cuts[k], best.cuts[k + 1])]);
        }
    }
    return {best.value, IntervalQuantizer(std::move(b), std::move(c)), feasible};
}

std::vector<OracleResult> alpha_profile(const GridInstance& inst,
                                        std::span<const RenyiOrder> alphas, double rate,
                                        DistortionExponent r)
{
    std::vector<OracleResult> out;
    for (const RenyiOrder& a : alphas) {
        out.push_back(brute_force_optimal(inst, a, rate, r));
    }
    return out;
}

std::vector<double> empirical_limit_probe(const GridInstance& inst, RenyiOrder alpha,
                                          DistortionExponent r, std::span<const double> rates)
{
    std::vector<double> out;
    for (double rate : rates) {
        out.push_back(std::exp(r.value() * rate) * brute_force_optimal(inst, alpha, rate, r).value);
    }
    return out;
}

} // namespace quant
