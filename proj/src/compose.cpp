#include "smallsol/compose.hpp"

#include "smallsol/error.hpp"

#include <sstream>

namespace smallsol {

namespace {

using Grid = std::map<long, Coefficient>;

Grid multiply(const Grid& a, const Grid& b, long limit) {
    SeriesAccumulator acc;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            if (ea + eb > limit) break;
            acc.add(ea + eb, ca * cb);
        }
    }
    return acc.finish();
}

struct Input {
    Grid known;       // terms on the common grid
    Order w;          // valuation of the known part, or trunc if none
    Order trunc;
    bool vanishes;    // identically zero
    std::vector<Grid> powers;
};

struct Plan {
    Order bound = Order::infinity();
    bool used = false;
};

// Shared core: returns one jet per power of the free unknown (a single slot
// when there is none).
std::vector<PuiseuxJet> compose_core(const MultiPoly& f, const JetAssignment& assignment, int free_var,
                                     const ComposeOptions& opts) {
    const int n = f.nvars();
    long R = 1;
    for (int i = 1; i <= n; ++i) {
        if (i == free_var || !f.depends_on(i)) continue;
        auto it = assignment.find(i);
        if (it == assignment.end()) throw Error("jet_compose: unknown x" + std::to_string(i) + " has no jet");
        R = lcm_ram(R, it->second.ram());
    }

    std::vector<Input> in(n + 1);
    for (int i = 1; i <= n; ++i) {
        if (i == free_var || !f.depends_on(i)) continue;
        const PuiseuxJet& j = assignment.at(i);
        Input& x = in[i];
        for (const auto& t : j.terms()) x.known.emplace(t.num * (R / j.ram()), t.coef);
        x.w = j.valuation_bound();
        x.trunc = j.trunc();
        x.vanishes = j.is_identically_zero();
    }

    unsigned slots = free_var > 0 ? f.degree(free_var) + 1 : 1;
    std::vector<Plan> plan(slots);

    // Error bound of each monomial: a + min_i (T_i + (k_i - 1) w_i + sum_{j != i} k_j w_j).
    auto monomial_bound = [&](const Exponent& e) {
        Order best = Order::infinity();
        for (int i = 1; i <= n; ++i) {
            if (i == free_var || e[i] == 0) continue;
            Order b = in[i].trunc + static_cast<long>(e[i] - 1) * in[i].w;
            for (int j = 1; j <= n; ++j)
                if (j != i && j != free_var && e[j] > 0) b = b + static_cast<long>(e[j]) * in[j].w;
            best = min(best, b);
        }
        return Order(static_cast<long>(e[0])) + best;
    };
    auto vanishes = [&](const Exponent& e) {
        for (int i = 1; i <= n; ++i)
            if (i != free_var && e[i] > 0 && in[i].vanishes) return true;
        return false;
    };

    for (const auto& [e, c] : f.terms()) {
        if (vanishes(e)) continue;
        Plan& p = plan[free_var > 0 ? e[free_var] : 0];
        p.bound = min(p.bound, monomial_bound(e));
        p.used = true;
    }

    Order global = Order(0);
    bool any_finite = false;
    for (auto& p : plan) {
        p.bound = min(p.bound, opts.cap);
        if (p.used && !p.bound.is_infinite()) {
            global = any_finite ? max(global, p.bound) : p.bound;
            any_finite = true;
        }
    }
    bool all_infinite = true;
    for (const auto& p : plan) all_infinite = all_infinite && (!p.used || p.bound.is_infinite());
    long global_limit = all_infinite ? grid_floor(Order::infinity(), R) : grid_floor(global, R);

    auto power = [&](int i, unsigned k) -> const Grid& {
        auto& pw = in[i].powers;
        if (pw.empty()) pw.push_back(Grid{{0, Coefficient(1)}});
        while (pw.size() <= k) pw.push_back(multiply(pw.back(), in[i].known, global_limit));
        return pw[k];
    };

    std::vector<SeriesAccumulator> acc(slots);
    for (const auto& [e, c] : f.terms()) {
        if (vanishes(e)) continue;
        unsigned slot = free_var > 0 ? e[free_var] : 0;
        long limit = grid_floor(plan[slot].bound, R);
        long shift = static_cast<long>(e[0]) * R;
        if (shift > limit) continue;
        Grid prod{{shift, c}};
        for (int i = 1; i <= n && !prod.empty(); ++i) {
            if (i == free_var || e[i] == 0) continue;
            prod = multiply(prod, power(i, e[i]), limit);
        }
        for (const auto& [x, v] : prod) acc[slot].add(x, v);
    }

    std::vector<PuiseuxJet> out;
    out.reserve(slots);
    for (unsigned k = 0; k < slots; ++k) {
        std::vector<JetTerm> terms;
        for (auto& [x, v] : acc[k].finish()) terms.push_back({x, v});
        PuiseuxJet j(R, std::move(terms), plan[k].used ? plan[k].bound : Order::infinity());
        if (j.trunc() < opts.need)
            throw TruncationError("jet_compose: result known only to order " + j.trunc().str(), opts.need.str());
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace

PuiseuxJet jet_compose(const MultiPoly& f, const JetAssignment& assignment, const ComposeOptions& opts) {
    return compose_core(f, assignment, 0, opts).front();
}

UniJetPoly jet_compose(const MultiPoly& f, const JetAssignment& assignment, int free_var, const ComposeOptions& opts) {
    if (free_var < 1 || free_var > f.nvars()) throw Error("jet_compose: free unknown out of range");
    return UniJetPoly{free_var, compose_core(f, assignment, free_var, opts)};
}

std::string UniJetPoly::str(const std::string& name) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_identically_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "[" << coeffs[k].str() << "]";
        if (k > 0) os << "*" << name << (k > 1 ? "^" + std::to_string(k) : "");
    }
    return first ? "0" : os.str();
}

}  // namespace smallsol
