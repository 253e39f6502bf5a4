#include "smallsol/scheme.hpp"

#include "smallsol/error.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <numeric>
#include <sstream>

namespace smallsol {

std::string to_string(Regularity r) {
    switch (r) {
        case Regularity::regular: return "regular";
        case Regularity::ambiguous: return "ambiguous";
        case Regularity::empty: return "empty";
        case Regularity::degenerate_edge: return "degenerate-edge";
    }
    return "?";
}

std::string to_string(RealClass c) {
    switch (c) {
        case RealClass::real_both: return "real both";
        case RealClass::real_positive: return "real lambda>0";
        case RealClass::real_negative: return "real lambda<0";
        case RealClass::complex: return "complex";
        case RealClass::undetermined: return "undetermined";
    }
    return "?";
}

std::string to_string(FamilyVerdict v) {
    switch (v) {
        case FamilyVerdict::finite: return "finite";
        case FamilyVerdict::no_small_solutions: return "no small solutions";
        case FamilyVerdict::family: return "family";
        case FamilyVerdict::undetermined: return "undetermined";
    }
    return "?";
}

std::string ResidualValuation::str() const { return (lower_bound ? ">" : "") + value.str(); }

BuiltChain build_chain(const PolySystem& system, const TreeChain& delta) {
    const int n = system.level();
    if (n < 1) throw InputError("system has no unknowns");
    if (static_cast<int>(system.size()) != n) throw InputError("number of equations must equal number of unknowns");
    if (n >= 2) delta.validate(n);
    BuiltChain out;
    out.trees = delta;
    out.levels.resize(n + 1);
    PolySystem current = system.normalized();
    for (int k = n; k >= 1; --k) {
        if (!current.vanishes_at_origin()) {
            out.no_small_solutions_at = k;
            return out;
        }
        ChainLevel& lv = out.levels[k];
        lv.level = k;
        if (k == 1) {
            lv.system = current;
            lv.map = LinearMap::identity(1);
            break;
        }
        Regularized reg = regularize(current, k);
        lv.system = reg.system;
        lv.map = reg.map;
        lv.tree = delta.chain[n - k];
        current = tree_resultant_system(lv.system, *lv.tree, k);
    }
    return out;
}

namespace {

struct Slices {
    std::vector<UniJetPoly> polys;
    std::vector<std::vector<SliceRoot>> roots;
};

Order min_trunc(const std::vector<PuiseuxJet>& jets) {
    Order m = Order::infinity();
    for (const auto& j : jets) m = min(m, j.trunc());
    return m;
}

[[noreturn]] void need_longer_partial(const std::vector<PuiseuxJet>& partial) {
    Order have = min_trunc(partial);
    Order want = have.is_infinite() ? Order(1) : 2 * have + Order(1);
    throw TruncationError("extend partial branch", want.str());
}

// Coordinates of the level-k system's first k-1 unknowns.
std::vector<PuiseuxJet> level_coords(const BuiltChain& chain, int k, const std::vector<PuiseuxJet>& partial) {
    if (static_cast<int>(partial.size()) != k - 1) throw Error("partial branch has the wrong number of components");
    return chain.levels[k - 1].map.to_old(partial);
}

Slices compute_slices(const BuiltChain& chain, int k, const std::vector<PuiseuxJet>& partial, const Order& T) {
    if (k < 2 || k > chain.n()) throw Error("lift level out of range");
    const ChainLevel& lv = chain.levels[k];
    auto coords = level_coords(chain, k, partial);
    JetAssignment asg;
    for (int i = 1; i < k; ++i) asg[i] = coords[i - 1];
    Slices s;
    for (const auto& f : lv.system.equations()) {
        UniJetPoly g = jet_compose(f, asg, k);
        auto roots = slice_roots(g, T);
        for (const auto& r : roots)
            if (r.kind == RootKind::starved) need_longer_partial(partial);
        s.polys.push_back(std::move(g));
        s.roots.push_back(std::move(roots));
    }
    return s;
}

std::vector<PuiseuxJet> simple_jets(const std::vector<SliceRoot>& roots) {
    std::vector<PuiseuxJet> out;
    for (const auto& r : roots)
        if (r.kind == RootKind::simple && r.multiplicity == 1) out.push_back(r.jet);
    return out;
}

// Certifies `jet` against the slice with the smallest derivative order,
// extends it as far as the slices allow and checks every slice residual.
// nullopt when some slice is not annihilated.
std::optional<LevelCertificate> confirm(const Slices& s, int k, const PuiseuxJet& jet,
                                        const std::vector<PuiseuxJet>& partial, const Order& T,
                                        const Order& working) {
    std::optional<std::size_t> best;
    SimplicityCertificate best_cert;
    for (std::size_t i = 0; i < s.polys.size(); ++i) {
        std::optional<SimplicityCertificate> c;
        try {
            c = simplicity_certificate(s.polys[i], jet);
        } catch (const TruncationError&) {
            continue;
        }
        if (c && (!best || c->alpha_order < best_cert.alpha_order)) {
            best = i;
            best_cert = *c;
        }
    }
    if (!best) need_longer_partial(partial);
    Order reach = min(min_trunc(partial), working);
    if (reach.is_infinite()) reach = T;
    PuiseuxJet ext = extend_jet_within(s.polys[*best], jet, best_cert, max(reach, T));
    for (const auto& g : s.polys)
        if (!evaluate_at(g, ext).is_zero()) return std::nullopt;
    if (ext.trunc() < T) need_longer_partial(partial);
    return LevelCertificate{k, *best + 1, ext, best_cert};
}

std::optional<LiftOutcome> shortcut(const BuiltChain& chain, const Slices& s, int k,
                                    const std::vector<PuiseuxJet>& partial, const Order& T, const Order& working) {
    const auto& tree = chain.levels[k].tree;
    if (!tree) return std::nullopt;
    auto mu = multiple_vertices(*tree);
    if (mu.empty()) return std::nullopt;
    for (int v : mu) {
        const auto& roots = s.roots[v - 1];
        unsigned total = 0;
        for (const auto& r : roots) total += r.multiplicity;
        if (total != 1 || roots.front().kind != RootKind::simple) return std::nullopt;
    }
    const PuiseuxJet& jet = s.roots[mu.front() - 1].front().jet;
    for (int v : mu)
        if (!jets_agree(jet, s.roots[v - 1].front().jet, T)) return std::nullopt;
    auto lifted = confirm(s, k, jet, partial, T, working);
    if (!lifted) return std::nullopt;
    LiftOutcome out;
    out.report.level = k;
    out.report.status = Regularity::regular;
    out.report.method = "mu-shortcut";
    out.report.t = T;
    out.report.matched_jet = jet;
    out.lifted = std::move(lifted);
    return out;
}

LiftOutcome match(const Slices& s, int k, const std::vector<PuiseuxJet>& partial, const Order& T,
                  const Order& working) {
    std::vector<JetSet> sets;
    Order t0(0);
    for (std::size_t i = 0; i < s.roots.size(); ++i) {
        JetSet js;
        js.equation = i + 1;
        js.jets = simple_jets(s.roots[i]);
        for (const auto& j : js.jets) {
            try {
                if (auto c = simplicity_certificate(s.polys[i], j)) t0 = max(t0, Order(c->alpha_order));
            } catch (const TruncationError&) {
                t0 = T;
            }
        }
        sets.push_back(std::move(js));
    }
    LiftOutcome out;
    out.report.level = k;
    out.report.method = "matching";
    Order t = min(t0 + Order(1), T);
    if (t <= Order(0)) t = T;
    while (true) {
        std::vector<PuiseuxJet> common;
        for (const auto& j : sets.front().jets) {
            bool everywhere = true;
            for (std::size_t i = 1; i < sets.size() && everywhere; ++i)
                everywhere = std::any_of(sets[i].jets.begin(), sets[i].jets.end(),
                                         [&](const PuiseuxJet& o) { return jets_agree(j, o, t); });
            if (everywhere) common.push_back(j);
        }
        for (auto& js : sets) js.t = t;
        out.report.t = t;
        if (common.size() == 1) {
            out.lifted = confirm(s, k, common.front(), partial, T, working);
            if (out.lifted) {
                out.report.status = Regularity::regular;
                out.report.matched_jet = common.front();
            } else {
                out.report.status = Regularity::empty;
                out.report.jet_sets = sets;
            }
            return out;
        }
        if (common.empty()) {
            out.report.status = Regularity::empty;
            out.report.jet_sets = sets;
            return out;
        }
        if (t >= T) {
            out.report.status = Regularity::ambiguous;
            for (auto& j : common) out.report.witnesses.push_back(j.truncated(T));
            return out;
        }
        t = min(2 * t, T);
    }
}

}  // namespace

LiftOutcome lift_branch(const BuiltChain& chain, int k, const std::vector<PuiseuxJet>& partial, const Order& T,
                        const Order& working) {
    Slices s = compute_slices(chain, k, partial, T);
    if (auto sc = shortcut(chain, s, k, partial, T, working)) return *sc;
    return match(s, k, partial, T, working);
}

std::optional<LiftOutcome> check_mu_shortcut(const BuiltChain& chain, int k, const std::vector<PuiseuxJet>& partial,
                                             const Order& T, const Order& working) {
    Slices s = compute_slices(chain, k, partial, T);
    return shortcut(chain, s, k, partial, T, working);
}

std::vector<ResidualValuation> verify_residuals(const PolySystem& system, const std::vector<PuiseuxJet>& components,
                                                const Order& T) {
    if (static_cast<int>(components.size()) != system.level()) throw Error("branch has the wrong number of components");
    JetAssignment asg;
    for (int i = 1; i <= system.level(); ++i) asg[i] = components[i - 1];
    std::vector<ResidualValuation> out;
    for (std::size_t e = 0; e < system.size(); ++e) {
        PuiseuxJet r = jet_compose(system[e], asg);
        ResidualValuation v;
        if (r.is_zero()) {
            v.value = r.trunc();
            v.lower_bound = !r.trunc().is_infinite();
        } else {
            v.value = Order(r.exponent(0));
        }
        bool ok = v.lower_bound ? v.value >= T : v.value > T;
        if (!ok)
            throw Error("verification failed: residual of equation " + std::to_string(e + 1) + " has valuation " +
                        v.str() + ", not above " + T.str());
        out.push_back(v);
    }
    return out;
}

RealClass classify_realness(const std::vector<LevelCertificate>& certificates) {
    if (certificates.empty()) return RealClass::undetermined;
    long R = 1;
    for (const auto& c : certificates) {
        if (c.component.trunc() < Order(c.cert.alpha_order))
            throw TruncationError("extend first", Order(c.cert.alpha_order).str());
        R = lcm_ram(R, c.component.normalized().ram());
    }
    // Terms that decide realness: at least the first r of each component
    // (all further terms follow from real data), and every computed term so
    // that a non-real coefficient further out is never overlooked.
    struct Term {
        long num;  // exponent * R
        Coefficient coef;
    };
    std::vector<Term> terms;
    for (const auto& c : certificates) {
        PuiseuxJet j = c.component.normalized();
        for (std::size_t i = 0; i < j.terms().size(); ++i)
            terms.push_back({j.terms()[i].num * (R / j.ram()), j.terms()[i].coef});
    }
    bool positive = std::all_of(terms.begin(), terms.end(), [](const Term& t) { return t.coef.is_real(); });
    const unsigned bits = working_bits();
    const Real pi = boost::math::constants::pi<Real>();
    bool negative = false;
    for (long k = 1; k < 2 * R && !negative; k += 2) {
        negative = std::all_of(terms.begin(), terms.end(), [&](const Term& t) {
            // lambda^(num/R) on lambda < 0 with lambda^(1/R) = |lambda|^(1/R) e^(i pi k / R).
            long turns = (t.num * k) % (2 * R);
            if (turns < 0) turns += 2 * R;
            Coefficient rot;
            if (turns == 0) rot = Coefficient(1);
            else if (turns == R) rot = Coefficient(-1);
            else if (2 * turns == R) rot = Coefficient(GaussRational(0, 1));
            else if (2 * turns == 3 * R) rot = Coefficient(GaussRational(0, -1));
            else rot = Coefficient::numeric(Complex::polar(Real(1), pi * Real(turns) / Real(R)), bits);
            Coefficient v = t.coef;
            if (!rot.is_exact() && v.is_exact()) v = v.to_numeric(bits);
            if (!v.is_exact() && rot.is_exact()) rot = rot.to_numeric(v.bits());
            return (v * rot).is_real();
        });
    }
    if (positive && negative) return RealClass::real_both;
    if (positive) return RealClass::real_positive;
    if (negative) return RealClass::real_negative;
    return RealClass::complex;
}

namespace {

struct ChainRun {
    std::vector<SolutionBranch> branches;
    std::vector<AmbiguityWitness> ambiguities;
    std::vector<std::string> notes;
    bool needs_more = false;
    bool no_small = false;
};

// Drops real or imaginary parts of numeric coefficients that are below the
// tolerance of their precision, so real values print as real.
PuiseuxJet cleaned(const PuiseuxJet& jet) {
    if (!jet.has_numeric()) return jet;
    std::vector<JetTerm> terms;
    for (const auto& t : jet.terms()) {
        if (t.coef.is_exact()) {
            terms.push_back(t);
            continue;
        }
        Numeric v = t.coef.num();
        Real s = v.z.abs();
        if (s < 1) s = 1;
        const Real tol = tolerance(v.bits) * s;
        if (abs(v.z.im) <= tol) v.z.im = 0;
        if (abs(v.z.re) <= tol) v.z.re = 0;
        if (v.z.re != 0 || v.z.im != 0) terms.push_back({t.num, Coefficient(v)});
    }
    return PuiseuxJet(jet.ram(), std::move(terms), jet.trunc());
}

std::string level_tag(const std::string& label, int level) {
    return "chain " + (label.empty() ? std::string("-") : label) + ", level " + std::to_string(level);
}

ChainRun run_chain(const PolySystem& original, const BuiltChain& chain, const Order& T, const Order& W) {
    ChainRun run;
    const std::string label = chain.trees.str();
    if (chain.no_small_solutions_at) {
        run.no_small = true;
        run.notes.push_back(level_tag(label, chain.no_small_solutions_at) +
                            ": an equation does not vanish at the origin, no small solutions");
        return run;
    }
    const int n = chain.n();
    const MultiPoly& f1 = chain.levels[1].system[0];
    auto base = puiseux_branches(f1, W);
    if (base.empty()) {
        run.no_small = true;
        run.notes.push_back(level_tag(label, 1) + ": the eliminated equation has no small roots");
        return run;
    }
    for (const auto& root : base) {
        const std::string where = level_tag(label, 1) + ", base root " + root.jet.truncated(T).str();
        if (root.kind != RootKind::simple || root.multiplicity != 1) {
            run.notes.push_back(where + ": multiplicity " + std::to_string(root.multiplicity) +
                                ", not simple, not effectively computable");
            continue;
        }
        std::optional<SimplicityCertificate> cert;
        try {
            cert = simplicity_certificate(f1, root.jet);
        } catch (const TruncationError&) {
            run.needs_more = true;
            continue;
        }
        if (!cert) {
            run.notes.push_back(where + ": no simplicity certificate");
            continue;
        }
        SolutionBranch b;
        RegularityReport r1;
        r1.level = 1;
        r1.status = Regularity::regular;
        r1.method = "scalar";
        r1.t = T;
        r1.matched_jet = root.jet;
        b.reports.push_back(r1);
        b.certificates.push_back(LevelCertificate{1, 1, root.jet, *cert});
        std::vector<PuiseuxJet> partial{root.jet};
        bool complete = true;
        for (int k = 2; k <= n && complete; ++k) {
            LiftOutcome out;
            try {
                out = lift_branch(chain, k, partial, T, W);
            } catch (const TruncationError&) {
                run.needs_more = true;
                complete = false;
                break;
            }
            b.reports.push_back(out.report);
            if (out.report.status == Regularity::ambiguous) {
                AmbiguityWitness w;
                w.chain = label;
                w.level = k;
                for (const auto& p : partial) w.partial.push_back(p.truncated(T));
                w.common = out.report.witnesses;
                run.ambiguities.push_back(std::move(w));
                run.notes.push_back(level_tag(label, k) + ": ambiguous lift, " +
                                    std::to_string(out.report.witnesses.size()) + " common jets at order " +
                                    T.str());
                complete = false;
            } else if (out.report.status != Regularity::regular) {
                run.notes.push_back(level_tag(label, k) + ": no common simple root for base root " +
                                    root.jet.truncated(T).str());
                complete = false;
            } else {
                partial = chain.levels[k - 1].map.to_old(partial);
                partial.push_back(out.lifted->component);
                b.certificates.push_back(*out.lifted);
            }
        }
        if (!complete) continue;
        auto comps = chain.levels[n].map.to_old(partial);
        long ram = 1;
        for (auto& c : comps) {
            c = cleaned(c.truncated(T).normalized());
            ram = lcm_ram(ram, c.ram());
        }
        try {
            b.residual_valuations = verify_residuals(original, comps, T);
        } catch (const TruncationError&) {
            run.needs_more = true;
            continue;
        } catch (const Error& e) {
            run.notes.push_back(level_tag(label, n) + ": branch withheld, " + e.what());
            continue;
        }
        b.components = std::move(comps);
        b.ram = ram;
        for (auto& c : b.certificates)
            c.component = cleaned(c.component.truncated(max(T, Order(c.cert.alpha_order))));
        b.real_class = classify_realness(b.certificates);
        b.provenance.push_back(label);
        run.branches.push_back(std::move(b));
    }
    return run;
}

bool same_branch(const SolutionBranch& a, const SolutionBranch& b, const Order& T) {
    if (a.components.size() != b.components.size()) return false;
    for (std::size_t i = 0; i < a.components.size(); ++i)
        if (a.components[i].normalized().ram() != b.components[i].normalized().ram() ||
            !jets_agree(a.components[i], b.components[i], T))
            return false;
    return true;
}

int compare_branches(const SolutionBranch& a, const SolutionBranch& b) {
    for (std::size_t i = 0; i < a.components.size() && i < b.components.size(); ++i)
        if (int c = compare_jets(a.components[i], b.components[i])) return c;
    return 0;
}

}  // namespace

SolveReport solve_effective(const PolySystem& system, const SolveOptions& options) {
    const int n = system.level();
    if (n < 1) throw InputError("system has no unknowns");
    if (static_cast<int>(system.size()) != n)
        throw InputError("the number of equations must coincide with the number of unknowns");
    if (!system.is_exact()) throw InputError("elimination needs exact coefficients");
    const Order& T = options.order;
    if (T.is_infinite() || T <= Order(0)) throw InputError("target order must be positive and finite");

    std::vector<TreeChain> chains;
    switch (options.strategy) {
        case ChainStrategy::first: chains.push_back(n >= 2 ? first_chain(n) : TreeChain{}); break;
        case ChainStrategy::all: chains = enumerate_chains(n); break;
        case ChainStrategy::explicit_chains:
            chains = options.chains;
            if (chains.empty()) throw InputError("no tree chain given");
            break;
    }

    SolveReport report;
    for (const auto& delta : chains) {
        const std::string label = delta.str();
        BuiltChain chain;
        try {
            chain = build_chain(system, delta);
        } catch (const DegenerateEdgeError& e) {
            report.degenerate_edge = true;
            report.errors.push_back("chain " + label + ": " + e.what() + "; try another tree");
            continue;
        } catch (const InputError&) {
            throw;
        } catch (const Error& e) {
            report.errors.push_back("chain " + label + ": " + e.what());
            continue;
        }
        ChainRun run;
        Order W = T;
        try {
            for (int round = 0;; ++round) {
                run = run_chain(system, chain, T, W);
                if (!run.needs_more || round >= options.escalations) break;
                W = 2 * W + Order(1);
            }
        } catch (const Error& e) {
            report.errors.push_back("chain " + label + ": " + e.what());
            continue;
        }
        if (run.needs_more)
            report.notes.push_back("chain " + label + ": some branches need more than working order " + W.str());
        report.no_small_solutions = report.no_small_solutions || run.no_small;
        for (auto& note : run.notes) report.notes.push_back(std::move(note));
        for (auto& w : run.ambiguities) report.ambiguities.push_back(std::move(w));
        for (auto& b : run.branches) {
            auto it = std::find_if(report.branches.begin(), report.branches.end(),
                                   [&](const SolutionBranch& o) { return same_branch(o, b, T); });
            if (it == report.branches.end()) report.branches.push_back(std::move(b));
            else it->provenance.push_back(label);
        }
    }
    std::stable_sort(report.branches.begin(), report.branches.end(),
                     [](const SolutionBranch& a, const SolutionBranch& b) { return compare_branches(a, b) < 0; });
    return report;
}

FamilyReport detect_families(const PolySystem& system) {
    const int n = system.level();
    if (static_cast<int>(system.size()) < n) throw InputError("fewer equations than unknowns");
    FamilyReport rep;
    PolySystem current = system.normalized();
    for (int k = n; k >= 1; --k) {
        if (!current.vanishes_at_origin()) {
            rep.verdict = FamilyVerdict::no_small_solutions;
            rep.detail = "an equation at level " + std::to_string(k) + " does not vanish at the origin";
            return rep;
        }
        if (k >= 2) current = regularize(current, k).system;
        LevelGcd lg;
        lg.level = k;
        if (current.size() >= 2) {
            std::vector<UniView> views;
            for (const auto& f : current.equations()) views.emplace_back(f, k);
            lg.gcd = gcd_report(views);
        } else {
            const MultiPoly& f = current[0];
            lg.gcd.degree = f.degree(k);
            lg.gcd.gcd_witness = f;
            MultiPoly restricted = f;
            for (int i = 0; i <= n; ++i)
                if (i != k) restricted = restricted.at_zero(i);
            lg.gcd.small_degree = restricted.is_zero() ? lg.gcd.degree : restricted.valuation(k);
        }
        rep.levels.push_back(lg);
        if (k == 1) {
            bool finite = lg.gcd.degree > 0 && lg.gcd.small_degree > 0;
            rep.verdict = finite ? FamilyVerdict::finite : FamilyVerdict::no_small_solutions;
            rep.detail = "final gcd degree " + std::to_string(lg.gcd.degree) + ", small roots " +
                         std::to_string(lg.gcd.small_degree);
            return rep;
        }
        if (lg.gcd.degree > 0) {
            if (lg.gcd.small_degree > 0) {
                rep.verdict = FamilyVerdict::family;
                rep.family_level = k;
                rep.detail = "common factor " + lg.gcd.gcd_witness->str() + " through the origin at level " +
                             std::to_string(k);
                return rep;
            }
            // The shared factor has no small zeros: drop it and continue.
            std::vector<MultiPoly> reduced;
            for (const auto& f : current.equations()) reduced.push_back(divide_exact(f, *lg.gcd.gcd_witness));
            current = PolySystem(std::move(reduced), k).normalized();
            if (!current.vanishes_at_origin()) {
                rep.verdict = FamilyVerdict::no_small_solutions;
                rep.detail = "after removing the common factor at level " + std::to_string(k) +
                             " an equation does not vanish at the origin";
                return rep;
            }
        }
        std::vector<MultiPoly> next;
        for (std::size_t a = 0; a < current.size(); ++a)
            for (std::size_t b = a + 1; b < current.size(); ++b) {
                MultiPoly r = resultant(UniView(current[a], k), UniView(current[b], k));
                if (!r.is_zero()) next.push_back(normalize_lambda(r).first.remove_var(k));
            }
        if (next.empty()) {
            rep.verdict = FamilyVerdict::undetermined;
            rep.detail = "every pairwise resultant vanishes at level " + std::to_string(k);
            return rep;
        }
        current = PolySystem(std::move(next), k - 1);
    }
    return rep;
}

NumericCheck verify_numeric(const PolySystem& system, const SolutionBranch& branch, const Complex& lambda) {
    const int n = system.level();
    NumericCheck out;
    out.lambda = lambda;
    for (const auto& c : branch.components) out.jet_value.push_back(c.evaluate(lambda));
    std::vector<std::vector<MultiPoly>> jac(system.size());
    for (std::size_t i = 0; i < system.size(); ++i)
        for (int j = 1; j <= n; ++j) jac[i].push_back(system[i].derivative(j));
    std::vector<Complex> x = out.jet_value;
    const Real eps = pow(Real(2), -static_cast<int>(working_bits()) * 7 / 8);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Complex> point{lambda};
        point.insert(point.end(), x.begin(), x.end());
        // Augmented matrix [J | -F], solved by Gaussian elimination with partial pivoting.
        std::vector<std::vector<Complex>> a(n, std::vector<Complex>(n + 1));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) a[i][j] = jac[i][j].evaluate(point);
            a[i][n] = -system[i].evaluate(point);
        }
        bool singular = false;
        for (int c = 0; c < n && !singular; ++c) {
            int piv = c;
            for (int r = c + 1; r < n; ++r)
                if (a[r][c].abs() > a[piv][c].abs()) piv = r;
            if (a[piv][c].abs() == 0) singular = true;
            std::swap(a[c], a[piv]);
            for (int r = c + 1; r < n && !singular; ++r) {
                Complex f = a[r][c] / a[c][c];
                for (int j = c; j <= n; ++j) a[r][j] -= f * a[c][j];
            }
        }
        if (singular) break;
        std::vector<Complex> dx(n);
        for (int i = n - 1; i >= 0; --i) {
            Complex s = a[i][n];
            for (int j = i + 1; j < n; ++j) s -= a[i][j] * dx[j];
            dx[i] = s / a[i][i];
        }
        Real step(0), size(1);
        for (int i = 0; i < n; ++i) {
            x[i] += dx[i];
            step = max(step, dx[i].abs());
            size = max(size, x[i].abs());
        }
        if (step <= eps * size) {
            out.converged = true;
            break;
        }
    }
    out.root = x;
    for (int i = 0; i < n; ++i) out.distance = max(out.distance, (x[i] - out.jet_value[i]).abs());
    return out;
}

}  // namespace smallsol
