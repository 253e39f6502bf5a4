#include "smallsol/app.hpp"

#include <ostream>
#include <sstream>

namespace smallsol {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

Tree parse_code(const std::string& text, int vertices) {
    std::vector<int> code;
    if (text != "-") {
        for (const auto& part : split(text, '.')) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(part, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (part.empty() || used != part.size()) throw InputError("bad Prüfer code entry '" + part + "'");
            code.push_back(v);
        }
    }
    try {
        return Tree::from_prufer(vertices, code);
    } catch (const InputError&) {
        throw;
    } catch (const Error& e) {
        throw InputError(std::string("tree on ") + std::to_string(vertices) + " vertices: " + e.what());
    }
}

Complex parse_lambda(const std::string& s) {
    try {
        std::size_t used = 0;
        (void)std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw InputError("--verify-numeric expects real numbers, got '" + s + "'");
    }
    return Complex(Real(s), Real(0));
}

}  // namespace

std::vector<TreeChain> parse_tree_chains(const std::string& text, int n) {
    std::vector<TreeChain> out;
    for (const auto& chain_text : split(text, ';')) {
        auto levels = split(chain_text, ',');
        if (static_cast<int>(levels.size()) != n - 1)
            throw InputError("tree chain '" + chain_text + "' needs " + std::to_string(n - 1) +
                             " levels (one Prüfer code per level n..2)");
        TreeChain c;
        for (int i = 0; i < n - 1; ++i) c.chain.push_back(parse_code(levels[i], n - i));
        out.push_back(std::move(c));
    }
    if (out.empty()) throw InputError("no tree chain given");
    return out;
}

RunReport run_pipeline(const AppOptions& opt) {
    RunReport rep;
    rep.precision = opt.precision;
    rep.trees = opt.trees;
    rep.real_only = opt.real_only;
    rep.order = Order(opt.order);
    try {
        if (opt.precision < 64 || opt.precision > 65536) throw InputError("precision must lie in 64..65536 bits");
        PrecisionScope scope(opt.precision);
        SystemFile file = opt.input_text.empty() ? load_system_file(opt.input) : parse_system_file(opt.input_text);
        rep.variables = file.variables;
        const int n = file.unknowns();
        if (static_cast<int>(file.system.size()) != n)
            throw InputError("the system has " + std::to_string(file.system.size()) + " equations in " +
                             std::to_string(n) +
                             " unknowns; only determined systems are handled (the number of equations must "
                             "coincide with the number of unknowns)");
        if (opt.order < 1) throw InputError("--order must be positive");
        if (file.input_order && opt.order > *file.input_order)
            throw InputError("--order " + std::to_string(opt.order) + " exceeds the truncation order " +
                             std::to_string(*file.input_order) + " of the input equations");
        std::vector<Complex> lambdas;
        for (const auto& s : opt.verify_lambdas) lambdas.push_back(parse_lambda(s));

        SolveOptions so;
        so.order = rep.order;
        if (opt.trees == "first") so.strategy = ChainStrategy::first;
        else if (opt.trees == "all") {
            if (n > 8) throw InputError("--trees all is limited to at most 8 unknowns");
            so.strategy = ChainStrategy::all;
        }
        else {
            if (n < 2) throw InputError("--trees with explicit codes needs at least two unknowns");
            so.strategy = ChainStrategy::explicit_chains;
            so.chains = parse_tree_chains(opt.trees, n);
        }

        if (opt.families) {
            rep.families = detect_families(file.system);
            if (rep.families->verdict == FamilyVerdict::family) {
                rep.exit_code = exit_family;
                rep.status = "family";
                rep.messages.push_back("a family of solutions through the origin: branches are not emitted");
                return rep;
            }
        }
        rep.solve = solve_effective(file.system, so);
        for (const auto& b : rep.solve->branches) {
            std::vector<NumericCheck> checks;
            for (const auto& l : lambdas) checks.push_back(verify_numeric(file.system, b, l));
            rep.numeric.push_back(std::move(checks));
        }
        if (!rep.solve->branches.empty()) {
            rep.exit_code = exit_branches;
            rep.status = "branches";
        } else if (rep.solve->no_small_solutions ||
                   (rep.families && rep.families->verdict == FamilyVerdict::no_small_solutions)) {
            rep.exit_code = exit_no_small_solutions;
            rep.status = "no small solutions";
        } else {
            if (rep.solve->degenerate_edge && !rep.families) rep.families = detect_families(file.system);
            if (rep.families && rep.families->verdict == FamilyVerdict::family) {
                rep.exit_code = exit_family;
                rep.status = "family";
            } else {
                rep.exit_code = exit_no_certificate;
                rep.status = rep.solve->ambiguities.empty() ? "no certificate" : "ambiguous";
            }
            if (rep.solve->degenerate_edge) rep.messages.push_back("a tree edge was degenerate; try another tree");
        }
    } catch (const InputError& e) {
        rep.exit_code = exit_input_error;
        rep.status = "input error";
        rep.messages.push_back(e.what());
        rep.solve.reset();
        rep.families.reset();
    }
    return rep;
}

int run_app(const AppOptions& opt, std::ostream& out, std::ostream& err) {
    RunReport rep;
    try {
        rep = run_pipeline(opt);
    } catch (const std::exception& e) {
        err << "smallsol: internal error: " << e.what() << "\n";
        return exit_no_certificate;
    }
    if (rep.exit_code == exit_input_error)
        for (const auto& m : rep.messages) err << "smallsol: " << m << "\n";
    PrecisionScope scope(opt.precision >= 64 && opt.precision <= 65536 ? opt.precision : kDefaultBits);
    out << (opt.format == "machine" ? render_machine(rep) : render_text(rep));
    return rep.exit_code;
}

}  // namespace smallsol
