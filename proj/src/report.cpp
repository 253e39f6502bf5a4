#include "smallsol/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <iomanip>

#include <sstream>

namespace smallsol {

using Json = nlohmann::ordered_json;

namespace {

int decimal_digits(unsigned bits) { return static_cast<int>(bits * 0.30103) + 2; }

Json coefficient_json(const Coefficient& c) {
    if (c.is_exact()) {
        const auto& g = c.exact();
        if (sgn(g.im) == 0) return rational_str(g.re);
        return Json::array({rational_str(g.re), rational_str(g.im)});
    }
    const auto& z = c.num();
    const int d = decimal_digits(z.bits);
    return Json{{"re", real_str(z.z.re, d)}, {"im", real_str(z.z.im, d)}, {"bits", z.bits}};
}

Coefficient coefficient_from(const Json& j) {
    if (j.is_string()) return Coefficient(parse_rational(j.get<std::string>()));
    if (j.is_array() && j.size() == 2)
        return Coefficient(GaussRational(parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>())));
    if (j.is_object()) {
        const unsigned bits = j.at("bits").get<unsigned>();
        PrecisionScope scope(bits);
        return Coefficient::numeric(Complex(Real(j.at("re").get<std::string>()), Real(j.at("im").get<std::string>())),
                                    bits);
    }
    throw InputError("unrecognized coefficient in report");
}

Json jet_json(const PuiseuxJet& jet) {
    Json terms = Json::array();
    for (std::size_t i = 0; i < jet.terms().size(); ++i)
        terms.push_back(Json{{"exponent", rational_str(jet.exponent(i))}, {"coefficient", coefficient_json(jet.terms()[i].coef)}});
    return Json{{"ramification", jet.ram()}, {"trunc", jet.trunc().str()}, {"terms", terms}};
}

PuiseuxJet jet_from(const Json& j) {
    const long ram = j.at("ramification").get<long>();
    const std::string t = j.at("trunc").get<std::string>();
    Order trunc = t == "inf" ? Order::infinity() : Order(parse_rational(t));
    std::vector<JetTerm> terms;
    for (const auto& term : j.at("terms")) {
        mpq_class e = parse_rational(term.at("exponent").get<std::string>()) * ram;
        e.canonicalize();
        if (e.get_den() != 1) throw InputError("exponent off the ramification grid in report");
        terms.push_back({e.get_num().get_si(), coefficient_from(term.at("coefficient"))});
    }
    return PuiseuxJet(ram, std::move(terms), trunc);
}

const std::string& unknown_name(const RunReport& r, std::size_t i) { return r.variables.at(i + 1); }

Json family_json(const FamilyReport& f) {
    Json levels = Json::array();
    for (const auto& lg : f.levels) {
        Json l{{"level", lg.level}, {"gcd_degree", lg.gcd.degree}, {"small_degree", lg.gcd.small_degree}};
        if (lg.gcd.gcd_witness && lg.gcd.degree > 0) l["witness"] = lg.gcd.gcd_witness->str();
        levels.push_back(l);
    }
    Json out{{"verdict", to_string(f.verdict)}};
    if (f.verdict == FamilyVerdict::family) out["level"] = f.family_level;
    out["detail"] = f.detail;
    out["levels"] = levels;
    return out;
}

std::string numeric_str(const Real& x) { return real_str(x, 6); }

std::string complex_str(const Complex& z) {
    if (z.im == 0) return numeric_str(z.re);
    return "(" + numeric_str(z.re) + "," + numeric_str(z.im) + ")";
}

}  // namespace

std::vector<const SolutionBranch*> emitted_branches(const RunReport& report) {
    std::vector<const SolutionBranch*> out;
    if (!report.solve) return out;
    for (const auto& b : report.solve->branches) {
        if (report.real_only && (b.real_class == RealClass::complex || b.real_class == RealClass::undetermined))
            continue;
        out.push_back(&b);
    }
    return out;
}

std::string render_machine(const RunReport& r) {
    Json doc;
    doc["schema_version"] = kReportSchema;
    doc["status"] = r.status;
    doc["exit_code"] = r.exit_code;
    doc["variables"] = r.variables;
    doc["order"] = r.order.str();
    doc["trees"] = r.trees;
    doc["precision"] = r.precision;
    doc["real_only"] = r.real_only;
    doc["messages"] = r.messages;
    if (r.families) doc["families"] = family_json(*r.families);
    Json branches = Json::array();
    if (r.solve) {
        const auto emitted = emitted_branches(r);
        for (std::size_t bi = 0; bi < r.solve->branches.size(); ++bi) {
            const SolutionBranch& b = r.solve->branches[bi];
            if (std::find(emitted.begin(), emitted.end(), &b) == emitted.end()) continue;
            Json comps = Json::array();
            for (std::size_t i = 0; i < b.components.size(); ++i) {
                Json c{{"variable", unknown_name(r, i)}};
                c.update(jet_json(b.components[i]));
                comps.push_back(c);
            }
            Json levels = Json::array();
            for (std::size_t k = 0; k < b.reports.size(); ++k) {
                const auto& rep = b.reports[k];
                const auto& cert = b.certificates.at(k);
                levels.push_back(Json{{"level", rep.level},
                                      {"status", to_string(rep.status)},
                                      {"method", rep.method},
                                      {"matching_order", rep.t.str()},
                                      {"certified_by_equation", cert.equation},
                                      {"defining_number", cert.cert.r},
                                      {"derivative_order", rational_str(cert.cert.alpha_order)}});
            }
            Json residuals = Json::array();
            for (const auto& v : b.residual_valuations) residuals.push_back(v.str());
            Json bj{{"ramification", b.ram},
                    {"components", comps},
                    {"real_class", to_string(b.real_class)},
                    {"residual_valuations", residuals},
                    {"levels", levels},
                    {"provenance", b.provenance}};
            if (bi < r.numeric.size() && !r.numeric[bi].empty()) {
                Json checks = Json::array();
                for (const auto& nc : r.numeric[bi])
                    checks.push_back(Json{{"lambda", complex_str(nc.lambda)},
                                          {"converged", nc.converged},
                                          {"distance", numeric_str(nc.distance)}});
                bj["numeric"] = checks;
            }
            branches.push_back(bj);
        }
        Json amb = Json::array();
        for (const auto& w : r.solve->ambiguities) {
            Json partial = Json::array(), common = Json::array();
            for (const auto& p : w.partial) partial.push_back(jet_json(p));
            for (const auto& c : w.common) common.push_back(jet_json(c));
            amb.push_back(Json{{"chain", w.chain}, {"level", w.level}, {"partial", partial}, {"common_jets", common}});
        }
        doc["branches"] = branches;
        doc["ambiguities"] = amb;
        doc["notes"] = r.solve->notes;
        doc["errors"] = r.solve->errors;
    } else {
        doc["branches"] = branches;
    }
    return doc.dump(2) + "\n";
}

std::vector<std::vector<PuiseuxJet>> parse_machine_branches(const std::string& document) {
    Json doc = Json::parse(document);
    if (doc.at("schema_version") != kReportSchema) throw InputError("unsupported report schema");
    std::vector<std::vector<PuiseuxJet>> out;
    for (const auto& b : doc.at("branches")) {
        std::vector<PuiseuxJet> comps;
        for (const auto& c : b.at("components")) comps.push_back(jet_from(c));
        out.push_back(std::move(comps));
    }
    return out;
}

std::string render_text(const RunReport& r) {
    std::ostringstream os;
    os << "status: " << r.status << " (exit " << r.exit_code << ")\n";
    os << "order " << r.order.str() << ", trees " << r.trees << ", precision " << r.precision << " bits\n";
    for (const auto& m : r.messages) os << "! " << m << "\n";
    if (r.families) {
        os << "\nfamily analysis: " << to_string(r.families->verdict);
        if (r.families->verdict == FamilyVerdict::family) os << " at level " << r.families->family_level;
        os << "\n  " << r.families->detail << "\n";
        for (const auto& lg : r.families->levels) {
            os << "  level " << lg.level << ": gcd degree " << lg.gcd.degree << ", small roots " << lg.gcd.small_degree;
            if (lg.gcd.gcd_witness && lg.gcd.degree > 0) os << ", factor " << lg.gcd.gcd_witness->str();
            os << "\n";
        }
    }
    if (!r.solve) return os.str();
    const auto emitted = emitted_branches(r);
    os << "\n" << emitted.size() << " branch" << (emitted.size() == 1 ? "" : "es") << "\n";
    std::size_t index = 0;
    for (std::size_t bi = 0; bi < r.solve->branches.size(); ++bi) {
        const SolutionBranch& b = r.solve->branches[bi];
        if (std::find(emitted.begin(), emitted.end(), &b) == emitted.end()) continue;
        os << "\nbranch " << ++index << ": ramification " << b.ram << ", " << to_string(b.real_class) << "\n";
        for (std::size_t i = 0; i < b.components.size(); ++i) {
            const auto& c = b.components[i];
            os << "  " << unknown_name(r, i) << " = " << c.str(r.variables[0]) << "\n";
            os << "      exponent  coefficient\n";
            for (std::size_t t = 0; t < c.terms().size(); ++t)
                os << "      " << std::left << std::setw(9) << rational_str(c.exponent(t)) << " "
                   << c.terms()[t].coef.str() << "\n";
        }
        os << "  residual valuations:";
        for (const auto& v : b.residual_valuations) os << " " << v.str();
        os << "\n  certificates:\n";
        for (std::size_t k = 0; k < b.reports.size(); ++k) {
            const auto& rep = b.reports[k];
            const auto& cert = b.certificates.at(k);
            os << "    level " << rep.level << ": " << to_string(rep.status) << " by " << rep.method << " at t = "
               << rep.t.str() << ", equation " << cert.equation << ", r = " << cert.cert.r
               << ", df/dx order " << rational_str(cert.cert.alpha_order) << "\n";
        }
        os << "  chains:";
        for (const auto& p : b.provenance) os << " " << p;
        os << "\n";
        if (bi < r.numeric.size())
            for (const auto& nc : r.numeric[bi])
                os << "  newton at " << r.variables[0] << " = " << complex_str(nc.lambda) << ": "
                   << (nc.converged ? "converged" : "did not converge") << ", distance " << numeric_str(nc.distance)
                   << "\n";
    }
    for (const auto& w : r.solve->ambiguities) {
        os << "\nambiguity (chain " << w.chain << ", level " << w.level << "): " << w.common.size()
           << " common jets\n";
        for (std::size_t i = 0; i < w.partial.size(); ++i) os << "  partial " << i + 1 << ": " << w.partial[i].str() << "\n";
        for (const auto& c : w.common) os << "  candidate: " << c.str() << "\n";
    }
    if (!r.solve->notes.empty()) {
        os << "\nnotes:\n";
        for (const auto& n : r.solve->notes) os << "  " << n << "\n";
    }
    if (!r.solve->errors.empty()) {
        os << "\nerrors:\n";
        for (const auto& e : r.solve->errors) os << "  " << e << "\n";
    }
    return os.str();
}

}  // namespace smallsol
