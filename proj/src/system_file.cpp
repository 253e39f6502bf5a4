#include "smallsol/system_file.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

namespace smallsol {

namespace {

constexpr const char* kFormat = "smallsol-system/1";

class Reader {
public:
    explicit Reader(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const YAML::Node& at, const std::string& what) const {
        const YAML::Mark m = at.Mark();
        if (m.is_null()) throw ParseError(source_, 0, 0, what);
        throw ParseError(source_, m.line + 1, m.column + 1, what);
    }

    std::string scalar(const YAML::Node& n, const std::string& what) const {
        if (!n.IsScalar()) fail(n, what + " must be a scalar");
        return n.Scalar();
    }

    mpq_class rational(const YAML::Node& n) const {
        std::string s = scalar(n, "coefficient part");
        try {
            return parse_rational(s);
        } catch (const InputError&) {
            fail(n, "coefficient '" + s + "' is not an exact rational p/q");
        }
    }

    Coefficient coefficient(const YAML::Node& n) const {
        if (n.IsScalar()) return Coefficient(rational(n));
        if (n.IsSequence() && n.size() == 2) return Coefficient(GaussRational(rational(n[0]), rational(n[1])));
        fail(n, "coefficient must be \"p/q\" or a pair [re, im]");
    }

    Exponent exponents(const YAML::Node& n, std::size_t width) const {
        if (!n.IsSequence()) fail(n, "exponents must be a list of integers");
        if (n.size() != width)
            fail(n, "exponent vector has " + std::to_string(n.size()) + " entries, expected " +
                        std::to_string(width) + " (one per variable)");
        Exponent e;
        for (const auto& k : n) {
            std::string s = scalar(k, "exponent");
            std::size_t used = 0;
            long v = -1;
            try {
                v = std::stol(s, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != s.size() || v < 0 || v > 1000000) fail(k, "exponent '" + s + "' is not a non-negative integer");
            e.push_back(static_cast<unsigned>(v));
        }
        return e;
    }

private:
    std::string source_;
};

}  // namespace

SystemFile parse_system_file(const std::string& text, const std::string& source) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw ParseError(source, e.mark.line + 1, e.mark.column + 1, e.msg);
    }
    Reader rd(source);
    if (!root.IsMap()) rd.fail(root, "a system file is a mapping with format, variables and equations");
    for (const auto& kv : root) {
        const std::string key = kv.first.Scalar();
        if (key != "format" && key != "variables" && key != "equations" && key != "metadata")
            rd.fail(kv.first, "unknown key '" + key + "'");
    }
    if (!root["format"]) rd.fail(root, "missing 'format'");
    if (rd.scalar(root["format"], "format") != kFormat)
        rd.fail(root["format"], std::string("unsupported format, expected ") + kFormat);

    SystemFile out;
    const YAML::Node vars = root["variables"];
    if (!vars) rd.fail(root, "missing 'variables'");
    if (!vars.IsSequence() || vars.size() < 2) rd.fail(vars, "variables must list the parameter and at least one unknown");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        std::string name = rd.scalar(v, "variable name");
        if (name.empty() || !seen.insert(name).second) rd.fail(v, "variable names must be distinct and non-empty");
        out.variables.push_back(name);
    }
    const int n = out.unknowns();

    const YAML::Node eqs = root["equations"];
    if (!eqs) rd.fail(root, "missing 'equations'");
    if (!eqs.IsSequence() || eqs.size() == 0) rd.fail(eqs, "equations must be a non-empty list");
    std::vector<MultiPoly> polys;
    for (const auto& eq : eqs) {
        if (!eq.IsSequence() || eq.size() == 0) rd.fail(eq, "an equation is a non-empty list of terms");
        MultiPoly p(n);
        for (const auto& term : eq) {
            if (!term.IsMap()) rd.fail(term, "a term is a mapping {coefficient, exponents}");
            for (const auto& kv : term) {
                const std::string key = kv.first.Scalar();
                if (key != "coefficient" && key != "exponents") rd.fail(kv.first, "unknown term key '" + key + "'");
            }
            if (!term["coefficient"]) rd.fail(term, "term without coefficient");
            if (!term["exponents"]) rd.fail(term, "term without exponents");
            Coefficient c = rd.coefficient(term["coefficient"]);
            Exponent e = rd.exponents(term["exponents"], out.variables.size());
            p.add_term(e, c);
        }
        if (p.is_zero()) rd.fail(eq, "equation is identically zero");
        polys.push_back(std::move(p));
    }
    out.system = PolySystem(std::move(polys), n);

    if (const YAML::Node meta = root["metadata"]) {
        if (!meta.IsMap()) rd.fail(meta, "metadata must be a mapping");
        if (const YAML::Node io = meta["input_order"]) {
            std::string s = rd.scalar(io, "input_order");
            std::size_t used = 0;
            long v = 0;
            try {
                v = std::stol(s, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != s.size() || v < 1) rd.fail(io, "input_order must be a positive integer");
            out.input_order = v;
        }
    }
    return out;
}

SystemFile load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_system_file(ss.str(), path);
}

std::string write_system_file(const SystemFile& file) {
    YAML::Emitter em;
    em << YAML::BeginMap;
    em << YAML::Key << "format" << YAML::Value << kFormat;
    em << YAML::Key << "variables" << YAML::Value << YAML::Flow << file.variables;
    em << YAML::Key << "equations" << YAML::Value << YAML::BeginSeq;
    for (const auto& f : file.system.equations()) {
        em << YAML::BeginSeq;
        // Highest exponents first reads naturally.
        for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
            const auto& [e, c] = *it;
            if (!c.is_exact()) throw InputError("system files hold exact coefficients only");
            em << YAML::Flow << YAML::BeginMap << YAML::Key << "coefficient" << YAML::Value;
            const auto& g = c.exact();
            if (sgn(g.im) == 0) em << YAML::DoubleQuoted << rational_str(g.re);
            else em << YAML::Flow << YAML::BeginSeq << YAML::DoubleQuoted << rational_str(g.re) << YAML::DoubleQuoted
                    << rational_str(g.im) << YAML::EndSeq;
            em << YAML::Key << "exponents" << YAML::Value << YAML::Flow << e << YAML::EndMap;
        }
        em << YAML::EndSeq;
    }
    em << YAML::EndSeq;
    if (file.input_order) {
        em << YAML::Key << "metadata" << YAML::Value << YAML::BeginMap << YAML::Key << "input_order" << YAML::Value
           << *file.input_order << YAML::EndMap;
    }
    em << YAML::EndMap;
    return std::string(em.c_str()) + "\n";
}

}  // namespace smallsol
