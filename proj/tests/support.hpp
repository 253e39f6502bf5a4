#pragma once

// Test helpers: a small expression parser so polynomials can be written as
// text ("x1^2 - lambda*(1+lambda)"), plus jet builders.

#include "smallsol/jet.hpp"
#include "smallsol/multipoly.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace testsupport {

using namespace smallsol;

class ExprParser {
public:
    ExprParser(std::string s, int nvars) : s_(std::move(s)), n_(nvars) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) {
        throw std::runtime_error("expression parse error at " + std::to_string(pos_) + ": " + why + " in '" + s_ + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        while (true) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }
    MultiPoly term() {
        MultiPoly acc = factor();
        while (true) {
            if (eat('*')) {
                acc = acc * factor();
            } else if (eat('/')) {
                MultiPoly d = factor();
                if (d.size() != 1 || d.total_degree() != 0) fail("division by a non-constant");
                acc = (Coefficient(1) / d.constant_term()) * acc;
            } else {
                return acc;
            }
        }
    }
    MultiPoly factor() {
        if (eat('-')) return -factor();
        MultiPoly b = base();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            b = b.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
        }
        return b;
    }
    MultiPoly base() {
        skip();
        if (eat('(')) {
            MultiPoly e = expr();
            if (!eat(')')) fail("expected )");
            return e;
        }
        if (pos_ >= s_.size()) fail("unexpected end");
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return MultiPoly::constant(n_, Coefficient(mpq_class(s_.substr(start, pos_ - start))));
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string id = s_.substr(start, pos_ - start);
        if (id == "lambda" || id == "l") return MultiPoly::variable(n_, 0);
        if (id == "i") return MultiPoly::constant(n_, Coefficient(GaussRational(0, 1)));
        if (id == "x" || id == "y" || id == "z") {
            int v = id == "x" ? 1 : id == "y" ? 2 : 3;
            if (v > n_) fail("unknown out of range");
            return MultiPoly::variable(n_, v);
        }
        if (id.size() >= 2 && id[0] == 'x') {
            int v = std::stoi(id.substr(1));
            if (v < 1 || v > n_) fail("unknown out of range");
            return MultiPoly::variable(n_, v);
        }
        fail("unknown identifier '" + id + "'");
    }

    std::string s_;
    int n_;
    std::size_t pos_ = 0;
};

inline MultiPoly P(const std::string& s, int nvars = 1) { return ExprParser(s, nvars).parse(); }

inline Coefficient Q(long p, long q = 1) { return Coefficient(mpq_class(p, q)); }

/// Jet from (numerator, coefficient) pairs over ramification `ram`.
inline PuiseuxJet J(long ram, std::vector<std::pair<long, Coefficient>> terms, Order trunc = Order::infinity()) {
    std::vector<JetTerm> t;
    for (auto& [n, c] : terms) t.push_back({n, c});
    return PuiseuxJet(ram, std::move(t), std::move(trunc));
}

inline Order O(long p, long q = 1) { return Order(mpq_class(p, q)); }

}  // namespace testsupport
