#include "dunkl/regions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>

#include "dunkl/coeffs.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl {
namespace {

// Clause table. Notation:
//   "a, b < x"   means max(a, b) < x;   "x < a, b"  means x < min(a, b);
//   "x > a, b"   means x > max(a, b);
//   ";" joins separate chains (conjunction); " or " separates alternatives.
// Each clause reads "antecedent" => "consequent".
struct ClauseText {
    const char* antecedent;
    const char* consequent;
};

const std::map<RegionId, std::vector<ClauseText>>& clause_table() {
    static const std::map<RegionId, std::vector<ClauseText>> table = {
        {RegionId::J1,
         {{"1/2 <= tau < sigma", "sigma-1 < tau < sigma/2+1/4"},
          {"1/2, sigma <= tau", "tau < sigma/2+1/4, sigma+1"},
          {"tau < 1/2, sigma", "sigma/3, sigma-1 < tau < sigma/2+1/4"},
          {"sigma <= tau < 1/2", "-sigma < tau < sigma/2+1/4, sigma+1"}}},
        {RegionId::J2,
         {{"1/2 <= tau < sigma-1/2", "sigma-1 < tau < sigma/2+1/4"},
          {"1/2, sigma-1/2 <= tau", "tau < sigma/2+1/4, sigma"},
          {"0 < tau < 1/2, sigma-1/2", "-sigma/3, sigma-1 < tau < sigma/2+1/4 or sigma-1 < tau < sigma/2-1/4"},
          {"0 < tau < 1/2; sigma-1/2 <= tau", "1-sigma < tau < sigma/2+1/4, sigma or tau < sigma/2-1/4, sigma"},
          {"0 = tau < sigma-1/2", "1/2 < sigma < 1"},
          {"sigma-1/2 <= tau = 0", "1/2 < sigma"},
          {"tau < 0, sigma-1/2", "1/4-sigma/2, (sigma-1)/3, sigma-1 < tau"},
          {"sigma-1/2 <= tau < 0", "1/4-sigma/2, -sigma < tau < sigma"}}},
        {RegionId::K1,
         {{"theta <= sigma-1; theta < tau+1", "theta > sigma/2-3/4, (sigma+tau)/4"},
          {"tau+1 <= theta <= sigma-1", "theta > sigma/2-3/4, (sigma-tau)/2-1"},
          {"sigma-1 < theta < tau+1", "theta > sigma/2-3/4, (tau-sigma)/2+1, (sigma+tau)/4"},
          {"sigma-1 < theta; tau+1 <= theta", "theta > sigma/2-3/4, (sigma-tau)/2-1; sigma+tau > 0"}}},
        {RegionId::K1p,
         {{"theta < sigma; theta <= tau", "theta > tau/2-1/4, (sigma+tau)/4"},
          {"sigma <= theta <= tau", "theta > tau/2-1/4, (tau-sigma)/2"},
          {"tau < theta < sigma", "theta > tau/2-1/4, (sigma-tau)/2, (sigma+tau)/4"},
          {"sigma <= theta; tau < theta", "theta > tau/2-1/4, (tau-sigma)/2; sigma+tau > 0"}}},
        {RegionId::K2,
         {{"theta <= sigma-1; theta < tau+1/2", "theta > sigma/2-3/4, (sigma+tau)/4"},
          {"tau+1/2 <= theta <= sigma-1", "theta > sigma/2-3/4, (sigma-tau-1)/2"},
          {"sigma-1 < theta < sigma-1/2, tau+1/2",
           "theta > sigma/2-3/4, (tau-sigma)/2+1, (sigma+tau)/4 or theta > sigma/2-1/4, (sigma+tau)/4"},
          {"sigma-1 < theta < sigma-1/2; tau+1/2 <= theta",
           "theta > sigma/2-3/4, (sigma-tau-1)/2; sigma+tau > 1 or theta > sigma/2-1/4, (sigma-tau-1)/2"},
          {"sigma-1/2 = theta < tau+1/2", "sigma > 1/2, (tau+2)/3"},
          {"tau+1/2 <= theta = sigma-1/2", "sigma > 1/2, -tau"},
          {"sigma-1/2 < theta < tau+1/2", "theta > sigma/2-1/4, (tau-sigma+1)/2, (sigma+tau)/4"},
          {"sigma-1/2 < theta; tau+1/2 <= theta", "theta > sigma/2-1/4, (sigma-tau-1)/2; sigma+tau > 0"}}},
        {RegionId::K2p,
         {{"theta <= sigma-1/2; theta < tau", "theta > tau/2-1/4, (sigma+tau)/4"},
          {"sigma-1/2 <= theta <= tau", "theta > tau/2-1/4, (tau-sigma+1)/2"},
          {"tau < theta < sigma-1/2, tau+1/2",
           "theta > tau/2-1/4, (sigma-tau)/2, (sigma+tau)/4 or theta > tau/2+1/4, (sigma+tau)/4"},
          {"sigma-1/2 <= theta; tau < theta < tau+1/2",
           "theta > tau/2-1/4, (tau-sigma+1)/2; sigma+tau > 1 or theta > tau/2+1/4, (tau-sigma+1)/2"},
          {"tau+1/2 = theta < sigma-1/2", "tau > -1/2, (sigma-2)/3"},
          {"sigma-1/2 <= theta = tau+1/2", "tau > -1/2, -sigma"},
          {"tau+1/2 < theta < sigma-1/2", "theta > tau/2+1/4, (sigma-tau-1)/2, (sigma+tau)/4"},
          {"sigma-1/2 <= theta; tau+1/2 < theta", "theta > tau/2+1/4, (tau-sigma+1)/2; sigma+tau > 0"}}},
        {RegionId::S1,
         {{"gamma >= 0; delta > -1", "alpha+gamma, alpha+beta+gamma+delta+1 < 0"},
          {"gamma >= 0; delta <= -1", "alpha+gamma, alpha+beta+gamma < 0"},
          {"gamma < 0; delta > -1", "alpha+gamma, alpha+beta+delta+1, alpha+beta+gamma+delta+1 < 0"},
          {"gamma < 0; delta <= -1", "alpha+beta, alpha+gamma, alpha+beta+gamma < 0"}}},
        {RegionId::S2,
         {{"gamma >= 0; delta > -1/2", "alpha+gamma, alpha+beta+gamma+delta+1 < 0"},
          {"gamma >= 0; delta <= -1/2", "alpha+gamma, alpha+beta+gamma+1/2 < 0"},
          {"-1/2 < gamma < 0; delta > -1/2",
           "alpha+gamma, alpha+beta+delta+1, alpha+beta+gamma+delta+1 < 0 or "
           "alpha+gamma+1/2, alpha+beta+gamma+delta+1 < 0"},
          {"-1/2 < gamma < 0; delta <= -1/2",
           "alpha+gamma, alpha+beta+1/2, alpha+beta+gamma+1/2 < 0 or alpha+gamma+1/2, alpha+beta+gamma+1/2 < 0"},
          {"gamma = -1/2; delta > -1/2", "alpha, alpha+beta+delta+1/2 < 0"},
          {"gamma = -1/2; delta <= -1/2", "alpha, alpha+beta < 0"},
          {"gamma < -1/2; delta > -1/2", "alpha+gamma+1/2, alpha+beta+delta+1/2, alpha+beta+gamma+delta+1 < 0"},
          {"gamma < -1/2; delta <= -1/2", "alpha+gamma+1/2, alpha+beta, alpha+beta+gamma+1/2 < 0"}}},
    };
    return table;
}

// ---- linear expressions over up to four variables ----

struct Linear {
    std::array<double, 4> coef{};
    double constant = 0.0;

    double eval(const std::vector<double>& x) const {
        double acc = constant;
        for (std::size_t i = 0; i < x.size(); ++i) acc += coef[i] * x[i];
        return acc;
    }
    bool is_constant() const {
        return std::all_of(coef.begin(), coef.end(), [](double c) { return c == 0.0; });
    }
};

Linear operator+(Linear a, const Linear& b) {
    for (int i = 0; i < 4; ++i) a.coef[i] += b.coef[i];
    a.constant += b.constant;
    return a;
}
Linear scaled(Linear a, double f) {
    for (double& c : a.coef) c *= f;
    a.constant *= f;
    return a;
}

class ExprParser {
public:
    ExprParser(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

    Linear parse() {
        Linear e = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

private:
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
    [[noreturn]] void fail(const std::string& why) const {
        throw std::logic_error("region table: " + why + " in '" + s_ + "'");
    }
    Linear expr() {
        Linear acc = term();
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc + scaled(term(), -1.0);
            else
                return acc;
        }
    }
    Linear term() {
        Linear acc = factor();
        while (true) {
            if (eat('*')) {
                Linear rhs = factor();
                if (rhs.is_constant())
                    acc = scaled(acc, rhs.constant);
                else if (acc.is_constant())
                    acc = scaled(rhs, acc.constant);
                else
                    fail("nonlinear product");
            } else if (eat('/')) {
                Linear rhs = factor();
                if (!rhs.is_constant() || rhs.constant == 0.0) fail("division by a non-constant");
                acc = scaled(acc, 1.0 / rhs.constant);
            } else {
                return acc;
            }
        }
    }
    Linear factor() {
        skip();
        if (eat('-')) return scaled(factor(), -1.0);
        if (eat('(')) {
            Linear e = expr();
            if (!eat(')')) fail("missing ')'");
            return e;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t used = 0;
            const double value = std::stod(s_.substr(pos_), &used);
            pos_ += used;
            Linear e;
            e.constant = value;
            return e;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string name = s_.substr(start, pos_ - start);
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) {
                Linear e;
                e.coef[i] = 1.0;
                return e;
            }
        fail("unknown token '" + name + "'");
    }

    std::string s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

// ---- atoms, conditions, clauses ----

enum class Op { lt, le, gt, ge, eq };

struct Atom {
    std::vector<Linear> lhs, rhs;
    Op op;

    double reduce(const std::vector<Linear>& side, bool take_max, const std::vector<double>& x) const {
        double r = side.front().eval(x);
        for (const Linear& e : side) r = take_max ? std::max(r, e.eval(x)) : std::min(r, e.eval(x));
        return r;
    }
    // Evaluated on the normalized (max, min) form; exact comparisons.
    bool holds(const std::vector<double>& x) const {
        switch (op) {
            case Op::lt: return reduce(lhs, true, x) < reduce(rhs, false, x);
            case Op::le: return reduce(lhs, true, x) <= reduce(rhs, false, x);
            case Op::gt: return reduce(lhs, false, x) > reduce(rhs, true, x);
            case Op::ge: return reduce(lhs, false, x) >= reduce(rhs, true, x);
            case Op::eq: return lhs.front().eval(x) == rhs.front().eval(x);
        }
        return false;
    }
    double margin(const std::vector<double>& x) const {
        switch (op) {
            case Op::lt:
            case Op::le: return reduce(rhs, false, x) - reduce(lhs, true, x);
            case Op::gt:
            case Op::ge: return reduce(lhs, false, x) - reduce(rhs, true, x);
            case Op::eq: return -std::fabs(lhs.front().eval(x) - rhs.front().eval(x));
        }
        return 0.0;
    }
};

using Conjunction = std::vector<Atom>;

struct Clause {
    std::string antecedent_text, consequent_text;
    Conjunction antecedent;
    std::vector<Conjunction> alternatives;
};

std::vector<std::string> split(const std::string& s, const std::string& sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t at = s.find(sep, start);
        out.push_back(s.substr(start, at == std::string::npos ? std::string::npos : at - start));
        if (at == std::string::npos) return out;
        start = at + sep.size();
    }
}

std::vector<Linear> parse_list(const std::string& s, const std::vector<std::string>& vars) {
    std::vector<Linear> out;
    for (const std::string& item : split(s, ",")) out.push_back(ExprParser(item, vars).parse());
    return out;
}

// A chain "l0 op1 l1 op2 l2 ..." becomes atoms (l0 op1 l1), (l1 op2 l2), ...
void parse_chain(const std::string& chain, const std::vector<std::string>& vars, Conjunction& out) {
    std::vector<std::string> parts;
    std::vector<Op> ops;
    std::size_t start = 0;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const char c = chain[i];
        if (c != '<' && c != '>' && c != '=') continue;
        const bool with_eq = c != '=' && i + 1 < chain.size() && chain[i + 1] == '=';
        parts.push_back(chain.substr(start, i - start));
        ops.push_back(c == '=' ? Op::eq : c == '<' ? (with_eq ? Op::le : Op::lt) : (with_eq ? Op::ge : Op::gt));
        i += with_eq ? 1 : 0;
        start = i + 1;
    }
    parts.push_back(chain.substr(start));
    if (ops.empty()) throw std::logic_error("region table: chain without comparison: " + chain);
    for (std::size_t i = 0; i < ops.size(); ++i) {
        Atom a{parse_list(parts[i], vars), parse_list(parts[i + 1], vars), ops[i]};
        if (a.op == Op::eq && (a.lhs.size() != 1 || a.rhs.size() != 1))
            throw std::logic_error("region table: '=' with a list: " + chain);
        out.push_back(std::move(a));
    }
}

Conjunction parse_condition(const std::string& s, const std::vector<std::string>& vars) {
    Conjunction out;
    for (const std::string& chain : split(s, ";")) parse_chain(chain, vars, out);
    return out;
}

bool all_hold(const Conjunction& c, const std::vector<double>& x) {
    return std::all_of(c.begin(), c.end(), [&](const Atom& a) { return a.holds(x); });
}

double min_margin(const Conjunction& c, const std::vector<double>& x) {
    double m = std::numeric_limits<double>::infinity();
    for (const Atom& a : c) m = std::min(m, a.margin(x));
    return m;
}

const std::vector<Clause>& clauses(RegionId id) {
    static const std::map<RegionId, std::vector<Clause>> parsed = [] {
        std::map<RegionId, std::vector<Clause>> out;
        for (const auto& [rid, texts] : clause_table()) {
            const auto& vars = region_variables(rid);
            for (const ClauseText& t : texts) {
                Clause c{t.antecedent, t.consequent, parse_condition(t.antecedent, vars), {}};
                for (const std::string& alt : split(t.consequent, " or "))
                    c.alternatives.push_back(parse_condition(alt, vars));
                out[rid].push_back(std::move(c));
            }
        }
        return out;
    }();
    return parsed.at(id);
}

void check_arity(RegionId id, const std::vector<double>& point) {
    if (static_cast<int>(point.size()) != region_arity(id))
        throw DomainError("region " + to_string(id) + " takes " + std::to_string(region_arity(id)) + " coordinates");
}

bool is_excluded_integer(double x) { return near_nonpositive_integer(x); }

bool same(double a, double b) {
    return std::fabs(a - b) <= case_equality_tol * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
}

}  // namespace

std::string to_string(RegionId id) {
    switch (id) {
        case RegionId::J1: return "J1";
        case RegionId::J2: return "J2";
        case RegionId::K1: return "K1";
        case RegionId::K1p: return "K1p";
        case RegionId::K2: return "K2";
        case RegionId::K2p: return "K2p";
        case RegionId::S1: return "S1";
        case RegionId::S2: return "S2";
    }
    return "unknown";
}

RegionId region_from_string(const std::string& name) {
    for (RegionId id : {RegionId::J1, RegionId::J2, RegionId::K1, RegionId::K1p, RegionId::K2, RegionId::K2p,
                        RegionId::S1, RegionId::S2})
        if (to_string(id) == name) return id;
    throw DomainError("unknown region '" + name + "'");
}

int region_arity(RegionId id) { return static_cast<int>(region_variables(id).size()); }

const std::vector<std::string>& region_variables(RegionId id) {
    static const std::vector<std::string> j = {"sigma", "tau"};
    static const std::vector<std::string> k = {"sigma", "tau", "theta"};
    static const std::vector<std::string> s = {"alpha", "beta", "gamma", "delta"};
    switch (id) {
        case RegionId::J1:
        case RegionId::J2: return j;
        case RegionId::S1:
        case RegionId::S2: return s;
        default: return k;
    }
}

bool region_member(RegionId id, const std::vector<double>& point) {
    check_arity(id, point);
    for (const Clause& c : clauses(id)) {
        if (!all_hold(c.antecedent, point)) continue;
        const bool ok = std::any_of(c.alternatives.begin(), c.alternatives.end(),
                                    [&](const Conjunction& alt) { return all_hold(alt, point); });
        if (!ok) return false;
    }
    return true;
}

RegionReport region_report(RegionId id, const std::vector<double>& point) {
    check_arity(id, point);
    RegionReport report{id, true, {}};
    for (const Clause& c : clauses(id)) {
        ClauseReport r{c.antecedent_text, c.consequent_text, all_hold(c.antecedent, point), true, 0.0};
        if (r.applies) {
            double best = -std::numeric_limits<double>::infinity();
            bool any = false;
            for (const Conjunction& alt : c.alternatives) {
                best = std::max(best, min_margin(alt, point));
                any = any || all_hold(alt, point);
            }
            r.satisfied = any;
            r.margin = best;
        } else {
            r.margin = min_margin(c.antecedent, point);
        }
        report.member = report.member && r.satisfied;
        report.clauses.push_back(std::move(r));
    }
    return report;
}

VHypotheses theorem_v_hypotheses(double sigma, double tau, double theta, double u) {
    VHypotheses out{true, "vacuous", {}};
    auto require = [&](bool cond, const std::string& clause) {
        if (!cond) {
            out.ok = false;
            out.violated.push_back(clause);
        }
    };
    require(sigma > u - 0.5, "sigma > u - 1/2");
    require(tau > u - 1.5, "tau > u - 3/2");
    require(theta > -0.5, "theta > -1/2");

    const bool st = same(sigma, theta), tt = same(tau, theta), t1 = same(theta, tau + 1.0);
    if (st && !tt) {
        if (is_excluded_integer(tau - sigma)) return out;
        out.case_tag = "a";
        require(sigma - 1.0 < tau, "(a) sigma - 1 < tau");
        require(tau < sigma + 1.0, "(a) tau < sigma + 1");
        require(tau < 2.0 * sigma + 0.5, "(a) tau < 2 sigma + 1/2");
    } else if (!st && tt) {
        if (is_excluded_integer(sigma - tau)) return out;
        out.case_tag = "b";
        require(region_member(RegionId::J1, {sigma, tau}) || region_member(RegionId::J2, {sigma, tau}),
                "(b) (sigma, tau) in J1 u J2");
    } else if (!st && t1) {
        if (is_excluded_integer(sigma - tau - 1.0)) return out;
        out.case_tag = "c";
        require(tau < 1.5 * sigma - 2.25, "(c) tau < 3 sigma / 2 - 9/4");
        require(tau < sigma - 5.0 / 3.0, "(c) tau < sigma - 5/3");
    } else if (!st && !tt) {
        if (is_excluded_integer(sigma - theta) || is_excluded_integer(tau - theta)) return out;
        out.case_tag = "d";
        const std::vector<double> p = {sigma, tau, theta};
        require(region_member(RegionId::K1, p) || region_member(RegionId::K2, p), "(d) (sigma, tau, theta) in K1 u K2");
        require(region_member(RegionId::K1p, p) || region_member(RegionId::K2p, p),
                "(d) (sigma, tau, theta) in K1' u K2'");
    }
    return out;
}

}  // namespace dunkl
