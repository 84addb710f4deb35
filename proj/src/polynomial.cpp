#include "dialg/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dialg {

Monomial::Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end());
    for (const auto& [v, e] : factors) {
        if (e == 0) continue;
        if (!factors_.empty() && factors_.back().first == v)
            factors_.back().second += e;
        else
            factors_.emplace_back(v, e);
    }
}

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

std::uint32_t Monomial::exponent(VarId v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{v, 0});
    return it != factors_.end() && it->first == v ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first) {
            r.factors_.push_back(*i++);
        } else if (j->first < i->first) {
            r.factors_.push_back(*j++);
        } else {
            r.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    r.factors_.insert(r.factors_.end(), i, a.factors_.end());
    r.factors_.insert(r.factors_.end(), j, b.factors_.end());
    return r;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.degree();
    auto db = b.degree();
    if (da != db) return da < db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        if (fa[i].first != fb[i].first) return fa[i].first > fb[i].first;
        if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second;
    }
    return fa.size() < fb.size();
}

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(VarId v) { return term(Rational(1), Monomial(v)); }

Polynomial Polynomial::term(const Rational& c, Monomial m) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t Polynomial::degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

void Polynomial::add_term(const Rational& c, const Monomial& m) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(c, m);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(-c, m);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    if (a.is_constant()) return b * a.terms_.begin()->second;
    if (b.is_constant()) return a * b.terms_.begin()->second;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ca * cb, ma * mb);
    return r;
}

Polynomial operator-(Polynomial a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
}

Rational Polynomial::evaluate(const std::function<Rational(VarId)>& value) const {
    Rational total;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m.factors()) {
            Rational x = value(v);
            for (std::uint32_t k = 0; k < e; ++k) t *= x;
        }
        total += t;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial>& images) const {
    Polynomial result;
    for (const auto& [m, c] : terms_) {
        Polynomial t(c);
        std::vector<Monomial::Factor> kept;
        for (const auto& [v, e] : m.factors()) {
            auto it = images.find(v);
            if (it == images.end()) {
                kept.emplace_back(v, e);
                continue;
            }
            for (std::uint32_t k = 0; k < e; ++k) t = t * it->second;
        }
        if (!kept.empty()) t = t * Polynomial::term(Rational(1), Monomial(std::move(kept)));
        result += t;
    }
    return result;
}

std::string Polynomial::to_string(const std::function<std::string(VarId)>& name) const {
    if (terms_.empty()) return "0";
    auto var_name = [&](VarId v) { return name ? name(v) : "x" + std::to_string(v); };
    std::ostringstream os;
    bool first = true;
    // Highest graded-lex term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        bool unit = mag.is_one();
        if (!unit || m.is_one()) os << mag;
        bool need_star = !unit;
        for (const auto& [v, e] : m.factors()) {
            if (need_star) os << '*';
            os << var_name(v);
            if (e > 1) os << '^' << e;
            need_star = true;
        }
    }
    return os.str();
}

std::vector<Polynomial> EvalContext::fresh_indeterminates(std::size_t count, const std::string& tag) {
    std::vector<Polynomial> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(fresh(tag + "_" + std::to_string(i)));
    return out;
}

Polynomial EvalContext::fresh(const std::string& name) {
    auto id = static_cast<VarId>(names_.size());
    names_.push_back(name);
    return Polynomial::variable(id);
}

std::function<std::string(VarId)> EvalContext::namer() const {
    return [this](VarId v) { return v < names_.size() ? names_[v] : "x" + std::to_string(v); };
}

} // namespace dialg
