#include "sympl/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sympl {

Polynomial Polynomial::constant(int n_vars, const Rat& c) {
    Polynomial p(n_vars);
    p.add_term(Exps(n_vars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int n_vars, int i) {
    if (i < 0 || i >= n_vars) throw std::invalid_argument("Polynomial::variable: index");
    Exps e(n_vars, 0);
    e[i] = 1;
    return monomial(n_vars, e, Rat(1));
}

Polynomial Polynomial::monomial(int n_vars, const Exps& e, const Rat& c) {
    Polynomial p(n_vars);
    p.add_term(e, c);
    return p;
}

void Polynomial::add_term(const Exps& e, const Rat& c) {
    if (static_cast<int>(e.size()) != n_vars_)
        throw std::invalid_argument("Polynomial::add_term: exponent arity");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (n_vars_ != o.n_vars_) throw std::invalid_argument("Polynomial::+: arity");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r(n_vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (n_vars_ != o.n_vars_) throw std::invalid_argument("Polynomial::*: arity");
    Polynomial r(n_vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exps e(n_vars_);
            for (int i = 0; i < n_vars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial r(n_vars_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, c * coef);
    return r;
}

Polynomial Polynomial::derivative(int i) const {
    if (i < 0 || i >= n_vars_) throw std::invalid_argument("Polynomial::derivative: index");
    Polynomial r(n_vars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exps d = e;
        d[i] -= 1;
        r.add_term(d, c * Rat(static_cast<long>(e[i])));
    }
    return r;
}

Rat Polynomial::eval(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != n_vars_) throw std::invalid_argument("Polynomial::eval: arity");
    Rat s(0);
    for (const auto& [e, c] : terms_) {
        Rat m = c;
        for (int i = 0; i < n_vars_; ++i)
            for (uint32_t k = 0; k < e[i]; ++k) m *= x[i];
        s += m;
    }
    return s;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (auto v : e) t += static_cast<int>(v);
        d = std::max(d, t);
    }
    return d;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c);
        for (int i = 0; i < n_vars_; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

AltTensor AltTensor::of_function(const Polynomial& f) {
    AltTensor t(f.n_vars(), 0);
    if (!f.is_zero()) t.comps_.emplace(std::vector<int>{}, f);
    return t;
}

bool AltTensor::is_zero() const {
    for (const auto& [k, p] : comps_)
        if (!p.is_zero()) return false;
    return true;
}

const Polynomial& AltTensor::comp(const std::vector<int>& idx) const {
    auto it = comps_.find(idx);
    return it == comps_.end() ? zero_ : it->second;
}

void AltTensor::set_comp(const std::vector<int>& idx, const Polynomial& p) {
    if (static_cast<int>(idx.size()) != degree_)
        throw std::invalid_argument("AltTensor::set_comp: index arity");
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i] <= idx[i - 1]) throw std::invalid_argument("AltTensor::set_comp: indices must increase");
    if (p.is_zero())
        comps_.erase(idx);
    else
        comps_[idx] = p;
}

Polynomial AltTensor::comp_signed(const std::vector<int>& idx) const {
    std::vector<int> s = idx;
    int sign = 1;
    // insertion sort, tracking parity
    for (size_t i = 1; i < s.size(); ++i)
        for (size_t j = i; j > 0 && s[j] < s[j - 1]; --j) {
            std::swap(s[j], s[j - 1]);
            sign = -sign;
        }
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] == s[i - 1]) return Polynomial(n_vars_);
    Polynomial p = comp(s);
    return sign > 0 ? p : -p;
}

AltTensor AltTensor::operator+(const AltTensor& o) const {
    if (n_vars_ != o.n_vars_ || degree_ != o.degree_)
        throw std::invalid_argument("AltTensor::+: shape");
    AltTensor r = *this;
    for (const auto& [k, p] : o.comps_) {
        Polynomial s = r.comp(k) + p;
        if (s.is_zero())
            r.comps_.erase(k);
        else
            r.comps_[k] = s;
    }
    return r;
}

AltTensor AltTensor::operator-(const AltTensor& o) const {
    AltTensor neg(o.n_vars_, o.degree_);
    for (const auto& [k, p] : o.comps_) neg.comps_.emplace(k, -p);
    return *this + neg;
}

bool AltTensor::operator==(const AltTensor& o) const {
    return n_vars_ == o.n_vars_ && degree_ == o.degree_ && (*this - o).is_zero();
}

AltTensor differential(const Polynomial& f) {
    AltTensor d(f.n_vars(), 1);
    for (int i = 0; i < f.n_vars(); ++i) d.set_comp({i}, f.derivative(i));
    return d;
}

} // namespace sympl
