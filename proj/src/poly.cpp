#include "coop/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coop {

static void check_rings(const PolyRing* a, const PolyRing* b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b)) throw std::invalid_argument("poly: ring mismatch");
}

GradedPoly GradedPoly::constant(const PolyRing* ring, const Rat& c) {
    GradedPoly p(ring);
    if (c != 0) p.terms_[ExpVec(ring->arity(), 0)] = c;
    return p;
}

GradedPoly GradedPoly::var(const PolyRing* ring, size_t i, int exp) {
    if (i >= ring->arity()) throw std::invalid_argument("poly: bad variable index");
    ExpVec e(ring->arity(), 0);
    e[i] = exp;
    return monomial(ring, e, 1);
}

GradedPoly GradedPoly::monomial(const PolyRing* ring, const ExpVec& e, const Rat& c) {
    if (e.size() != ring->arity()) throw std::invalid_argument("poly: bad exponent vector");
    GradedPoly p(ring);
    if (c != 0) p.terms_[e] = c;
    return p;
}

void GradedPoly::add_term(const ExpVec& e, const Rat& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
    check_rings(ring_, o.ring_);
    GradedPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
    check_rings(ring_, o.ring_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const {
    check_rings(ring_, o.ring_);
    GradedPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
    check_rings(ring_, o.ring_);
    GradedPoly r(ring_);
    ExpVec e(ring_->arity());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

GradedPoly GradedPoly::operator*(const Rat& c) const {
    GradedPoly r(ring_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

GradedPoly GradedPoly::operator/(const Rat& c) const {
    if (c == 0) throw std::invalid_argument("poly: division by zero");
    return *this * (Rat(1) / c);
}

bool GradedPoly::operator==(const GradedPoly& o) const {
    check_rings(ring_, o.ring_);
    return terms_ == o.terms_;
}

GradedPoly GradedPoly::pow(unsigned long e) const {
    GradedPoly r = constant(ring_, 1);
    GradedPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

long GradedPoly::term_degree(const ExpVec& e) const {
    long d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * ring_->degs[i];
    return d;
}

long GradedPoly::degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, term_degree(e));
    return d;
}

bool GradedPoly::is_homogeneous() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long t = term_degree(e);
        if (d == -1) d = t;
        else if (t != d) return false;
    }
    return true;
}

Rat GradedPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

long GradedPoly::min_nu2() const {
    long m = nu2_inf;
    for (const auto& [e, c] : terms_) m = std::min(m, nu2(c));
    return m;
}

bool GradedPoly::coeffs_2integral() const {
    for (const auto& [e, c] : terms_)
        if (!is_2integral(c)) return false;
    return true;
}

GradedPoly GradedPoly::scale_pow2(long k) const {
    Rat f;
    if (k >= 0) f = Rat(Int(1) << k);
    else f = Rat(1) / Rat(Int(1) << (-k));
    return *this * f;
}

std::pair<ExpVec, Rat> GradedPoly::leading_term() const {
    if (terms_.empty()) throw std::runtime_error("leading_term of zero polynomial");
    auto best = terms_.begin();
    long bd = term_degree(best->first);
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        long d = term_degree(it->first);
        if (d > bd || (d == bd && it->first > best->first)) {
            best = it;
            bd = d;
        }
    }
    return {best->first, best->second};
}

GradedPoly GradedPoly::subst(const std::vector<GradedPoly>& images, const PolyRing* target) const {
    if (images.size() != ring_->arity()) throw std::invalid_argument("subst: arity mismatch");
    GradedPoly r(target);
    for (const auto& [e, c] : terms_) {
        GradedPoly t = constant(target, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) {
                if (e[i] < 0) throw std::invalid_argument("subst: negative exponent");
                t = t * images[i].pow(static_cast<unsigned long>(e[i]));
            }
        r += t;
    }
    return r;
}

std::string GradedPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const ExpVec, Rat>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [this](auto* a, auto* b) {
        long da = term_degree(a->first), db = term_degree(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        Rat c = t->second;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Rat a = abs(c);
        bool has_vars = false;
        for (int e : t->first)
            if (e) has_vars = true;
        if (a != 1 || !has_vars) os << a.get_str();
        bool lead = (a != 1 || !has_vars);
        for (size_t i = 0; i < t->first.size(); ++i) {
            if (!t->first[i]) continue;
            if (lead) os << "*";
            lead = true;
            os << ring_->vars[i];
            if (t->first[i] != 1) os << "^" << t->first[i];
        }
    }
    return os.str();
}

} // namespace coop
