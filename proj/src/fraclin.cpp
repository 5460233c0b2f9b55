#include "pathcell/fraclin.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathcell {

namespace {

void trim(Poly::Expo& e) {
    while (!e.empty() && e.back() == 0)
        e.pop_back();
}

int expo_at(const Poly::Expo& e, int i) { return i < (int)e.size() ? e[i] : 0; }

} // namespace

Poly::Poly(const Rat& c) {
    if (!c.is_zero())
        terms_.emplace(Expo{}, c);
}

Poly Poly::var(int i) {
    Poly p;
    Expo e(i + 1, 0);
    e[i] = 1;
    p.terms_.emplace(e, Rat(1));
    return p;
}

int Poly::degree_in(int i) const {
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, expo_at(e, i));
    return d;
}

std::vector<int> Poly::variables() const {
    std::vector<int> out;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < (int)e.size(); ++i)
            if (e[i] > 0 && std::find(out.begin(), out.end(), i) == out.end())
                out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
}

Poly& Poly::add_term(const Expo& e0, const Rat& c) {
    if (c.is_zero())
        return *this;
    Expo e = e0;
    trim(e);
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
    return *this;
}

Poly operator+(const Poly& x, const Poly& y) {
    Poly r = x;
    for (const auto& [e, c] : y.terms_)
        r.add_term(e, c);
    return r;
}

Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

Poly operator*(const Poly& x, const Poly& y) {
    Poly r;
    for (const auto& [ex, cx] : x.terms_) {
        for (const auto& [ey, cy] : y.terms_) {
            Poly::Expo e(std::max(ex.size(), ey.size()), 0);
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = expo_at(ex, (int)i) + expo_at(ey, (int)i);
            r.add_term(e, cx * cy);
        }
    }
    return r;
}

std::vector<Poly> Poly::coefficients_in(int i) const {
    std::vector<Poly> out(degree_in(i) + 1);
    for (const auto& [e, c] : terms_) {
        int d = expo_at(e, i);
        Expo r = e;
        if (i < (int)r.size())
            r[i] = 0;
        trim(r);
        out[d].add_term(r, c);
    }
    return out;
}

std::pair<Poly, int> Poly::substitute_cleared(int i, const Poly& num, const Poly& den) const {
    auto coeffs = coefficients_in(i);
    int d = (int)coeffs.size() - 1;
    Poly r;
    // powers
    std::vector<Poly> npow(d + 1, Poly(Rat(1))), dpow(d + 1, Poly(Rat(1)));
    for (int k = 1; k <= d; ++k) {
        npow[k] = npow[k - 1] * num;
        dpow[k] = dpow[k - 1] * den;
    }
    for (int k = 0; k <= d; ++k)
        r = r + coeffs[k] * npow[k] * dpow[d - k];
    return {r, d};
}

Poly Poly::rename(const std::map<int, int>& names) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
        Expo ne;
        for (int i = 0; i < (int)e.size(); ++i) {
            if (e[i] == 0)
                continue;
            auto it = names.find(i);
            int j = it == names.end() ? i : it->second;
            if ((int)ne.size() <= j)
                ne.resize(j + 1, 0);
            ne[j] += e[i];
        }
        r.add_term(ne, c);
    }
    return r;
}

std::string Poly::str(const std::vector<std::string>* var_names) const {
    if (terms_.empty())
        return "0";
    auto vname = [&](int i) {
        if (var_names && i < (int)var_names->size())
            return (*var_names)[i];
        if (i == 0)
            return std::string("a");
        return "x" + std::to_string(i);
    };
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat abs = c < Rat(0) ? -c : c;
        if (first) {
            if (c < Rat(0))
                s += "-";
            first = false;
        } else {
            s += c < Rat(0) ? " - " : " + ";
        }
        std::string mono;
        for (int i = 0; i < (int)e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vname(i);
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            s += abs.str();
        else {
            if (!abs.is_one())
                s += abs.str() + "*";
            s += mono;
        }
    }
    return s;
}

namespace {

// exact division; throws when the division does not come out even
Poly divide_exact_impl(Poly x, const Poly& d) {
    if (d.is_zero())
        throw std::domain_error("poly division by zero");
    Poly q;
    // leading term of d in the global monomial order
    auto lead = std::prev(d.terms().end());
    while (!x.is_zero()) {
        auto xl = std::prev(x.terms().end());
        Poly::Expo qe(std::max(xl->first.size(), lead->first.size()), 0);
        for (size_t i = 0; i < qe.size(); ++i) {
            int diff = expo_at(xl->first, (int)i) - expo_at(lead->first, (int)i);
            if (diff < 0)
                throw std::domain_error("poly division not exact");
            qe[i] = diff;
        }
        Rat qc = xl->second / lead->second;
        Poly t;
        t.add_term(qe, qc);
        q = q + t;
        x = x - t * d;
    }
    return q;
}

Poly content_in(const Poly& p, int i) {
    auto coeffs = p.coefficients_in(i);
    Poly g;
    for (const auto& c : coeffs)
        if (!c.is_zero())
            g = poly_gcd(g, c);
    return g;
}

// pseudo-remainder of x by y in variable i
Poly prem(const Poly& x, const Poly& y, int i) {
    Poly r = x;
    int dy = y.degree_in(i);
    Poly ly = y.coefficients_in(i)[dy];
    while (!r.is_zero() && r.degree_in(i) >= dy) {
        int dr = r.degree_in(i);
        Poly lr = r.coefficients_in(i)[dr];
        Poly shift;
        Poly::Expo e(i + 1, 0);
        e[i] = dr - dy;
        shift.add_term(e, Rat(1));
        r = ly * r - lr * shift * y;
    }
    return r;
}

Poly normalize_lead(const Poly& p) {
    if (p.is_zero())
        return p;
    Rat lc = std::prev(p.terms().end())->second;
    Poly r;
    for (const auto& [e, c] : p.terms())
        r.add_term(e, c / lc);
    return r;
}

} // namespace

Poly poly_divide_exact(const Poly& x, const Poly& d) { return divide_exact_impl(x, d); }

Poly poly_gcd(const Poly& x, const Poly& y) {
    if (x.is_zero())
        return normalize_lead(y);
    if (y.is_zero())
        return normalize_lead(x);
    auto vx = x.variables();
    auto vy = y.variables();
    if (vx.empty() && vy.empty())
        return Poly(Rat(1));
    int v = -1;
    if (!vx.empty())
        v = vx.back();
    if (!vy.empty())
        v = std::max(v, vy.back());
    if (!x.depends_on(v))
        return poly_gcd(x, content_in(y, v));
    if (!y.depends_on(v))
        return poly_gcd(content_in(x, v), y);
    Poly cx = content_in(x, v);
    Poly cy = content_in(y, v);
    Poly a = poly_divide_exact(x, cx);
    Poly b = poly_divide_exact(y, cy);
    while (!b.is_zero()) {
        Poly r = prem(a, b, v);
        a = b;
        if (r.is_zero()) {
            b = Poly();
        } else {
            b = poly_divide_exact(r, content_in(r, v));
        }
    }
    return normalize_lead(poly_gcd(cx, cy) * a);
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero() && den_.is_zero())
        throw std::domain_error("RatFunc: 0/0");
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    if (den_.is_zero()) {
        num_ = Poly(Rat(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!(g == Poly(Rat(1)))) {
        num_ = poly_divide_exact(num_, g);
        den_ = poly_divide_exact(den_, g);
    }
    Rat lc = std::prev(den_.terms().end())->second;
    if (!lc.is_one()) {
        Poly n, d;
        for (const auto& [e, c] : num_.terms())
            n.add_term(e, c / lc);
        for (const auto& [e, c] : den_.terms())
            d.add_term(e, c / lc);
        num_ = n;
        den_ = d;
    }
}

bool RatFunc::is_constant_value(const Rat& c) const {
    if (is_infinite())
        return false;
    return num_ == Poly(c) * den_;
}

std::vector<int> RatFunc::variables() const {
    auto v = num_.variables();
    for (int i : den_.variables())
        if (std::find(v.begin(), v.end(), i) == v.end())
            v.push_back(i);
    std::sort(v.begin(), v.end());
    return v;
}

RatFunc operator+(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}
RatFunc operator-(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}
RatFunc operator*(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.num_, x.den_ * y.den_);
}
RatFunc operator/(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.den_, x.den_ * y.num_);
}

RatFunc RatFunc::substitute(int i, const RatFunc& value) const {
    auto [n, kn] = num_.substitute_cleared(i, value.num(), value.den());
    auto [d, kd] = den_.substitute_cleared(i, value.num(), value.den());
    // restore the cleared powers of value.den
    Poly vd = value.den();
    Poly lhs = n, rhs = d;
    for (int t = 0; t < kd - kn; ++t)
        lhs = lhs * vd;
    for (int t = 0; t < kn - kd; ++t)
        rhs = rhs * vd;
    return RatFunc(lhs, rhs);
}

RatFunc RatFunc::rename(const std::map<int, int>& names) const {
    Poly n = num_.rename(names);
    Poly d = den_.rename(names);
    return RatFunc(n, d);
}

std::optional<RatFunc::LinearForm> RatFunc::linear_in(int i) const {
    if (num_.degree_in(i) > 1 || den_.degree_in(i) > 1)
        return std::nullopt;
    auto nc = num_.coefficients_in(i);
    auto dc = den_.coefficients_in(i);
    LinearForm f;
    f.a = nc.size() > 1 ? nc[1] : Poly();
    f.b = nc.size() > 0 ? nc[0] : Poly();
    f.c = dc.size() > 1 ? dc[1] : Poly();
    f.d = dc.size() > 0 ? dc[0] : Poly();
    return f;
}

std::string RatFunc::str(const std::vector<std::string>* var_names) const {
    if (is_infinite())
        return "inf";
    if (den_ == Poly(Rat(1)))
        return num_.str(var_names);
    return "(" + num_.str(var_names) + ")/(" + den_.str(var_names) + ")";
}

} // namespace pathcell
