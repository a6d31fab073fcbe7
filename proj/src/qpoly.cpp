#include "hypell/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace hypell {

namespace {
const Rat kZero(0);
} // namespace

QPoly::QPoly(const Rat& c) {
    if (c != 0) c_.push_back(c);
}

QPoly::QPoly(long c) {
    if (c != 0) c_.push_back(Rat(c));
}

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::x() { return monomial(1); }

QPoly QPoly::monomial(int n, const Rat& c) {
    if (n < 0) throw domain_error("monomial with negative exponent");
    if (c == 0) return QPoly();
    std::vector<Rat> v(n + 1, Rat(0));
    v[n] = c;
    return QPoly(std::move(v));
}

QPoly QPoly::from_desc(std::vector<Rat> coeffs) {
    std::reverse(coeffs.begin(), coeffs.end());
    return QPoly(std::move(coeffs));
}

bool QPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const Rat& QPoly::operator[](int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const Rat& QPoly::lc() const {
    if (c_.empty()) throw domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const Rat& s) const {
    if (s == 0) return QPoly();
    QPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

QPoly QPoly::operator/(const Rat& s) const {
    if (s == 0) throw domain_error("division of polynomial by zero scalar");
    return *this * (1 / s);
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return *this / lc();
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<Rat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return QPoly(std::move(v));
}

Rat QPoly::eval(const Rat& t) const {
    Rat r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
    return r;
}

QPoly QPoly::compose(const QPoly& inner) const {
    QPoly r;
    for (size_t i = c_.size(); i-- > 0;) r = r * inner + QPoly(c_[i]);
    return r;
}

QPoly QPoly::pow(unsigned long e) const {
    QPoly r(Rat(1)), base = *this;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

QPoly QPoly::shift_up(int n) const {
    if (is_zero()) return QPoly();
    std::vector<Rat> v(c_.size() + n, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i + n] = c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::truncate(int n) const {
    if (n <= 0) return QPoly();
    std::vector<Rat> v(c_.begin(), c_.begin() + std::min<size_t>(c_.size(), n));
    return QPoly(std::move(v));
}

QPoly QPoly::reverse(int n) const {
    if (n < deg()) throw domain_error("reverse window smaller than degree");
    std::vector<Rat> v(n + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) v[n - i] = c_[i];
    return QPoly(std::move(v));
}

Rat QPoly::content() const {
    if (is_zero()) return Rat(0);
    Int num_gcd(0), den_lcm(1);
    for (const auto& c : c_) {
        if (c == 0) continue;
        num_gcd = gcd(num_gcd, c.get_num());
        den_lcm = lcm(den_lcm, c.get_den());
    }
    Rat r(num_gcd, den_lcm);
    r.canonicalize();
    if (lc() < 0) r = -r;
    return r;
}

QPoly QPoly::primitive_z() const {
    if (is_zero()) return QPoly();
    return *this / content();
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        const Rat& c = (*this)[i];
        if (c == 0) continue;
        Rat a = c > 0 ? c : Rat(-c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (i == 0) {
            out << format_rat(a);
        } else {
            if (!unit) out << format_rat(a) << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

QPolyDivRem divrem(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    QPoly rem = a;
    std::vector<Rat> q(std::max(0, a.deg() - b.deg() + 1), Rat(0));
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
        int k = rem.deg() - b.deg();
        Rat c = rem.lc() / b.lc();
        q[k] = c;
        rem -= b.shift_up(k) * c;
    }
    return {QPoly(std::move(q)), rem};
}

QPoly operator/(const QPoly& a, const QPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw internal_error("inexact polynomial division");
    return q;
}

QPoly operator%(const QPoly& a, const QPoly& b) { return divrem(a, b).rem; }

namespace {

// Integer-polynomial helpers for the primitive PRS.
using ZP = std::vector<Int>; // low-to-high, trimmed

ZP to_z(const QPoly& p) {
    QPoly prim = p.primitive_z();
    ZP v(prim.deg() + 1);
    for (int i = 0; i <= prim.deg(); ++i) v[i] = prim[i].get_num();
    return v;
}

void ztrim(ZP& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

Int zcontent(const ZP& v) {
    Int g(0);
    for (const auto& c : v) g = gcd(g, c);
    return g;
}

// Pseudo-remainder: rem(lc(b)^(deg a - deg b + 1) * a, b), stays in Z[x].
ZP zprem(ZP a, const ZP& b) {
    Int lb = b.back();
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        Int la = a.back();
        int k = static_cast<int>(a.size()) - 1 - db;
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[k + i] -= la * b[i];
        ztrim(a);
        if (a.empty()) break;
    }
    return a;
}

} // namespace

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZP u = to_z(a), v = to_z(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        ZP r = zprem(u, v);
        Int c = zcontent(r);
        if (c != 0)
            for (auto& x : r) x /= c;
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rat> coeffs(u.size());
    for (size_t i = 0; i < u.size(); ++i) coeffs[i] = Rat(u[i]);
    return QPoly(std::move(coeffs)).monic();
}

XgcdResult poly_xgcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly s0(Rat(1)), s1, t0, t1(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        QPoly s2 = s0 - q * s1;
        QPoly t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) return {QPoly(), QPoly(), QPoly()};
    Rat l = r0.lc();
    return {r0 / l, s0 / l, t0 / l};
}

QPoly inverse_mod(const QPoly& a, const QPoly& m) {
    if (m.deg() < 1) throw domain_error("inverse modulo a constant");
    auto [g, s, t] = poly_xgcd(a % m, m);
    (void)t;
    if (!g.is_one()) throw domain_error("element not invertible modulo " + m.str());
    return s % m;
}

QPoly mulmod(const QPoly& a, const QPoly& b, const QPoly& m) { return (a * b) % m; }

QPoly powmod(const QPoly& a, const Int& e, const QPoly& m) {
    if (e < 0) return powmod(inverse_mod(a, m), -e, m);
    QPoly r(Rat(1)), base = a % m;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        k >>= 1;
    }
    return r;
}

Rat resultant(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        if (a.is_constant() && b.is_constant() && !(a.is_zero() && b.is_zero()))
            return Rat(1);
        return Rat(0);
    }
    // res(A, B) = lc(A)^deg(B) * prod B(alpha) over roots alpha of A.
    QPoly A = a, B = b;
    Rat acc(1);
    bool neg = false;
    while (true) {
        if (A.deg() == 0) { acc *= rat_pow(A.lc(), B.deg()); break; }
        if (B.deg() == 0) { acc *= rat_pow(B.lc(), A.deg()); break; }
        if (A.deg() < B.deg()) {
            if ((A.deg() & 1) && (B.deg() & 1)) neg = !neg;
            std::swap(A, B);
        }
        QPoly R = A % B;
        if (R.is_zero()) return Rat(0);
        if ((A.deg() & 1) && (B.deg() & 1)) neg = !neg;
        acc *= rat_pow(B.lc(), A.deg() - R.deg());
        A = std::move(B);
        B = std::move(R);
    }
    return neg ? -acc : acc;
}

Rat discriminant(const QPoly& f) {
    int d = f.deg();
    if (d < 1) throw domain_error("discriminant needs degree >= 1");
    Rat r = resultant(f, f.derivative()) / f.lc();
    if (((static_cast<long>(d) * (d - 1)) / 2) % 2 == 1) r = -r;
    return r;
}

bool is_squarefree(const QPoly& f) {
    if (f.is_zero()) return false;
    if (f.deg() == 0) return true;
    return poly_gcd(f, f.derivative()).deg() == 0;
}

std::vector<SquarefreePart> squarefree_decomposition(const QPoly& f) {
    if (f.is_zero()) throw domain_error("squarefree decomposition of zero");
    std::vector<SquarefreePart> out;
    QPoly g = f.monic();
    if (g.deg() == 0) return out;
    QPoly d = poly_gcd(g, g.derivative());
    if (d.deg() == 0) {
        out.push_back({g, 1});
        return out;
    }
    QPoly c = g / d;
    QPoly w = g.derivative() / d - c.derivative();
    int i = 1;
    while (c.deg() > 0) {
        QPoly ai = poly_gcd(c, w);
        if (ai.deg() > 0) out.push_back({ai, i});
        c = c / ai;
        w = w / ai - c.derivative();
        ++i;
    }
    return out;
}

bool poly_less(const QPoly& a, const QPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = a.deg(); i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

} // namespace hypell
