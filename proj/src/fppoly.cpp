#include "hypell/fppoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace hypell {

int64_t mod_pow(int64_t b, int64_t e, int64_t p) {
    if (e < 0) return mod_pow(mod_inv(b, p), -e, p);
    int64_t r = 1 % p;
    b %= p;
    if (b < 0) b += p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

int64_t mod_inv(int64_t a, int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw domain_error("inverse of 0 mod p");
    int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        int64_t q = r / nr;
        t -= q * nt; std::swap(t, nt);
        r -= q * nr; std::swap(r, nr);
    }
    if (r != 1) throw domain_error("not invertible mod p");
    return t < 0 ? t + p : t;
}

FpPoly::FpPoly(int64_t p, std::vector<int64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (p_ < 2) throw domain_error("FpPoly needs p >= 2");
    for (auto& c : c_) {
        c %= p_;
        if (c < 0) c += p_;
    }
    trim();
}

FpPoly FpPoly::x(int64_t p) { return FpPoly(p, {0, 1}); }
FpPoly FpPoly::constant(int64_t p, int64_t c) { return FpPoly(p, {c}); }

FpPoly FpPoly::monomial(int64_t p, int n, int64_t c) {
    std::vector<int64_t> v(n + 1, 0);
    v[n] = c;
    return FpPoly(p, std::move(v));
}

int64_t FpPoly::lc() const {
    if (c_.empty()) throw domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator-() const {
    FpPoly r = *this;
    for (auto& c : r.c_) c = c ? p_ - c : 0;
    return r;
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    if (p_ != o.p_) throw internal_error("mixed moduli in FpPoly arithmetic");
    std::vector<int64_t> v(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) {
        v[i] += o.c_[i];
        if (v[i] >= p_) v[i] -= p_;
    }
    FpPoly r(p_);
    r.c_ = std::move(v);
    r.trim();
    return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const { return *this + (-o); }

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (p_ != o.p_) throw internal_error("mixed moduli in FpPoly arithmetic");
    if (is_zero() || o.is_zero()) return FpPoly(p_);
    std::vector<int64_t> v(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] = (v[i + j] + c_[i] * o.c_[j]) % p_;
    }
    FpPoly r(p_);
    r.c_ = std::move(v);
    r.trim();
    return r;
}

FpPoly FpPoly::operator*(int64_t s) const {
    s %= p_;
    if (s < 0) s += p_;
    FpPoly r(p_);
    r.c_ = c_;
    for (auto& c : r.c_) c = c * s % p_;
    r.trim();
    return r;
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    return *this * mod_inv(lc(), p_);
}

FpPoly FpPoly::derivative() const {
    if (c_.size() <= 1) return FpPoly(p_);
    FpPoly r(p_);
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * (static_cast<int64_t>(i) % p_) % p_;
    r.trim();
    return r;
}

int64_t FpPoly::eval(int64_t t) const {
    t %= p_;
    if (t < 0) t += p_;
    int64_t r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = (r * t + c_[i]) % p_;
    return r;
}

std::string FpPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        int64_t c = (*this)[i];
        if (!c) continue;
        if (!first) out << " + ";
        first = false;
        if (i == 0) {
            out << c;
        } else {
            if (c != 1) out << c << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

FpDivRem fp_divrem(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    int64_t p = a.p();
    std::vector<int64_t> rem(a.coeffs());
    std::vector<int64_t> q(std::max(0, a.deg() - b.deg() + 1), 0);
    int64_t binv = mod_inv(b.lc(), p);
    int db = b.deg();
    int dr = a.deg();
    while (dr >= db) {
        int64_t c = rem[dr] * binv % p;
        if (c) {
            q[dr - db] = c;
            for (int i = 0; i <= db; ++i) {
                rem[dr - db + i] = (rem[dr - db + i] - c * b[i]) % p;
                if (rem[dr - db + i] < 0) rem[dr - db + i] += p;
            }
        }
        --dr;
        while (dr >= 0 && rem[dr] == 0) --dr;
    }
    rem.resize(dr + 1);
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(rem))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return fp_divrem(a, b).rem; }

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly u = a, v = b;
    while (!v.is_zero()) {
        FpPoly r = u % v;
        u = std::move(v);
        v = std::move(r);
    }
    return u.monic();
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return (a * b) % m; }

FpPoly fp_powmod(const FpPoly& a, const Int& e, const FpPoly& m) {
    if (e < 0) throw domain_error("negative exponent in fp_powmod");
    FpPoly r = FpPoly::constant(a.p(), 1) % m;
    FpPoly base = a % m;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = fp_mulmod(r, base, m);
        base = fp_mulmod(base, base, m);
        k >>= 1;
    }
    return r;
}

int64_t fp_resultant(const FpPoly& a, const FpPoly& b) {
    int64_t p = a.p();
    if (a.is_zero() || b.is_zero()) {
        if (a.deg() == 0 && b.deg() == 0) return 1;
        return 0;
    }
    FpPoly A = a, B = b;
    int64_t acc = 1;
    bool neg = false;
    while (true) {
        if (A.deg() == 0) { acc = acc * mod_pow(A.lc(), B.deg(), p) % p; break; }
        if (B.deg() == 0) { acc = acc * mod_pow(B.lc(), A.deg(), p) % p; break; }
        if (A.deg() < B.deg()) {
            if ((A.deg() & 1) && (B.deg() & 1)) neg = !neg;
            std::swap(A, B);
        }
        FpPoly R = A % B;
        if (R.is_zero()) return 0;
        if ((A.deg() & 1) && (B.deg() & 1)) neg = !neg;
        acc = acc * mod_pow(B.lc(), A.deg() - R.deg(), p) % p;
        A = std::move(B);
        B = std::move(R);
    }
    return neg ? (p - acc) % p : acc;
}

bool fp_is_squarefree(const FpPoly& f) {
    if (f.is_zero()) return false;
    if (f.deg() == 0) return true;
    return fp_gcd(f, f.derivative()).deg() == 0;
}

FpPoly reduce_mod_p(const QPoly& f, int64_t p) {
    std::vector<int64_t> v(f.deg() + 1);
    for (int i = 0; i <= f.deg(); ++i) v[i] = reduce_mod_p(f[i], p);
    return FpPoly(p, std::move(v));
}

int64_t reduce_mod_p(const Rat& c, int64_t p) {
    Int num = c.get_num() % p;
    Int den = c.get_den() % p;
    if (den == 0) throw bad_reduction_error("denominator divisible by " + std::to_string(p));
    int64_t n = num.get_si() % p;
    if (n < 0) n += p;
    return n * mod_inv(den.get_si(), p) % p;
}

namespace {

// x^(p^i) mod f, advanced one Frobenius step at a time.
FpPoly frobenius_step(const FpPoly& h, const FpPoly& f) {
    return fp_powmod(h, Int(static_cast<long>(h.p())), f);
}

// f with f' == 0 is g(x^p); over F_p the p-th root just contracts indices.
FpPoly pth_root(const FpPoly& f) {
    int64_t p = f.p();
    std::vector<int64_t> v(f.deg() / p + 1, 0);
    for (int i = 0; i * p <= f.deg(); ++i) v[i] = f[i * static_cast<int>(p)];
    return FpPoly(p, std::move(v));
}

void squarefree_decomp(const FpPoly& f, int mult, std::vector<std::pair<FpPoly, int>>& out) {
    if (f.deg() <= 0) return;
    FpPoly fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_decomp(pth_root(f), mult * static_cast<int>(f.p()), out);
        return;
    }
    FpPoly g = fp_gcd(f, fp);
    FpPoly w = fp_divrem(f, g).quot;
    int i = 1;
    while (w.deg() > 0) {
        FpPoly y = fp_gcd(w, g);
        FpPoly z = fp_divrem(w, y).quot;
        if (z.deg() > 0) out.emplace_back(z.monic(), i * mult);
        g = fp_divrem(g, y).quot;
        w = std::move(y);
        ++i;
    }
    if (g.deg() > 0) squarefree_decomp(pth_root(g), mult * static_cast<int>(f.p()), out);
}

// Cantor-Zassenhaus equal-degree splitting for odd p.
void edf(const FpPoly& h, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (h.deg() == d) {
        out.push_back(h.monic());
        return;
    }
    int64_t p = h.p();
    Int e = (int_pow(Int(static_cast<long>(p)), d) - 1) / 2;
    while (true) {
        std::vector<int64_t> rc(2 * d);
        for (auto& c : rc) c = static_cast<int64_t>(rng() % static_cast<uint64_t>(p));
        FpPoly r(p, std::move(rc));
        if (r.deg() < 1) continue;
        FpPoly s = fp_powmod(r, e, h);
        FpPoly g = fp_gcd(s - FpPoly::constant(p, 1), h);
        if (g.deg() > 0 && g.deg() < h.deg()) {
            edf(g, d, rng, out);
            edf(fp_divrem(h, g).quot, d, rng, out);
            return;
        }
    }
}

} // namespace

bool fp_is_irreducible(const FpPoly& f) {
    int n = f.deg();
    if (n < 1) return false;
    if (n == 1) return true;
    if (!fp_is_squarefree(f)) return false;
    FpPoly m = f.monic();
    // x^(p^n) == x mod f, and gcd(x^(p^(n/l)) - x, f) == 1 for prime l | n.
    FpPoly h = FpPoly::x(f.p());
    std::vector<FpPoly> powers; // powers[i] = x^(p^(i+1)) mod f
    for (int i = 0; i < n; ++i) {
        h = frobenius_step(h, m);
        powers.push_back(h);
    }
    if (!(powers[n - 1] == FpPoly::x(f.p()) % m)) return false;
    for (int l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool lprime = true;
        for (int q = 2; q * q <= l; ++q)
            if (l % q == 0) { lprime = false; break; }
        if (!lprime) continue;
        if (fp_gcd(powers[n / l - 1] - FpPoly::x(f.p()), m).deg() != 0) return false;
    }
    return true;
}

std::vector<FpFactor> factor_fp(const FpPoly& f, uint64_t seed) {
    if (f.is_zero()) throw domain_error("factor of zero polynomial");
    if ((f.p() & 1) == 0 || !is_probable_prime(Int(static_cast<long>(f.p()))))
        throw domain_error("factor_fp needs an odd prime modulus");
    std::vector<FpFactor> out;
    if (f.deg() < 1) return out;
    std::mt19937_64 rng(seed);
    std::vector<std::pair<FpPoly, int>> sqf;
    squarefree_decomp(f.monic(), 1, sqf);
    for (auto& [part, mult] : sqf) {
        // Distinct-degree stage on each squarefree part.
        FpPoly rest = part;
        FpPoly h = FpPoly::x(f.p());
        int d = 0;
        std::vector<std::pair<FpPoly, int>> stages; // (product of deg-d irreducibles, d)
        while (rest.deg() > 0) {
            ++d;
            if (2 * d > rest.deg()) {
                stages.emplace_back(rest, rest.deg());
                break;
            }
            h = frobenius_step(h % rest, rest);
            FpPoly g = fp_gcd(h - FpPoly::x(f.p()), rest);
            if (g.deg() > 0) {
                stages.emplace_back(g, d);
                rest = fp_divrem(rest, g).quot;
            }
        }
        for (auto& [prod, dd] : stages) {
            std::vector<FpPoly> irr;
            edf(prod, dd, rng, irr);
            for (auto& q : irr) out.push_back({q, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
        if (!(a.factor == b.factor)) return fp_poly_less(a.factor, b.factor);
        return a.multiplicity < b.multiplicity;
    });
    // Verify the product reconstructs f exactly; this guards the splitting code.
    FpPoly check = FpPoly::constant(f.p(), f.lc());
    for (auto& [q, m] : out)
        for (int i = 0; i < m; ++i) check = check * q;
    if (!(check == f)) throw internal_error("factor_fp product check failed");
    return out;
}

std::vector<FpFactor> factor_fp(const QPoly& f, int64_t p, uint64_t seed) {
    return factor_fp(reduce_mod_p(f, p), seed);
}

bool fp_poly_less(const FpPoly& a, const FpPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = a.deg(); i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

} // namespace hypell
