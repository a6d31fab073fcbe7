#include "hypell/rat.hpp"

#include <cctype>

namespace hypell {

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw domain_error("rat_pow: 0 to a negative power");
        return Rat(0);
    }
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

bool is_square(const Int& n, Int* root) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (root) {
        mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    }
    return true;
}

bool is_square(const Rat& q, Rat* root) {
    Int rn, rd;
    if (!is_square(q.get_num(), &rn)) return false;
    if (!is_square(q.get_den(), &rd)) return false;
    if (root) {
        *root = Rat(rn, rd);
        root->canonicalize();
    }
    return true;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw capability_error("integer does not fit in a machine word: " + n.get_str());
    return n.get_si();
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw io_error("empty rational literal");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw io_error("malformed rational literal: " + s);
    }
    Rat q;
    if (q.set_str(s, 10) != 0) throw io_error("malformed rational literal: " + s);
    if (q.get_den() == 0) throw io_error("zero denominator in rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string format_rat(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int legendre(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

Rat first_rational() { return Rat(0); }

// Successor in the fixed order: 0 first, then shells of ascending height
// h = max(|num|, den); inside a shell, ascending den, then ascending num.
// Each reduced fraction appears exactly once:
// 0, -1, 1, -2, 2, -1/2, 1/2, -3, 3, -3/2, 3/2, -2/3, -1/3, 1/3, 2/3, ...
std::optional<Rat> next_rational(const Rat& q) {
    Int num = q.get_num();
    Int den = q.get_den();
    Int h = num < 0 ? Int(-num) : num;
    if (den > h) h = den;
    if (num == 0) { h = 0; den = 1; num = 0; }
    while (true) {
        num += 1;
        if (num > h) {
            den += 1;
            num = -h;
        }
        if (den > h) {
            h += 1;
            den = 1;
            num = -h;
            if (h > (1 << 20)) return std::nullopt;
        }
        if (num == 0) continue;
        Int a = num < 0 ? Int(-num) : num;
        Int m = a > den ? a : den;
        if (m != h) continue;
        if (gcd(a, den) != 1) continue;
        Rat c(num, den);
        c.canonicalize();
        return c;
    }
}

} // namespace hypell
