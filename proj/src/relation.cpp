#include "qsw/relation.hpp"

#include <algorithm>

namespace qsw {

namespace {

// Clear denominators row-wise and return an integer matrix.
std::vector<std::vector<BigInt>>
integerize(const std::vector<std::vector<Rational>>& m) {
    std::vector<std::vector<BigInt>> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        BigInt lcm{1};
        for (const auto& x : row) {
            BigInt den = x.get_den();
            BigInt g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        std::vector<BigInt> irow;
        irow.reserve(row.size());
        for (const auto& x : row) {
            Rational scaled = x * Rational(lcm);
            irow.push_back(scaled.get_num());
        }
        out.push_back(std::move(irow));
    }
    return out;
}

// Scale a rational kernel vector to coprime integers with positive leading
// nonzero entry.
void normalize(std::vector<Rational>& v) {
    BigInt lcm{1};
    for (const auto& x : v) {
        BigInt den = x.get_den();
        BigInt g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    BigInt gcd{0};
    for (auto& x : v) {
        x = x * Rational(lcm);
        BigInt num = x.get_num();
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), num.get_mpz_t());
    }
    if (gcd != 0) {
        for (auto& x : v) x = x / Rational(gcd);
    }
    for (const auto& x : v) {
        if (x != 0) {
            if (x < 0)
                for (auto& y : v) y = -y;
            break;
        }
    }
}

} // namespace

std::vector<std::vector<Rational>> find_relation(const std::vector<Series>& fs,
                                                 long N) {
    if (fs.size() < 2)
        throw DomainError("relation search needs at least two series");
    if (N < 0) throw OrderError("relation order must be >= 0");

    Ring ring = fs[0].ring();
    for (const auto& f : fs) {
        ring = unify_rings(ring, f.ring());
        if (f.order() < N)
            throw OrderError("series order below requested relation order");
    }

    const std::size_t s = fs.size();
    std::vector<Series> gs;
    gs.reserve(s);
    for (const auto& f : fs) gs.push_back(f.convert(ring));

    // Rows indexed by coefficient degree (two rows per degree over the
    // Eisenstein integers: the 1-component and the omega-component).
    std::vector<std::vector<Rational>> rat;
    for (long n = 0; n <= N; ++n) {
        if (ring == Ring::Eisenstein) {
            std::vector<Rational> r1(s), rw(s);
            for (std::size_t i = 0; i < s; ++i) {
                Eisenstein c = gs[i].at_eis(n);
                r1[i] = Rational(c.real_part());
                rw[i] = Rational(c.omega_part());
            }
            rat.push_back(std::move(r1));
            rat.push_back(std::move(rw));
        } else {
            std::vector<Rational> r(s);
            for (std::size_t i = 0; i < s; ++i)
                r[i] = ring == Ring::Integer ? Rational(gs[i].at_int(n))
                                             : gs[i].at_rat(n);
            rat.push_back(std::move(r));
        }
    }

    std::vector<std::vector<BigInt>> m = integerize(rat);
    const std::size_t rows = m.size();

    // Fraction-free (Bareiss) elimination to row echelon form.  Every
    // division below is exact.
    std::vector<long> pivot_col; // pivot column of each pivot row, in order
    std::vector<char> is_pivot(s, 0);
    BigInt prev{1};
    std::size_t rank = 0;
    for (std::size_t c = 0; c < s && rank < rows; ++c) {
        std::size_t pr = rank;
        while (pr < rows && m[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[rank], m[pr]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t j = c + 1; j < s; ++j) {
                BigInt t = m[rank][c] * m[r][j] - m[r][c] * m[rank][j];
                mpz_divexact(m[r][j].get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        pivot_col.push_back(static_cast<long>(c));
        is_pivot[c] = 1;
        ++rank;
    }

    // One kernel vector per free column, by back substitution.
    std::vector<std::vector<Rational>> kernel;
    for (std::size_t fc = 0; fc < s; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(s, Rational(0));
        v[fc] = Rational(1);
        for (std::size_t ri = rank; ri-- > 0;) {
            long pc = pivot_col[ri];
            Rational acc(0);
            for (std::size_t j = static_cast<std::size_t>(pc) + 1; j < s; ++j)
                acc += Rational(m[ri][j]) * v[j];
            v[static_cast<std::size_t>(pc)] = -acc / Rational(m[ri][pc]);
        }
        normalize(v);
        kernel.push_back(std::move(v));
    }

    // Re-verify each relation against the series before returning it.
    for (const auto& v : kernel) {
        Series acc(ring == Ring::Integer ? Ring::Rational : ring, N);
        if (ring == Ring::Eisenstein) {
            for (std::size_t i = 0; i < s; ++i) {
                if (v[i] == 0) continue;
                if (!is_integer(v[i]))
                    throw DomainError("non-integer Eisenstein relation");
                Series t = gs[i];
                Series w(Ring::Eisenstein, N);
                w.set(0, Eisenstein(v[i].get_num(), BigInt(0)));
                acc = series_add(acc, series_mul(t, w));
            }
        } else {
            for (std::size_t i = 0; i < s; ++i) {
                if (v[i] == 0) continue;
                Series w(Ring::Rational, N);
                w.set(0, v[i]);
                acc = series_add(acc, series_mul(gs[i].convert(Ring::Rational), w));
            }
        }
        for (long n = 0; n <= N; ++n)
            if (!acc.coeff_is_zero(n))
                throw DomainError("internal error: relation fails to verify");
    }

    return kernel;
}

} // namespace qsw
