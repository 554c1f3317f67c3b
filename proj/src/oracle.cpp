#include "lpa/oracle.hpp"

#include <cstdint>
#include <stdexcept>

namespace lpa {
namespace oracle {

namespace {

void check_bounds(const FiniteModuleMap& m) {
    if (m.modulus < 2 || m.modulus > 30) {
        throw std::invalid_argument("oracle: modulus must be in [2, 30]");
    }
    if (m.matrix.rows() > 4 || m.matrix.cols() > 4) {
        throw std::invalid_argument("oracle: dims must be <= 4");
    }
}

std::uint64_t int_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

std::vector<long> reduced_entries(const IntMatrix& a, long m) {
    std::vector<long> out(a.rows() * a.cols());
    mpz_class mod = m;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            mpz_class r;
            mpz_mod(r.get_mpz_t(), a.at(i, j).get_mpz_t(), mod.get_mpz_t());
            out[i * a.cols() + j] = r.get_si();
        }
    }
    return out;
}

void decode(std::uint64_t code, long m, std::vector<long>& x) {
    for (auto& xi : x) {
        xi = static_cast<long>(code % static_cast<std::uint64_t>(m));
        code /= static_cast<std::uint64_t>(m);
    }
}

std::uint64_t encode(const std::vector<long>& x, long m) {
    std::uint64_t code = 0;
    for (std::size_t i = x.size(); i-- > 0;) {
        code = code * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(x[i]);
    }
    return code;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Recovers the invariant factors of a finite abelian p-group bundle from a
// torsion-counting callback: count(d) must return the number of elements
// killed by d. For each prime p the counts of p^j-torsion determine the
// p-part partition, and the prime-power summands are then recombined by
// the canonical form.
template <typename CountFn>
FgAbGroup structure_from_counts(long modulus, CountFn count) {
    std::vector<mpz_class> summands;
    for (long p : prime_factors(modulus)) {
        long pe = 1;
        int max_j = 0;
        while (modulus % (pe * p) == 0) {
            pe *= p;
            ++max_j;
        }
        // s_j = log_p #(p^j-torsion); mu_j = s_j - s_{j-1} counts the
        // cyclic p-power summands of exponent >= j.
        std::vector<int> s(max_j + 1, 0);
        long d = 1;
        for (int j = 1; j <= max_j; ++j) {
            d *= p;
            std::uint64_t c = count(d);
            int log = 0;
            while (c > 1) {
                if (c % static_cast<std::uint64_t>(p) != 0) {
                    throw std::logic_error("oracle: torsion count is not a prime power");
                }
                c /= static_cast<std::uint64_t>(p);
                ++log;
            }
            s[j] = log;
        }
        for (int j = 1; j <= max_j; ++j) {
            int mu_j = s[j] - s[j - 1];
            int mu_next = j < max_j ? s[j + 1] - s[j] : 0;
            int exactly_j = mu_j - mu_next;  // summands Z/p^j
            for (int t = 0; t < exactly_j; ++t) {
                summands.push_back(int_pow(static_cast<std::uint64_t>(p), j));
            }
        }
    }
    return FgAbGroup(0, std::move(summands));
}

}  // namespace

FgAbGroup brute_kernel_mod(const FiniteModuleMap& m) {
    check_bounds(m);
    const long mod = m.modulus;
    const std::size_t rows = m.matrix.rows(), cols = m.matrix.cols();
    const std::vector<long> a = reduced_entries(m.matrix, mod);
    const std::uint64_t domain = int_pow(static_cast<std::uint64_t>(mod), cols);

    std::vector<std::uint64_t> kernel;
    std::vector<long> x(cols);
    for (std::uint64_t code = 0; code < domain; ++code) {
        decode(code, mod, x);
        bool in_kernel = true;
        for (std::size_t i = 0; i < rows && in_kernel; ++i) {
            long acc = 0;
            for (std::size_t j = 0; j < cols; ++j) {
                acc = (acc + a[i * cols + j] * x[j]) % mod;
            }
            in_kernel = acc == 0;
        }
        if (in_kernel) kernel.push_back(code);
    }

    return structure_from_counts(mod, [&](long d) {
        std::uint64_t c = 0;
        std::vector<long> v(cols);
        for (std::uint64_t code : kernel) {
            decode(code, mod, v);
            bool killed = true;
            for (std::size_t j = 0; j < cols && killed; ++j) {
                killed = (d * v[j]) % mod == 0;
            }
            if (killed) ++c;
        }
        return c;
    });
}

FgAbGroup brute_cokernel_mod(const FiniteModuleMap& m) {
    check_bounds(m);
    const long mod = m.modulus;
    const std::size_t rows = m.matrix.rows(), cols = m.matrix.cols();
    const std::vector<long> a = reduced_entries(m.matrix, mod);
    const std::uint64_t domain = int_pow(static_cast<std::uint64_t>(mod), cols);
    const std::uint64_t codomain = int_pow(static_cast<std::uint64_t>(mod), rows);

    std::vector<bool> in_image(codomain, false);
    std::uint64_t image_size = 0;
    std::vector<long> x(cols), y(rows);
    for (std::uint64_t code = 0; code < domain; ++code) {
        decode(code, mod, x);
        for (std::size_t i = 0; i < rows; ++i) {
            long acc = 0;
            for (std::size_t j = 0; j < cols; ++j) {
                acc = (acc + a[i * cols + j] * x[j]) % mod;
            }
            y[i] = acc;
        }
        std::uint64_t ycode = encode(y, mod);
        if (!in_image[ycode]) {
            in_image[ycode] = true;
            ++image_size;
        }
    }

    // #(d-torsion of the quotient) = #{y : d*y in image} / |image|
    return structure_from_counts(mod, [&](long d) {
        std::uint64_t c = 0;
        std::vector<long> v(rows), dv(rows);
        for (std::uint64_t code = 0; code < codomain; ++code) {
            decode(code, mod, v);
            for (std::size_t i = 0; i < rows; ++i) dv[i] = (d * v[i]) % mod;
            if (in_image[encode(dv, mod)]) ++c;
        }
        return c / image_size;
    });
}

std::vector<mpz_class> minors_gcd_invariant_factors(const IntMatrix& a) {
    if (a.rows() > 5 || a.cols() > 5) {
        throw std::invalid_argument("minors oracle: dims must be <= 5");
    }
    const std::size_t nmin = std::min(a.rows(), a.cols());
    std::vector<mpz_class> factors;
    mpz_class prev_g = 1;
    for (std::size_t k = 1; k <= nmin; ++k) {
        mpz_class g = 0;
        std::vector<std::size_t> ri(k), ci(k);
        for (std::size_t i = 0; i < k; ++i) ri[i] = i;
        auto advance = [&](std::vector<std::size_t>& idx, std::size_t limit) {
            std::size_t pos = k;
            while (pos-- > 0) {
                if (idx[pos] + 1 <= limit - (k - pos)) {
                    ++idx[pos];
                    for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        do {
            for (std::size_t i = 0; i < k; ++i) ci[i] = i;
            do {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = a.at(ri[i], ci[j]);
                mpz_class det = sub.determinant();
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
            } while (advance(ci, a.cols()));
        } while (advance(ri, a.rows()));

        if (g == 0) break;  // rank reached
        factors.push_back(g / prev_g);
        prev_g = g;
    }
    return factors;
}

}  // namespace oracle
}  // namespace lpa
