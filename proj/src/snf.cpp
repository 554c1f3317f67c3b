#include "lpa/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpa {

namespace {

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Smallest nonzero |entry| in the trailing submatrix of d starting at t,
// row-major scan for deterministic tie-breaking. Returns false if the
// trailing submatrix is zero.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    mpz_class best;
    for (std::size_t i = t; i < d.rows(); ++i) {
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            mpz_class mag = abs(d.at(i, j));
            if (!found || mag < best) {
                found = true;
                best = mag;
                pi = i;
                pj = j;
            }
        }
    }
    return found;
}

bool pivot_is_lone(const IntMatrix& d, std::size_t t) {
    for (std::size_t i = t + 1; i < d.rows(); ++i)
        if (d.at(i, t) != 0) return false;
    for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (d.at(t, j) != 0) return false;
    return true;
}

// Replaces the adjacent diagonal pair (a, b) = (d[i][i], d[j][j]) by
// (gcd, lcm) through an explicit 2x2 Bezout transform applied to rows
// {i, j} of (d, u) and columns {i, j} of (d, v); both 2x2 blocks have
// determinant +1.
void merge_diagonal_pair(IntMatrix& d, IntMatrix& u, IntMatrix& v, std::size_t i, std::size_t j) {
    mpz_class a = d.at(i, i), b = d.at(j, j);
    mpz_class g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_class ag = a / g, bg = b / g;

    auto row_transform = [&](IntMatrix& m) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_class ri = m.at(i, c), rj = m.at(j, c);
            m.at(i, c) = x * ri + y * rj;
            m.at(j, c) = -bg * ri + ag * rj;
        }
    };
    auto col_transform = [&](IntMatrix& m) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            mpz_class ci = m.at(r, i), cj = m.at(r, j);
            m.at(r, i) = ci + cj;
            m.at(r, j) = -(y * bg) * ci + (x * ag) * cj;
        }
    };
    row_transform(d);
    row_transform(u);
    col_transform(d);
    col_transform(v);
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    SNFResult res{IntMatrix::identity(rows), a, IntMatrix::identity(cols),
                  {}};
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    const std::size_t nmin = std::min(rows, cols);
    std::size_t rank = 0;
    for (std::size_t t = 0; t < nmin; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(d, t, pi, pj)) break;
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        // Euclidean reduction of the pivot row and column. Each pass
        // strictly shrinks |pivot| unless it already divides everything
        // it meets, so this terminates.
        while (!pivot_is_lone(d, t)) {
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d.at(i, t) == 0) continue;
                mpz_class q = d.at(i, t) / d.at(t, t);
                if (q != 0) {
                    d.add_row_multiple(i, t, -q);
                    u.add_row_multiple(i, t, -q);
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d.at(t, j) == 0) continue;
                mpz_class q = d.at(t, j) / d.at(t, t);
                if (q != 0) {
                    d.add_col_multiple(j, t, -q);
                    v.add_col_multiple(j, t, -q);
                }
            }
            if (pivot_is_lone(d, t)) break;
            if (!find_pivot(d, t, pi, pj)) break;
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
        }

        if (d.at(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
        ++rank;
    }

    // Restore the divisibility chain on the diagonal by merging adjacent
    // incomparable factors into (gcd, lcm) pairs.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < rank; ++i) {
            if (mpz_divisible_p(d.at(i + 1, i + 1).get_mpz_t(), d.at(i, i).get_mpz_t())) continue;
            merge_diagonal_pair(d, u, v, i, i + 1);
            changed = true;
        }
    }

    for (std::size_t i = 0; i < rank; ++i) res.invariant_factors.push_back(d.at(i, i));
    return res;
}

DecompositionData decomposition_data(const IntMatrix& a, std::size_t singular_count) {
    SNFResult snf = smith_normal_form(a);
    DecompositionData dd;
    dd.s = singular_count;
    for (const auto& f : snf.invariant_factors) {
        if (f == 1) {
            ++dd.ones;
        } else {
            dd.factors.push_back(f);
        }
    }
    dd.m = a.cols() - (dd.ones + dd.factors.size());
    return dd;
}

FgAbGroup cokernel_over_z(const IntMatrix& a) {
    SNFResult snf = smith_normal_form(a);
    std::vector<mpz_class> torsion;
    for (const auto& f : snf.invariant_factors)
        if (f > 1) torsion.push_back(f);
    return FgAbGroup(a.rows() - snf.invariant_factors.size(), std::move(torsion));
}

FgAbGroup kernel_over_z(const IntMatrix& a) {
    SNFResult snf = smith_normal_form(a);
    return FgAbGroup::free(a.cols() - snf.invariant_factors.size());
}

FgAbGroup cokernel_mod(const IntMatrix& a, const mpz_class& modulus) {
    if (modulus < 2) throw std::invalid_argument("cokernel_mod: modulus must be >= 2");
    SNFResult snf = smith_normal_form(a);
    const std::size_t nmin = std::min(a.rows(), a.cols());
    std::vector<mpz_class> orders;
    for (std::size_t i = 0; i < nmin; ++i) {
        // Zero diagonal entries contribute the full Z/modulus.
        orders.push_back(snf.d.at(i, i) == 0 ? modulus : gcd(snf.d.at(i, i), modulus));
    }
    for (std::size_t i = nmin; i < a.rows(); ++i) orders.push_back(modulus);
    return FgAbGroup(0, std::move(orders));
}

FgAbGroup kernel_mod(const IntMatrix& a, const mpz_class& modulus) {
    if (modulus < 2) throw std::invalid_argument("kernel_mod: modulus must be >= 2");
    SNFResult snf = smith_normal_form(a);
    const std::size_t nmin = std::min(a.rows(), a.cols());
    std::vector<mpz_class> orders;
    for (std::size_t i = 0; i < nmin; ++i) {
        orders.push_back(snf.d.at(i, i) == 0 ? modulus : gcd(snf.d.at(i, i), modulus));
    }
    for (std::size_t j = nmin; j < a.cols(); ++j) orders.push_back(modulus);
    return FgAbGroup(0, std::move(orders));
}

}  // namespace lpa
