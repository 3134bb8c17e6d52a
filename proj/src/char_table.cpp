#include "wlab/char_table.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wlab/prime_field.hpp"

namespace wlab {

namespace {

using FpVec = std::vector<std::uint64_t>;
using FpMat = std::vector<FpVec>;  // row-major

// Reduced row echelon form in place; returns the pivot column of each
// surviving row. Pivot choice (first nonzero) is deterministic.
std::vector<int> rref(FpMat& m, const PrimeField& fp) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        std::uint64_t piv_inv = fp.inv(m[row][col]);
        for (size_t j = col; j < cols; ++j) m[row][j] = fp.mul(m[row][j], piv_inv);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            std::uint64_t f = m[i][col];
            for (size_t j = col; j < cols; ++j) {
                m[i][j] = fp.sub(m[i][j], fp.mul(f, m[row][j]));
            }
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row);
    return pivots;
}

// Kernel basis of a square matrix, one vector per free column, in column
// order (deterministic).
std::vector<FpVec> kernel_basis(FpMat m, const PrimeField& fp) {
    const size_t n = m.size();
    std::vector<int> pivots = rref(m, fp);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<FpVec> basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        FpVec v(n, 0);
        v[free_col] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = fp.neg(m[r][free_col]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Matrix of the action of `m` on the span of `basis` (columns, full rank s):
// solves m*B = B*C for the s-by-s matrix C.
FpMat restriction(const FpMat& m, const std::vector<FpVec>& basis, const PrimeField& fp) {
    const size_t r = m.size();
    const size_t s = basis.size();
    FpMat aug(r, FpVec(2 * s, 0));
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < s; ++j) aug[i][j] = basis[j][i];
        for (size_t j = 0; j < s; ++j) {
            std::uint64_t acc = 0;
            for (size_t t = 0; t < r; ++t) acc = fp.add(acc, fp.mul(m[i][t], basis[j][t]));
            aug[i][s + j] = acc;
        }
    }
    std::vector<int> pivots = rref(aug, fp);
    if (pivots.size() < s) throw std::logic_error("restriction: basis not independent");
    for (size_t i = 0; i < s; ++i) {
        if (pivots[i] != static_cast<int>(i)) {
            throw std::logic_error("restriction: subspace not invariant");
        }
    }
    FpMat c(s, FpVec(s, 0));
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j) c[i][j] = aug[i][s + j];
    return c;
}

FpVec mat_apply_basis(const std::vector<FpVec>& basis, const FpVec& coords,
                      const PrimeField& fp) {
    FpVec out(basis.empty() ? 0 : basis[0].size(), 0);
    for (size_t j = 0; j < basis.size(); ++j) {
        if (coords[j] == 0) continue;
        for (size_t i = 0; i < out.size(); ++i) {
            out[i] = fp.add(out[i], fp.mul(coords[j], basis[j][i]));
        }
    }
    return out;
}

// Structure-constant matrix of class i: entry [j][k] counts x in C_i with
// x^{-1} g_k in C_j, i.e. the coefficient of the k-th class sum in the
// product of class sums i and j.
FpMat class_matrix(const FinGroup& g, const ClassData& cd, int i, const PrimeField& fp) {
    const int r = cd.count;
    FpMat m(r, FpVec(r, 0));
    for (int k = 0; k < r; ++k) {
        int gk = cd.representatives[k];
        for (int x : cd.members[i]) {
            int j = cd.class_of[g.mul(g.inv(x), gk)];
            m[j][k] = fp.add(m[j][k], 1);
        }
    }
    return m;
}

}  // namespace

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h,
                         const ClassData& classes) {
    if (f.values.size() != h.values.size() ||
        f.values.size() != static_cast<size_t>(classes.count)) {
        throw std::invalid_argument("inner_product: class count mismatch");
    }
    long group_order = 0;
    for (long s : classes.sizes) group_order += s;
    Cyclotomic acc;
    for (int i = 0; i < classes.count; ++i) {
        acc += Cyclotomic::from_integer(classes.sizes[i]) * f.values[i] *
               h.values[i].conj();
    }
    return acc * Cyclotomic::from_rational(make_rat(1, group_order));
}

long sum_of_degrees(const CharTable& t) {
    long acc = 0;
    for (long d : t.degrees) acc += d;
    return acc;
}

std::vector<std::vector<Cyclotomic>> invert_matrix(std::vector<std::vector<Cyclotomic>> m) {
    const size_t n = m.size();
    std::vector<std::vector<Cyclotomic>> inv(n, std::vector<Cyclotomic>(n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Cyclotomic::from_integer(1);

    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && m[sel][col].is_zero()) ++sel;
        if (sel == n) throw std::domain_error("invert_matrix: singular matrix");
        std::swap(m[col], m[sel]);
        std::swap(inv[col], inv[sel]);
        Cyclotomic piv = m[col][col].inverse();
        for (size_t j = 0; j < n; ++j) {
            m[col][j] *= piv;
            inv[col][j] *= piv;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col].is_zero()) continue;
            Cyclotomic f = m[i][col];
            for (size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

const std::vector<std::vector<Cyclotomic>>& CharTable::inverse() const {
    if (inverse_.empty() && !rows.empty()) {
        std::vector<std::vector<Cyclotomic>> m(rows.size());
        for (size_t i = 0; i < rows.size(); ++i) m[i] = rows[i].values;
        inverse_ = invert_matrix(std::move(m));
    }
    return inverse_;
}

namespace {

void verify_orthogonality(const CharTable& t, const ClassData& cd) {
    const int r = t.count();
    const Cyclotomic one = Cyclotomic::from_integer(1);
    const Cyclotomic zero;
    for (int i = 0; i < r; ++i) {
        for (int j = i; j < r; ++j) {
            Cyclotomic ip = inner_product(t.rows[i], t.rows[j], cd);
            if (ip != (i == j ? one : zero)) {
                throw std::logic_error("character table fails row orthogonality");
            }
        }
    }
    for (int j = 0; j < r; ++j) {
        for (int k = j; k < r; ++k) {
            Cyclotomic acc;
            for (int i = 0; i < r; ++i) {
                acc += t.rows[i].values[j] * t.rows[i].values[k].conj();
            }
            Cyclotomic expected =
                j == k ? Cyclotomic::from_rational(make_rat(t.group_order, cd.sizes[j])) : zero;
            if (acc != expected) {
                throw std::logic_error("character table fails column orthogonality");
            }
        }
    }
}

}  // namespace

CharTable dixon_schneider(const FinGroup& g, const ClassData& cd) {
    const int r = cd.count;
    const long n = g.order();
    const long e = cd.group_exponent;
    const std::uint64_t p = dixon_prime(static_cast<std::uint64_t>(n),
                                        static_cast<std::uint64_t>(e));
    PrimeField fp(p);
    const std::vector<std::uint64_t> omega = root_of_unity_table(p, static_cast<std::uint64_t>(e));

    // Split GF(p)^r into the common one-dimensional eigenspaces of the class
    // matrices. Subspaces are invariant under every class matrix because the
    // class sums commute, so each matrix refines the decomposition.
    std::vector<std::vector<FpVec>> subspaces;
    {
        std::vector<FpVec> full(r, FpVec(r, 0));
        for (int i = 0; i < r; ++i) full[i][i] = 1;
        subspaces.push_back(std::move(full));
    }
    for (int i = 1; i < r; ++i) {
        bool all_split = std::all_of(subspaces.begin(), subspaces.end(),
                                     [](const auto& s) { return s.size() == 1; });
        if (all_split) break;
        FpMat m = class_matrix(g, cd, i, fp);
        std::vector<std::vector<FpVec>> next;
        for (const auto& basis : subspaces) {
            if (basis.size() == 1) {
                next.push_back(basis);
                continue;
            }
            FpMat c = restriction(m, basis, fp);
            size_t found = 0;
            for (std::uint64_t lambda = 0; lambda < p && found < basis.size(); ++lambda) {
                FpMat shifted = c;
                for (size_t d = 0; d < shifted.size(); ++d) {
                    shifted[d][d] = fp.sub(shifted[d][d], lambda);
                }
                std::vector<FpVec> ker = kernel_basis(std::move(shifted), fp);
                if (ker.empty()) continue;
                std::vector<FpVec> sub;
                sub.reserve(ker.size());
                for (const auto& coords : ker) sub.push_back(mat_apply_basis(basis, coords, fp));
                found += ker.size();
                next.push_back(std::move(sub));
            }
            if (found != basis.size()) {
                throw std::logic_error("eigenspace-splitting-failure: class matrix not semisimple");
            }
        }
        subspaces = std::move(next);
    }
    if (!std::all_of(subspaces.begin(), subspaces.end(),
                     [](const auto& s) { return s.size() == 1; })) {
        throw std::logic_error(
            "eigenspace-splitting-failure: eigenspaces remain after all class matrices");
    }
    if (static_cast<int>(subspaces.size()) != r) {
        throw std::logic_error("eigenspace-splitting-failure: wrong eigenvector count");
    }

    CharTable table;
    table.group_order = n;
    table.conductor = static_cast<int>(e);
    table.class_sizes = cd.sizes;
    table.class_orders = cd.orders;

    long degree_square_sum = 0;
    for (const auto& sub : subspaces) {
        // normalize the central character: identity-class coordinate is 1
        FpVec v = sub[0];
        if (v[0] == 0) throw std::logic_error("dixon_schneider: eigenvector vanishes at identity");
        std::uint64_t scale = fp.inv(v[0]);
        for (auto& x : v) x = fp.mul(x, scale);

        // degree from the second orthogonality of central characters:
        // sum_i v_i v_{i*} / |C_i| = |G| / d^2 in GF(p)
        std::uint64_t t = 0;
        for (int i = 0; i < r; ++i) {
            int istar = cd.inverse_class(i);
            std::uint64_t term = fp.mul(v[i], v[istar]);
            t = fp.add(t, fp.mul(term, fp.inv(fp.reduce(cd.sizes[i]))));
        }
        std::uint64_t d2 = fp.mul(fp.reduce(n), fp.inv(t));
        long degree = -1;
        for (std::uint64_t d = 1; 2 * d < p; ++d) {
            if (fp.mul(d, d) == d2) {
                degree = static_cast<long>(d);
                break;
            }
        }
        if (degree < 0) throw std::logic_error("dixon_schneider: degree recovery failed");

        // character values mod p, then the exact lift: the multiplicity of
        // zeta_e^l among the eigenvalues of the representation at class i is
        // (1/e) sum_s chi(g_i^s) omega^{-ls}, an integer below p.
        FpVec chi_mod_p(r);
        for (int i = 0; i < r; ++i) {
            chi_mod_p[i] =
                fp.mul(fp.mul(fp.reduce(degree), v[i]), fp.inv(fp.reduce(cd.sizes[i])));
        }
        std::uint64_t e_inv = fp.inv(fp.reduce(e));
        ClassFunction row;
        row.values.resize(r);
        for (int i = 0; i < r; ++i) {
            Cyclotomic value = Cyclotomic::from_integer(0, table.conductor);
            long mult_sum = 0;
            for (long l = 0; l < e; ++l) {
                std::uint64_t acc = 0;
                for (long s = 0; s < e; ++s) {
                    std::uint64_t w = omega[(e - (l * s) % e) % e];
                    acc = fp.add(acc, fp.mul(chi_mod_p[cd.power_table[i][s]], w));
                }
                std::uint64_t mult = fp.mul(acc, e_inv);
                if (mult == 0) continue;
                if (mult > static_cast<std::uint64_t>(degree)) {
                    throw std::logic_error("dixon_schneider: eigenvalue multiplicity out of range");
                }
                mult_sum += static_cast<long>(mult);
                value += Cyclotomic::from_integer(static_cast<long>(mult), table.conductor) *
                         Cyclotomic::root_of_unity(table.conductor, l);
            }
            if (mult_sum != degree) {
                throw std::logic_error("dixon_schneider: lift does not sum to the degree");
            }
            row.values[i] = std::move(value);
        }
        table.rows.push_back(std::move(row));
        table.degrees.push_back(degree);
        degree_square_sum += degree * degree;
    }
    if (degree_square_sum != n) {
        throw std::logic_error("dixon_schneider: degree squares do not sum to the group order");
    }

    // canonical row order: trivial character first, then by degree and
    // lexicographic value order
    std::vector<int> order(r);
    std::iota(order.begin(), order.end(), 0);
    const Cyclotomic one = Cyclotomic::from_integer(1, table.conductor);
    auto is_trivial = [&](int i) {
        return std::all_of(table.rows[i].values.begin(), table.rows[i].values.end(),
                           [&](const Cyclotomic& v) { return v == one; });
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        if (table.degrees[a] != table.degrees[b]) return table.degrees[a] < table.degrees[b];
        for (int j = 0; j < r; ++j) {
            int c = Cyclotomic::compare(table.rows[a].values[j], table.rows[b].values[j]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    CharTable sorted = table;
    for (int i = 0; i < r; ++i) {
        sorted.rows[i] = table.rows[order[i]];
        sorted.degrees[i] = table.degrees[order[i]];
    }
    if (!is_trivial(order[0])) {
        throw std::logic_error("dixon_schneider: trivial character missing");
    }

    verify_orthogonality(sorted, cd);
    sorted.inverse();  // compute eagerly; also proves invertibility
    return sorted;
}

}  // namespace wlab
