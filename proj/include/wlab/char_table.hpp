#pragma once

#include <vector>

#include "wlab/cyclotomic.hpp"
#include "wlab/group.hpp"

namespace wlab {

/// Class function: one value per conjugacy class, in ClassData order.
struct ClassFunction {
    std::vector<Cyclotomic> values;
};

/// Exact table of the irreducible characters. Row 0 is the trivial
/// character; the remaining rows are sorted by (degree, lexicographic value
/// order), a canonical order independent of the computation path.
struct CharTable {
    std::vector<ClassFunction> rows;
    std::vector<long> degrees;
    std::vector<long> class_sizes;
    std::vector<int> class_orders;  // element orders of the classes
    long group_order = 1;
    int conductor = 1;  // = group exponent; every value lives in Q(zeta_e)

    int count() const { return static_cast<int>(rows.size()); }

    /// X^{-1}, cached on first use.
    const std::vector<std::vector<Cyclotomic>>& inverse() const;

private:
    mutable std::vector<std::vector<Cyclotomic>> inverse_;
};

/// Character table by the Dixon-Schneider method: split the common
/// eigenvectors of the class-sum matrices over GF(p) (p = 1 mod exponent,
/// p > 2 sqrt(|G|)), read off degrees and character values mod p, then lift
/// to exact cyclotomic numbers through the power map. The result is checked
/// against both orthogonality relations before it is returned.
CharTable dixon_schneider(const FinGroup& g, const ClassData& classes);

/// Hermitian inner product of class functions:
/// (1/|G|) sum_i |C_i| f(C_i) conj(h(C_i)).
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h,
                         const ClassData& classes);

long sum_of_degrees(const CharTable& t);

/// Exact Gauss-Jordan inverse over Q(zeta_n); throws on singular input.
std::vector<std::vector<Cyclotomic>> invert_matrix(std::vector<std::vector<Cyclotomic>> m);

}  // namespace wlab
