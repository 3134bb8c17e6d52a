#include "wlab/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace wlab {

bool TransitionMatrix::is_nonnegative_integer() const {
    for (const auto& row : entries) {
        for (const auto& q : row) {
            if (!is_integer(q) || q < 0) return false;
        }
    }
    return true;
}

std::vector<BigInt> TransitionMatrix::apply(const std::vector<BigInt>& row) const {
    const size_t r = entries.size();
    std::vector<BigInt> out(r, BigInt(0));
    std::vector<BigRat> acc(r, BigRat(0));
    for (size_t i = 0; i < r; ++i) {
        if (row[i] == 0) continue;
        BigRat w(row[i]);
        for (size_t j = 0; j < r; ++j) acc[j] += w * entries[i][j];
    }
    for (size_t j = 0; j < r; ++j) out[j] = to_integer(acc[j]);
    return out;
}

TransitionMatrix transition_matrix(const PermChar& theta, const CharTable& table,
                                   const ClassData& classes) {
    const int r = table.count();
    if (static_cast<int>(theta.values.size()) != r || classes.count != r) {
        throw std::invalid_argument("transition_matrix: dimension mismatch");
    }
    const auto& xinv = table.inverse();
    TransitionMatrix a;
    a.entries.assign(r, std::vector<BigRat>(r));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            Cyclotomic acc;
            for (int c = 0; c < r; ++c) {
                acc += table.rows[i].values[c] *
                       Cyclotomic::from_integer(theta.values[c], table.conductor) * xinv[c][j];
            }
            if (!acc.is_rational()) {
                throw std::logic_error("transition_matrix: irrational entry " + acc.str());
            }
            a.entries[i][j] = acc.to_rational();
        }
    }
    return a;
}

namespace {

MultVector tensor_power_direct(const PermChar& theta, long k, const CharTable& table,
                               const ClassData& classes) {
    // <theta^k, chi_i> with theta^k the pointwise power
    const int r = table.count();
    std::vector<Cyclotomic> powers(r);
    for (int j = 0; j < r; ++j) {
        BigInt v = big_pow(BigInt(theta.values[j]), static_cast<unsigned long>(k));
        powers[j] = Cyclotomic::from_rational(BigRat(v), table.conductor);
    }
    MultVector m;
    m.entries.reserve(r);
    BigRat inv_order = make_rat(BigInt(1), BigInt(table.group_order));
    for (int i = 0; i < r; ++i) {
        Cyclotomic acc;
        for (int j = 0; j < r; ++j) {
            acc += Cyclotomic::from_integer(classes.sizes[j], table.conductor) * powers[j] *
                   table.rows[i].values[j].conj();
        }
        acc *= Cyclotomic::from_rational(inv_order, table.conductor);
        if (!acc.is_rational() || !is_integer(acc.to_rational())) {
            throw std::logic_error("tensor multiplicity is not an integer: " + acc.str());
        }
        m.entries.push_back(to_integer(acc.to_rational()));
    }
    return m;
}

}  // namespace

MultVector tensor_multiplicities(const PermChar& theta, long k, const CharTable& table,
                                 const ClassData& classes) {
    if (k < 1) throw std::invalid_argument("tensor_multiplicities: k must be >= 1");

    MultVector direct = tensor_power_direct(theta, k, table, classes);

    TransitionMatrix a = transition_matrix(theta, table, classes);
    std::vector<BigInt> row = decompose(theta, table, classes).entries;
    for (long step = 2; step <= k; ++step) row = a.apply(row);
    if (row != direct.entries) {
        throw std::logic_error("tensor_multiplicities: recurrence and inner product disagree");
    }
    return direct;
}

BigInt ClosedForm::eval(long k) const {
    if (k < 1) throw std::invalid_argument("ClosedForm::eval: k must be >= 1");
    BigRat acc(0);
    for (const auto& [base, coeff] : terms) {
        acc += coeff * BigRat(big_pow(base, static_cast<unsigned long>(k - 1)));
    }
    return to_integer(acc);
}

std::vector<ClosedForm> closed_forms(const PermChar& theta, const CharTable& table,
                                     const ClassData& classes) {
    const int r = table.count();
    BigRat inv_order = make_rat(BigInt(1), BigInt(table.group_order));
    std::vector<ClosedForm> forms(r);
    for (int i = 0; i < r; ++i) {
        std::map<BigInt, Cyclotomic> level_sums;
        for (int j = 0; j < r; ++j) {
            if (theta.values[j] == 0) continue;  // zero values vanish in every power
            Cyclotomic term = Cyclotomic::from_integer(classes.sizes[j], table.conductor) *
                              table.rows[i].values[j].conj();
            auto [it, inserted] = level_sums.emplace(BigInt(theta.values[j]), term);
            if (!inserted) it->second += term;
        }
        for (const auto& [base, sum] : level_sums) {
            Cyclotomic coeff = Cyclotomic::from_rational(BigRat(base) * inv_order,
                                                         table.conductor) *
                               sum;
            if (!coeff.is_rational()) {
                throw std::logic_error("closed_forms: irrational coefficient " + coeff.str());
            }
            BigRat q = coeff.to_rational();
            if (q != 0) forms[i].terms.emplace(base, q);
        }
    }
    return forms;
}

WedderburnStructure wedderburn(const PermChar& theta, long k, const CharTable& table,
                               const ClassData& classes) {
    MultVector m = tensor_multiplicities(theta, k, table, classes);
    std::map<BigInt, int> grouped;
    WedderburnStructure w;
    w.dimension = 0;
    for (const BigInt& d : m.entries) {
        if (d == 0) continue;
        ++grouped[d];
        w.dimension += d * d;
    }
    w.components.assign(grouped.begin(), grouped.end());
    return w;
}

BigInt dim_centralizer(const PermChar& theta, long k, const CharTable& table,
                       const ClassData& classes) {
    if (k < 1) throw std::invalid_argument("dim_centralizer: k must be >= 1");
    MultVector m = tensor_multiplicities(theta, k, table, classes);
    BigInt square_sum = 0;
    for (const BigInt& d : m.entries) square_sum += d * d;

    BigInt spectral = 0;
    for (int j = 0; j < classes.count; ++j) {
        spectral += BigInt(classes.sizes[j]) *
                    big_pow(BigInt(theta.values[j]), static_cast<unsigned long>(2 * k));
    }
    BigRat q = make_rat(spectral, BigInt(table.group_order));
    if (!is_integer(q) || to_integer(q) != square_sum) {
        throw std::logic_error("dim_centralizer: square sum and spectral sum disagree");
    }
    return square_sum;
}

BigInt DimClosedForm::eval(long k) const {
    if (k < 1) throw std::invalid_argument("DimClosedForm::eval: k must be >= 1");
    BigRat acc(0);
    for (const auto& [base, coeff] : terms) {
        acc += coeff * BigRat(big_pow(base, static_cast<unsigned long>(2 * k)));
    }
    return to_integer(acc);
}

DimClosedForm dim_closed_form(const PermChar& theta, const ClassData& classes) {
    long order = 0;
    for (long s : classes.sizes) order += s;
    DimClosedForm form;
    for (int j = 0; j < classes.count; ++j) {
        if (theta.values[j] == 0) continue;
        BigInt base(theta.values[j]);
        auto [it, inserted] = form.terms.emplace(base, make_rat(classes.sizes[j], order));
        if (!inserted) it->second += make_rat(classes.sizes[j], order);
    }
    return form;
}

}  // namespace wlab
