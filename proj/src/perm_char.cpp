#include "wlab/perm_char.hpp"

#include <stdexcept>

namespace wlab {

ClassFunction PermChar::as_class_function(int conductor) const {
    ClassFunction f;
    f.values.reserve(values.size());
    for (long v : values) f.values.push_back(Cyclotomic::from_integer(v, conductor));
    return f;
}

PermChar permutation_character(const CosetAction& action, const ClassData& classes,
                               const FinGroup& g) {
    PermChar theta;
    theta.source = action.label;
    theta.values.resize(classes.count);
    for (int c = 0; c < classes.count; ++c) {
        Perm image = action.element_image(g, classes.representatives[c]);
        long fixed = 0;
        for (int x = 0; x < action.degree; ++x) {
            if (image[x] == x) ++fixed;
        }
        theta.values[c] = fixed;
    }
    return theta;
}

PermChar direct_sum(const PermChar& a, const PermChar& b) {
    if (a.values.size() != b.values.size()) {
        throw std::invalid_argument("direct_sum: class count mismatch");
    }
    PermChar out;
    out.source = a.source + " + " + b.source;
    out.values.resize(a.values.size());
    for (size_t i = 0; i < a.values.size(); ++i) out.values[i] = a.values[i] + b.values[i];
    return out;
}

MultVector decompose(const PermChar& theta, const CharTable& table, const ClassData& classes) {
    ClassFunction f = theta.as_class_function(table.conductor);
    MultVector m;
    m.entries.reserve(table.count());
    for (int i = 0; i < table.count(); ++i) {
        Cyclotomic ip = inner_product(f, table.rows[i], classes);
        if (!ip.is_rational()) {
            throw std::runtime_error("non-integer-multiplicity: <theta, chi_" +
                                     std::to_string(i + 1) + "> = " + ip.str());
        }
        BigRat q = ip.to_rational();
        if (!is_integer(q) || q < 0) {
            throw std::runtime_error("non-integer-multiplicity: <theta, chi_" +
                                     std::to_string(i + 1) + "> = " + rat_to_string(q));
        }
        m.entries.push_back(to_integer(q));
    }

    // reconstruction must reproduce theta exactly at every class
    for (int j = 0; j < classes.count; ++j) {
        Cyclotomic acc;
        for (int i = 0; i < table.count(); ++i) {
            acc += Cyclotomic::from_rational(BigRat(m.entries[i]), table.conductor) *
                   table.rows[i].values[j];
        }
        if (acc != Cyclotomic::from_integer(theta.values[j], table.conductor)) {
            throw std::logic_error("decompose: reconstruction mismatch at class " +
                                   std::to_string(j + 1));
        }
    }
    return m;
}

MultVector decompose_via_inverse(const PermChar& theta, const CharTable& table) {
    const auto& xinv = table.inverse();
    const int r = table.count();
    MultVector m;
    m.entries.reserve(r);
    for (int i = 0; i < r; ++i) {
        Cyclotomic acc;
        for (int j = 0; j < r; ++j) {
            acc += Cyclotomic::from_integer(theta.values[j], table.conductor) * xinv[j][i];
        }
        if (!acc.is_rational()) {
            throw std::runtime_error("non-integer-multiplicity: row * X^-1 entry " +
                                     std::to_string(i + 1) + " = " + acc.str());
        }
        BigRat q = acc.to_rational();
        if (!is_integer(q)) {
            throw std::runtime_error("non-integer-multiplicity: row * X^-1 entry " +
                                     std::to_string(i + 1) + " = " + rat_to_string(q));
        }
        m.entries.push_back(to_integer(q));
    }
    return m;
}

bool is_multiplicity_free(const MultVector& m) {
    for (const BigInt& e : m.entries) {
        if (e != 0 && e != 1) return false;
    }
    return true;
}

bool is_doubly_transitive(const MultVector& m) {
    if (m.entries.empty() || m.entries[0] != 1) {
        throw std::runtime_error("not-transitive: <theta, chi_1> = " +
                                 (m.entries.empty() ? std::string("0")
                                                    : m.entries[0].get_str()));
    }
    int nonzero = 0;
    for (const BigInt& e : m.entries) {
        if (e == 0) continue;
        if (e != 1) return false;
        ++nonzero;
    }
    return nonzero == 2;
}

bool contains_identity_once(const MultVector& m) {
    return !m.entries.empty() && m.entries[0] == 1;
}

BigInt orbit_count(const PermChar& theta, const ClassData& classes) {
    BigInt weighted = 0;
    BigInt order = 0;
    for (int i = 0; i < classes.count; ++i) {
        weighted += BigInt(classes.sizes[i]) * BigInt(theta.values[i]);
        order += classes.sizes[i];
    }
    BigRat q = make_rat(weighted, order);
    if (!is_integer(q)) {
        throw std::logic_error("orbit_count: fixed-point average is not an integer");
    }
    return to_integer(q);
}

}  // namespace wlab
