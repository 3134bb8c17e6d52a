#include "wlab/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace wlab {

Perm compose(const Perm& first, const Perm& then) {
    Perm out(first.size());
    for (size_t x = 0; x < first.size(); ++x) out[x] = then[first[x]];
    return out;
}

FinGroup FinGroup::from_coset_table(const CosetTable& table,
                                    std::optional<long> expected_order) {
    if (!table.complete) throw std::invalid_argument("from_coset_table: incomplete table");

    FinGroup g;
    g.degree_ = table.degree();
    g.ngens_ = table.ngens;

    std::vector<Perm> letter_perms(2 * table.ngens);
    for (int col = 0; col < 2 * table.ngens; ++col) {
        letter_perms[col].resize(g.degree_);
        for (int c = 0; c < g.degree_; ++c) letter_perms[col][c] = table.rows[c][col];
    }

    Perm id(g.degree_);
    std::iota(id.begin(), id.end(), 0);

    // breadth-first closure over right multiplication by every letter
    std::map<Perm, int> index;
    index.emplace(id, 0);
    g.perms_.push_back(id);
    g.words_.push_back({});
    for (size_t i = 0; i < g.perms_.size(); ++i) {
        for (int col = 0; col < 2 * table.ngens; ++col) {
            Perm next = compose(g.perms_[i], letter_perms[col]);
            auto [it, inserted] = index.emplace(std::move(next), static_cast<int>(g.perms_.size()));
            if (inserted) {
                g.perms_.push_back(it->first);
                Word w = g.words_[i];
                w.push_back(col);
                g.words_.push_back(std::move(w));
            }
        }
    }

    if (expected_order && g.order() != *expected_order) {
        throw std::runtime_error(
            "non-faithful-action: coset action realizes a group of order " +
            std::to_string(g.order()) + ", expected " + std::to_string(*expected_order));
    }
    if (g.order() > 65535) throw std::runtime_error("from_coset_table: group too large");

    g.generator_elements_.resize(table.ngens);
    for (int gen = 0; gen < table.ngens; ++gen) {
        g.generator_elements_[gen] = index.at(letter_perms[gen]);
    }

    const long n = g.order();
    g.inverse_.resize(n);
    for (long a = 0; a < n; ++a) {
        Perm pinv(g.degree_);
        for (int x = 0; x < g.degree_; ++x) pinv[g.perms_[a][x]] = x;
        g.inverse_[a] = index.at(pinv);
    }

    if (n <= 2048) {
        g.mul_table_.assign(n * n, 0);
        for (long a = 0; a < n; ++a) {
            for (long b = 0; b < n; ++b) {
                g.mul_table_[a * n + b] =
                    static_cast<std::uint16_t>(index.at(compose(g.perms_[a], g.perms_[b])));
            }
        }
    }
    return g;
}

int FinGroup::mul(int a, int b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * perms_.size() + b];
    return element_of_perm(compose(perms_[a], perms_[b]));
}

int FinGroup::element_of_perm(const Perm& p) const {
    // binary search over the BFS order is wrong (not sorted); linear scan is
    // only hit for groups above the mul-table threshold
    for (size_t i = 0; i < perms_.size(); ++i)
        if (perms_[i] == p) return static_cast<int>(i);
    return -1;
}

int FinGroup::element_order(int a) const {
    int k = 1;
    int x = a;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

long FinGroup::exponent() const {
    long e = 1;
    for (long a = 0; a < order(); ++a) e = std::lcm(e, static_cast<long>(element_order(a)));
    return e;
}

int ClassData::power_class(int cls, long m) const {
    long e = group_exponent;
    long idx = ((m % e) + e) % e;
    return power_table[cls][idx];
}

namespace {

std::vector<int> dense_ranks(const std::vector<std::vector<long>>& keys) {
    std::vector<std::vector<long>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> ranks(keys.size());
    for (size_t i = 0; i < keys.size(); ++i) {
        ranks[i] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
    }
    return ranks;
}

}  // namespace

ClassData conjugacy_classes(const FinGroup& g) {
    const long n = g.order();
    ClassData cd;
    cd.class_of.assign(n, -1);

    for (int x = 0; x < n; ++x) {
        if (cd.class_of[x] >= 0) continue;
        int cls = cd.count++;
        std::vector<int> orbit;
        for (int t = 0; t < n; ++t) {
            int y = g.mul(g.mul(g.inv(t), x), t);
            if (cd.class_of[y] < 0) {
                cd.class_of[y] = cls;
                orbit.push_back(y);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        cd.representatives.push_back(orbit.front());
        cd.members.push_back(std::move(orbit));
    }

    cd.sizes.resize(cd.count);
    cd.orders.resize(cd.count);
    for (int c = 0; c < cd.count; ++c) {
        cd.sizes[c] = static_cast<long>(cd.members[c].size());
        cd.orders[c] = g.element_order(cd.representatives[c]);
    }
    cd.group_exponent = g.exponent();

    cd.power_table.assign(cd.count, std::vector<int>(cd.group_exponent));
    for (int c = 0; c < cd.count; ++c) {
        int x = 0;  // rep^0
        for (long m = 0; m < cd.group_exponent; ++m) {
            cd.power_table[c][m] = cd.class_of[x];
            x = g.mul(x, cd.representatives[c]);
        }
    }

    // canonical order: refine (element order, size) by power-map profiles
    // until stable, then break remaining ties by least member index
    std::vector<std::vector<long>> keys(cd.count);
    for (int c = 0; c < cd.count; ++c) keys[c] = {cd.orders[c], cd.sizes[c]};
    std::vector<int> ranks = dense_ranks(keys);
    for (int round = 0; round < cd.count; ++round) {
        std::vector<std::vector<long>> refined(cd.count);
        for (int c = 0; c < cd.count; ++c) {
            refined[c] = keys[c];
            for (long m = 2; m < cd.group_exponent; ++m) {
                refined[c].push_back(ranks[cd.power_table[c][m]]);
            }
        }
        std::vector<int> new_ranks = dense_ranks(refined);
        keys = std::move(refined);
        if (new_ranks == ranks) break;
        ranks = std::move(new_ranks);
    }

    std::vector<int> order_perm(cd.count);
    std::iota(order_perm.begin(), order_perm.end(), 0);
    std::sort(order_perm.begin(), order_perm.end(), [&](int a, int b) {
        if (keys[a] != keys[b]) return keys[a] < keys[b];
        return cd.members[a].front() < cd.members[b].front();
    });

    std::vector<int> new_index(cd.count);
    for (int pos = 0; pos < cd.count; ++pos) new_index[order_perm[pos]] = pos;

    ClassData out;
    out.count = cd.count;
    out.group_exponent = cd.group_exponent;
    out.representatives.resize(cd.count);
    out.members.resize(cd.count);
    out.sizes.resize(cd.count);
    out.orders.resize(cd.count);
    out.power_table.assign(cd.count, std::vector<int>(cd.group_exponent));
    out.class_of.assign(n, -1);
    for (int c = 0; c < cd.count; ++c) {
        int pos = new_index[c];
        out.representatives[pos] = cd.representatives[c];
        out.members[pos] = cd.members[c];
        out.sizes[pos] = cd.sizes[c];
        out.orders[pos] = cd.orders[c];
        for (long m = 0; m < cd.group_exponent; ++m) {
            out.power_table[pos][m] = new_index[cd.power_table[c][m]];
        }
    }
    for (int x = 0; x < n; ++x) out.class_of[x] = new_index[cd.class_of[x]];
    return out;
}

}  // namespace wlab
