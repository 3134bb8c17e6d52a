#include "wlab/todd_coxeter.hpp"

#include <numeric>
#include <stdexcept>

namespace wlab {

std::vector<int> CosetTable::generator_permutation(int gen) const {
    std::vector<int> perm(rows.size());
    for (size_t c = 0; c < rows.size(); ++c) perm[c] = rows[c][gen];
    return perm;
}

int CosetTable::trace(int start, const Word& w) const {
    int c = start;
    for (int letter : w) c = rows[c][letter];
    return c;
}

namespace {

class Enumerator {
public:
    Enumerator(const Presentation& p, const std::vector<Word>& subgroup_words, int limit)
        : pres_(p),
          subgroup_words_(subgroup_words),
          ncols_(2 * p.ngens()),
          limit_(limit) {
        // One row of relator fills may overshoot the bound before the next
        // lookahead checkpoint; reserve that much slack above the user limit.
        long slack = ncols_;
        for (const auto& w : p.relators) slack += static_cast<long>(w.size());
        hard_cap_ = static_cast<long>(limit_) + slack;
        new_coset();  // coset 0 = subgroup
    }

    void run() {
        for (const auto& w : subgroup_words_) {
            if (!w.empty()) scan_and_fill(0, w);
        }
        for (size_t alpha = 0; alpha < tau_.size(); ++alpha) {
            if (!is_live(alpha)) continue;
            if (live_count_ >= limit_) {
                lookahead();
                if (!is_live(alpha)) continue;
                if (live_count_ >= limit_) {
                    throw std::runtime_error("coset-limit-exceeded: bound " +
                                             std::to_string(limit_) +
                                             " reached before the table closed");
                }
            }
            for (const auto& w : pres_.relators) {
                scan_and_fill(static_cast<int>(alpha), w);
                if (!is_live(alpha)) break;
            }
            if (!is_live(alpha)) continue;
            for (int col = 0; col < ncols_; ++col) {
                if (tau_[alpha][col] < 0) define(static_cast<int>(alpha), col);
            }
        }
    }

    CosetTable finish() {
        // standardize: renumber live cosets in breadth-first scan order
        std::vector<int> renumber(tau_.size(), -1);
        std::vector<int> order;
        renumber[0] = 0;
        order.push_back(0);
        for (size_t i = 0; i < order.size(); ++i) {
            for (int col = 0; col < ncols_; ++col) {
                int d = tau_[order[i]][col];
                if (d < 0 || renumber[d] >= 0) continue;
                renumber[d] = static_cast<int>(order.size());
                order.push_back(d);
            }
        }
        if (static_cast<long>(order.size()) != live_count_) {
            throw std::logic_error("todd_coxeter: table not transitive on live cosets");
        }

        CosetTable table;
        table.ngens = pres_.ngens();
        table.rows.resize(order.size(), std::vector<int>(ncols_, -1));
        for (size_t i = 0; i < order.size(); ++i) {
            for (int col = 0; col < ncols_; ++col) {
                int d = tau_[order[i]][col];
                if (d < 0 || !is_live(d)) {
                    throw std::logic_error("todd_coxeter: incomplete or dangling entry");
                }
                table.rows[i][col] = renumber[d];
            }
        }
        table.complete = true;
        validate(table);
        return table;
    }

private:
    bool is_live(size_t c) { return rep(static_cast<int>(c)) == static_cast<int>(c); }

    int rep(int c) {
        while (rep_[c] != c) {
            rep_[c] = rep_[rep_[c]];
            c = rep_[c];
        }
        return c;
    }

    int new_coset() {
        if (static_cast<long>(tau_.size()) >= hard_cap_) {
            throw std::runtime_error("coset-limit-exceeded: bound " + std::to_string(limit_) +
                                     " reached before the table closed");
        }
        tau_.emplace_back(ncols_, -1);
        rep_.push_back(static_cast<int>(tau_.size()) - 1);
        ++live_count_;
        return static_cast<int>(tau_.size()) - 1;
    }

    int define(int a, int col) {
        int b = new_coset();
        tau_[a][col] = b;
        tau_[b][inverse_letter(col, pres_.ngens())] = a;
        return b;
    }

    void merge(int a, int b, std::vector<int>& queue) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        rep_[b] = a;
        --live_count_;
        queue.push_back(b);
    }

    // Standard coincidence processing: re-home every edge of each dead coset
    // onto its representative, queueing any secondary coincidences found.
    void coincidence(int a, int b) {
        std::vector<int> queue;
        merge(a, b, queue);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int dead = queue[qi];
            for (int col = 0; col < ncols_; ++col) {
                int delta = tau_[dead][col];
                if (delta < 0) continue;
                tau_[dead][col] = -1;
                int icol = inverse_letter(col, pres_.ngens());
                if (tau_[delta][icol] == dead) tau_[delta][icol] = -1;
                int mu = rep(dead);
                int nu = rep(delta);
                if (tau_[mu][col] >= 0) {
                    merge(nu, tau_[mu][col], queue);
                } else if (tau_[nu][icol] >= 0) {
                    merge(mu, tau_[nu][icol], queue);
                } else {
                    tau_[mu][col] = nu;
                    tau_[nu][icol] = mu;
                }
            }
        }
    }

    // Scan relator w from coset a, defining cosets to fill gaps. On a
    // complete scan the two ends must agree; a mismatch is a coincidence.
    void scan_and_fill(int a, const Word& w) {
        const int ngens = pres_.ngens();
        int f = a;
        int i = 0;
        int b = a;
        int j = static_cast<int>(w.size()) - 1;
        while (true) {
            while (i <= j && tau_[f][w[i]] >= 0) f = tau_[f][w[i++]];
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && tau_[b][inverse_letter(w[j], ngens)] >= 0) {
                b = tau_[b][inverse_letter(w[j--], ngens)];
            }
            if (j < i) {
                if (f != b) coincidence(f, b);
                return;
            }
            if (j == i) {
                tau_[f][w[i]] = b;
                tau_[b][inverse_letter(w[i], ngens)] = f;
                return;
            }
            define(f, w[i]);
        }
    }

    // Fill-free scan used by lookahead: applies deductions and coincidences
    // that the existing entries already force, defines nothing.
    void scan(int a, const Word& w) {
        const int ngens = pres_.ngens();
        int f = a;
        int i = 0;
        int b = a;
        int j = static_cast<int>(w.size()) - 1;
        while (i <= j && tau_[f][w[i]] >= 0) f = tau_[f][w[i++]];
        if (i > j) {
            if (f != b) coincidence(f, b);
            return;
        }
        while (j >= i && tau_[b][inverse_letter(w[j], ngens)] >= 0) {
            b = tau_[b][inverse_letter(w[j--], ngens)];
        }
        if (j < i) {
            if (f != b) coincidence(f, b);
        } else if (j == i) {
            tau_[f][w[i]] = b;
            tau_[b][inverse_letter(w[i], ngens)] = f;
        }
    }

    void lookahead() {
        for (size_t alpha = 0; alpha < tau_.size(); ++alpha) {
            if (!is_live(alpha)) continue;
            for (const auto& w : pres_.relators) {
                scan(static_cast<int>(alpha), w);
                if (!is_live(alpha)) break;
            }
        }
    }

    void validate(const CosetTable& table) const {
        const int n = table.degree();
        for (int col = 0; col < ncols_; ++col) {
            std::vector<bool> seen(n, false);
            for (int c = 0; c < n; ++c) {
                int d = table.rows[c][col];
                if (d < 0 || d >= n || seen[d]) {
                    throw std::logic_error("todd_coxeter: column is not a permutation");
                }
                seen[d] = true;
            }
        }
        for (int c = 0; c < n; ++c) {
            for (const auto& w : pres_.relators) {
                if (table.trace(c, w) != c) {
                    throw std::logic_error("todd_coxeter: relator does not close");
                }
            }
        }
        for (const auto& w : subgroup_words_) {
            if (table.trace(0, w) != 0) {
                throw std::logic_error("todd_coxeter: subgroup word moves coset 0");
            }
        }
    }

    const Presentation& pres_;
    const std::vector<Word>& subgroup_words_;
    int ncols_;
    int limit_;
    long hard_cap_ = 0;
    long live_count_ = 0;
    std::vector<std::vector<int>> tau_;
    std::vector<int> rep_;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_words,
                        int coset_limit) {
    if (coset_limit < 1) throw std::invalid_argument("todd_coxeter: nonpositive coset limit");
    Enumerator e(p, subgroup_words, coset_limit);
    e.run();
    return e.finish();
}

}  // namespace wlab
