#include "wlab/subgroups.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace wlab {

std::vector<int> generated_subgroup(const FinGroup& g, const std::vector<int>& gens) {
    std::vector<bool> member(g.order(), false);
    std::vector<int> queue;
    member[g.identity()] = true;
    queue.push_back(g.identity());
    for (size_t i = 0; i < queue.size(); ++i) {
        for (int s : gens) {
            int y = g.mul(queue[i], s);
            if (!member[y]) {
                member[y] = true;
                queue.push_back(y);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

namespace {

std::vector<int> conjugate_set(const FinGroup& g, const std::vector<int>& h, int t) {
    std::vector<int> out;
    out.reserve(h.size());
    int ti = g.inv(t);
    for (int x : h) out.push_back(g.mul(g.mul(ti, x), t));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

SubgroupRecord core_of(const FinGroup& g, const SubgroupRecord& h) {
    std::vector<int> core = h.members;
    for (int t = 0; t < g.order() && core.size() > 1; ++t) {
        core = intersect_sorted(core, conjugate_set(g, h.members, t));
    }
    SubgroupRecord rec;
    rec.members = core;
    rec.order = static_cast<long>(core.size());
    rec.index = g.order() / rec.order;
    rec.core_members = core;  // a core is normal, so it is its own core
    rec.core_order = rec.order;
    rec.faithful_action = rec.order == 1;
    rec.generators = core.size() > 1 ? std::vector<int>(core.begin() + 1, core.end())
                                     : std::vector<int>{};
    return rec;
}

std::vector<SubgroupRecord> enumerate_subgroups(const FinGroup& g, long order_cap) {
    if (g.order() > order_cap) {
        throw std::runtime_error("cap-exceeded: group order " + std::to_string(g.order()) +
                                 " above subgroup-enumeration cap " + std::to_string(order_cap));
    }

    std::map<std::vector<int>, SubgroupRecord> classes;  // canonical members -> record
    std::set<std::vector<int>> seen;                     // every conjugate encountered

    auto add_class = [&](const std::vector<int>& members, std::vector<int> gens) {
        // canonical representative: least conjugate in lexicographic order
        std::vector<int> canon = members;
        int canon_t = g.identity();
        std::set<std::vector<int>> conjugates;
        for (int t = 0; t < g.order(); ++t) {
            std::vector<int> c = conjugate_set(g, members, t);
            if (c < canon) {
                canon = c;
                canon_t = t;
            }
            conjugates.insert(std::move(c));
        }
        for (const auto& c : conjugates) seen.insert(c);

        SubgroupRecord rec;
        rec.members = canon;
        int ti = g.inv(canon_t);
        for (int& s : gens) s = g.mul(g.mul(ti, s), canon_t);
        rec.generators = std::move(gens);
        rec.order = static_cast<long>(canon.size());
        rec.index = g.order() / rec.order;
        rec.conjugate_count = static_cast<long>(conjugates.size());

        std::vector<int> core = canon;
        for (const auto& c : conjugates) {
            if (core.size() == 1) break;
            core = intersect_sorted(core, c);
        }
        rec.core_members = core;
        rec.core_order = static_cast<long>(core.size());
        rec.faithful_action = rec.core_order == 1;
        classes.emplace(canon, std::move(rec));
        return canon;
    };

    std::vector<std::vector<int>> queue;
    queue.push_back(add_class({g.identity()}, {}));

    for (size_t qi = 0; qi < queue.size(); ++qi) {
        const SubgroupRecord cur = classes.at(queue[qi]);
        for (int x = 0; x < g.order(); ++x) {
            if (std::binary_search(cur.members.begin(), cur.members.end(), x)) continue;
            std::vector<int> gens = cur.generators;
            gens.push_back(x);
            std::vector<int> grown = generated_subgroup(g, gens);
            if (seen.count(grown)) continue;
            queue.push_back(add_class(grown, std::move(gens)));
        }
    }

    std::vector<SubgroupRecord> out;
    out.reserve(classes.size());
    for (auto& [members, rec] : classes) out.push_back(std::move(rec));
    std::sort(out.begin(), out.end(), [](const SubgroupRecord& a, const SubgroupRecord& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.members < b.members;
    });
    for (size_t i = 0; i < out.size(); ++i) out[i].class_id = static_cast<int>(i);
    return out;
}

CosetAction coset_action(const FinGroup& g, const SubgroupRecord& h) {
    CosetAction act;
    act.coset_of_element.assign(g.order(), -1);
    for (int x = 0; x < g.order(); ++x) {
        if (act.coset_of_element[x] >= 0) continue;
        int coset = act.degree++;
        act.coset_reps.push_back(x);
        for (int m : h.members) act.coset_of_element[g.mul(m, x)] = coset;
    }

    act.generator_images.resize(g.ngens());
    for (int gen = 0; gen < g.ngens(); ++gen) {
        act.generator_images[gen] = act.element_image(g, g.generator_element(gen));
    }
    act.label = "cosets of class " + std::to_string(h.class_id) + " (index " +
                std::to_string(h.index) + ")";
    return act;
}

Perm CosetAction::element_image(const FinGroup& g, int element) const {
    Perm image(degree);
    for (int c = 0; c < degree; ++c) {
        image[c] = coset_of_element[g.mul(coset_reps[c], element)];
    }
    return image;
}

std::vector<int> CosetAction::kernel_elements(const FinGroup& g) const {
    std::vector<int> kernel;
    for (int x = 0; x < g.order(); ++x) {
        Perm img = element_image(g, x);
        bool fixes_all = true;
        for (int c = 0; c < degree; ++c) {
            if (img[c] != c) {
                fixes_all = false;
                break;
            }
        }
        if (fixes_all) kernel.push_back(x);
    }
    return kernel;
}

}  // namespace wlab
