#pragma once

#include <string>
#include <utility>

#include "wlab/group.hpp"
#include "wlab/presentation.hpp"
#include "wlab/todd_coxeter.hpp"

namespace wlab::testutil {

inline FinGroup build(const Presentation& p) {
    return FinGroup::from_coset_table(todd_coxeter(p, {}));
}

inline std::pair<FinGroup, ClassData> build_with_classes(const Presentation& p) {
    FinGroup g = build(p);
    ClassData cd = conjugacy_classes(g);
    return {std::move(g), std::move(cd)};
}

}  // namespace wlab::testutil
