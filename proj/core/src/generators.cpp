#include "logicprob/generators.hpp"

namespace logicprob {

Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                       int max_depth) {
    std::uniform_int_distribution<int> pick(0, max_depth <= 0 ? 2 : 9);
    int c = pick(rng);
    if (max_depth <= 0 || c < 3) {
        std::uniform_int_distribution<std::size_t> ai(0, atoms.size() - 1);
        return Formula::atom(atoms[ai(rng)]);
    }
    if (c < 6)
        return Formula::neg(random_formula(rng, atoms, max_depth - 1));
    return Formula::conj(random_formula(rng, atoms, max_depth - 1),
                         random_formula(rng, atoms, max_depth - 1));
}

EventExpr random_event(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                       int max_depth) {
    std::uniform_int_distribution<int> pick(0, max_depth <= 0 ? 9 : 15);
    int c = pick(rng);
    if (max_depth <= 0 || c < 10) {
        if (c < 8) {
            std::uniform_int_distribution<std::size_t> ai(0, atoms.size() - 1);
            return EventExpr::atom(atoms[ai(rng)]);
        }
        return c == 8 ? EventExpr::certain() : EventExpr::impossible();
    }
    if (c < 12)
        return EventExpr::complement(random_event(rng, atoms, max_depth - 1));
    if (c < 14)
        return EventExpr::product(random_event(rng, atoms, max_depth - 1),
                                  random_event(rng, atoms, max_depth - 1));
    return EventExpr::sum(random_event(rng, atoms, max_depth - 1),
                          random_event(rng, atoms, max_depth - 1));
}

IndexSet random_index_set(std::mt19937_64& rng, int max_depth) {
    std::uniform_int_distribution<int> pick(0, max_depth <= 0 ? 3 : 6);
    std::uniform_int_distribution<long> mod(1, 6);
    std::uniform_int_distribution<long> small(0, 24);
    int c = pick(rng);
    switch (c) {
    case 0: {
        long m = mod(rng);
        std::uniform_int_distribution<long> res(0, m - 1);
        return IndexSet::residue(res(rng), m);
    }
    case 1:
        return IndexSet::threshold(small(rng));
    case 2: {
        std::set<long> elems;
        std::uniform_int_distribution<int> count(0, 4);
        for (int i = count(rng); i > 0; --i) elems.insert(small(rng) + 1);
        return IndexSet::finite(std::move(elems));
    }
    case 3: {
        std::set<long> elems;
        std::uniform_int_distribution<int> count(0, 4);
        for (int i = count(rng); i > 0; --i) elems.insert(small(rng) + 1);
        return IndexSet::cofinite(std::move(elems));
    }
    case 4:
        return IndexSet::complement(random_index_set(rng, max_depth - 1));
    case 5:
        return IndexSet::intersect(random_index_set(rng, max_depth - 1),
                                   random_index_set(rng, max_depth - 1));
    default:
        return IndexSet::unite(random_index_set(rng, max_depth - 1),
                               random_index_set(rng, max_depth - 1));
    }
}

} // namespace logicprob
