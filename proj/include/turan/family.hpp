#pragma once

#include <string>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

/// Finite collection of small k-graphs in canonical form, pairwise
/// non-isomorphic, used as forbidden subgraphs.
struct ForbiddenFamily {
    int k = 0;
    int max_order;
    std::string name;
    std::vector<Hypergraph> members; // canonical, deduplicated

    explicit ForbiddenFamily(int k_, std::string name_ = "", int max_order_ = 12)
        : k(k_), max_order(max_order_), name(std::move(name_)) {}

    // canonicalizes and drops isomorphic duplicates
    void add(const Hypergraph& f);

    bool empty() const { return members.empty(); }
};

/// true iff H contains no copy of any member
bool is_family_free(const Hypergraph& h, const ForbiddenFamily& fam);

/// canonical links of all l-sets of F, isolated vertices dropped
std::vector<Hypergraph> link_family(const Hypergraph& f, int l);
std::vector<Hypergraph> link_family(const ForbiddenFamily& fam, int l);

} // namespace turan
