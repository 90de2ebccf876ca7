#include "turan/family.hpp"

#include <stdexcept>

#include "turan/errors.hpp"
#include "turan/isomorphism.hpp"
#include "turan/subsets.hpp"

namespace turan {

void ForbiddenFamily::add(const Hypergraph& f) {
    if (f.k != k) throw std::invalid_argument("family member uniformity mismatch");
    if (f.n > max_order)
        throw unsupported_size("family member exceeds configured max order of " +
                               std::to_string(max_order));
    Hypergraph canon = canonical_form(f, max_order);
    for (const Hypergraph& m : members)
        if (m.n == canon.n && m.edges == canon.edges) return;
    members.push_back(std::move(canon));
}

bool is_family_free(const Hypergraph& h, const ForbiddenFamily& fam) {
    for (const Hypergraph& f : fam.members) {
        if (f.k != h.k) throw std::invalid_argument("family/host uniformity mismatch");
        if (contains(h, f, fam.max_order)) return false;
    }
    return true;
}

std::vector<Hypergraph> link_family(const Hypergraph& f, int l) {
    if (l <= 0 || l >= f.k) throw std::invalid_argument("link_family: need 0 < l < k");
    std::vector<Hypergraph> out;
    for_each_subset(f.n, l, [&](const std::vector<int>& t) {
        Hypergraph lk = canonical_form(drop_isolated(link(f, VertexSet::of(t))));
        for (const Hypergraph& m : out)
            if (m.n == lk.n && m.edges == lk.edges) return;
        out.push_back(std::move(lk));
    });
    return out;
}

std::vector<Hypergraph> link_family(const ForbiddenFamily& fam, int l) {
    std::vector<Hypergraph> out;
    for (const Hypergraph& f : fam.members) {
        for (Hypergraph& lk : link_family(f, l)) {
            bool dup = false;
            for (const Hypergraph& m : out)
                if (m.n == lk.n && m.edges == lk.edges) { dup = true; break; }
            if (!dup) out.push_back(std::move(lk));
        }
    }
    return out;
}

} // namespace turan
