#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubical/bitvec.hpp"

namespace cubical {

struct PosetBuildError : std::runtime_error {
    explicit PosetBuildError(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownElement : std::runtime_error {
    explicit UnknownElement(int id)
        : std::runtime_error("unknown element id " + std::to_string(id)), id(id) {}
    int id;
};

// A totally ordered list of element ids, strictly increasing in the poset.
struct Flag {
    std::vector<int> ids;

    Flag() = default;
    explicit Flag(std::vector<int> v) : ids(std::move(v)) {}
    Flag(std::initializer_list<int> v) : ids(v) {}

    int size() const { return static_cast<int>(ids.size()); }
    auto operator<=>(const Flag&) const = default;
};

// Finite poset given by a Hasse diagram, with an explicit rank per element.
// Every cover must raise rank by exactly one; this is enforced at build time.
// Whether the poset is graded (every maximal chain below x has length rank x)
// is a separate check, reported by check_graded().
class RankedPoset {
public:
    RankedPoset() = default;

    // ids: unique, arbitrary ints.  ranks: parallel to ids, >= 0.
    // covers: (lower id, upper id) pairs.
    RankedPoset(std::vector<int> ids, std::vector<int> ranks,
                std::vector<std::pair<int, int>> covers_by_id);

    // Convenience: ids are 0..n-1.
    static RankedPoset dense(std::vector<int> ranks,
                             std::vector<std::pair<int, int>> covers);

    int size() const { return static_cast<int>(ranks_.size()); }
    bool empty() const { return ranks_.empty(); }
    int dim() const { return dim_; }

    int id_of(int idx) const { return ids_[idx]; }
    bool has_id(int id) const { return id_to_index_.count(id) > 0; }
    int index_of(int id) const;

    int rank_at(int idx) const { return ranks_[idx]; }
    int rank_of_id(int id) const { return ranks_[index_of(id)]; }

    const std::vector<int>& ids() const { return ids_; }
    const std::vector<int>& ranks() const { return ranks_; }
    // Cover pairs as (lower index, upper index), sorted.
    const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }
    const std::vector<int>& upper_covers(int idx) const { return up_adj_[idx]; }
    const std::vector<int>& lower_covers(int idx) const { return down_adj_[idx]; }

    bool leq_idx(int a, int b) const { return down_[b].get(a); }
    bool less_idx(int a, int b) const { return a != b && leq_idx(a, b); }
    bool leq_ids(int a, int b) const { return leq_idx(index_of(a), index_of(b)); }

    // Row i = set of indices <= i (including i).
    const Bitvec& down_set(int idx) const { return down_[idx]; }
    // Row i = set of indices >= i (including i).
    const Bitvec& up_set(int idx) const { return up_[idx]; }

    std::vector<long long> f_vector() const;
    long long euler_characteristic() const;

    // --- spec operations ------------------------------------------------
    std::vector<int> order_ideal(int id) const;   // ids, sorted
    std::vector<int> order_filter(int id) const;  // ids, sorted

    // Elements strictly above x, re-ranked so rank r in K becomes
    // r - rank(x) - 1 in the link.
    RankedPoset link_of(int id) const;

    // Reverse the order.  Ranks of the dual are chain heights from below,
    // so dual(dual(K)) reproduces K whenever K is graded.
    RankedPoset dual() const;

    // Induced subposet on the elements whose rank lies in `ranks`,
    // re-ranked densely.  Covers are the Hasse reduction of the induced order.
    RankedPoset rank_selected(const std::set<int>& ranks) const;

    // All flags with exactly `length` elements (length >= 1).
    std::vector<Flag> flags_of_size(int length) const;
    // All nonempty flags.
    std::vector<Flag> all_flags() const;

    struct GradedReport {
        bool ok = true;
        int witness = -1;  // id of a rank>0 element without a lower cover
        std::string detail;
    };
    GradedReport check_graded() const;

    // Exact equality of ids, ranks and cover sets.
    bool same_presentation(const RankedPoset& o) const;

    // Induced subposet on the given indices; keeps original ids.
    // If rerank is true, ranks are recomputed as chain height from below.
    RankedPoset induced(const std::vector<int>& indices, bool rerank) const;

private:
    void build_closure();

    std::vector<int> ids_;
    std::vector<int> ranks_;
    std::vector<std::pair<int, int>> covers_;  // index pairs
    std::vector<std::vector<int>> up_adj_, down_adj_;
    std::vector<Bitvec> down_, up_;
    std::map<int, int> id_to_index_;
    int dim_ = -1;
};

// Poset product (componentwise order), disjoint union.  Ids are fresh
// (0..n-1); both results carry rank = sum / original rank respectively.
RankedPoset poset_product(const RankedPoset& a, const RankedPoset& b);
RankedPoset poset_disjoint_union(const RankedPoset& a, const RankedPoset& b);

// Connected components of the comparability graph; returns component index
// per element.
std::vector<int> comparability_components(const RankedPoset& p, int* count = nullptr);

} // namespace cubical
