#include "cubical/poset.hpp"

#include <algorithm>
#include <numeric>

namespace cubical {

RankedPoset::RankedPoset(std::vector<int> ids, std::vector<int> ranks,
                         std::vector<std::pair<int, int>> covers_by_id) {
    if (ids.size() != ranks.size())
        throw PosetBuildError("ids and ranks have different lengths");

    // Canonical element order: by (rank, id).
    std::vector<int> perm(ids.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        if (ranks[a] != ranks[b]) return ranks[a] < ranks[b];
        return ids[a] < ids[b];
    });
    ids_.reserve(ids.size());
    ranks_.reserve(ids.size());
    for (int p : perm) {
        ids_.push_back(ids[p]);
        ranks_.push_back(ranks[p]);
    }
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (ranks_[i] < 0) throw PosetBuildError("negative rank");
        if (!id_to_index_.emplace(ids_[i], static_cast<int>(i)).second)
            throw PosetBuildError("duplicate element id " + std::to_string(ids_[i]));
    }
    dim_ = ranks_.empty() ? -1 : *std::max_element(ranks_.begin(), ranks_.end());

    covers_.reserve(covers_by_id.size());
    for (auto [lo, hi] : covers_by_id) {
        auto it_lo = id_to_index_.find(lo), it_hi = id_to_index_.find(hi);
        if (it_lo == id_to_index_.end()) throw PosetBuildError("cover references unknown id " + std::to_string(lo));
        if (it_hi == id_to_index_.end()) throw PosetBuildError("cover references unknown id " + std::to_string(hi));
        int a = it_lo->second, b = it_hi->second;
        if (ranks_[b] != ranks_[a] + 1)
            throw PosetBuildError("cover (" + std::to_string(lo) + "," + std::to_string(hi) +
                                  ") does not raise rank by one");
        covers_.emplace_back(a, b);
    }
    std::sort(covers_.begin(), covers_.end());
    covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());

    up_adj_.assign(size(), {});
    down_adj_.assign(size(), {});
    for (auto [a, b] : covers_) {
        up_adj_[a].push_back(b);
        down_adj_[b].push_back(a);
    }
    build_closure();
}

RankedPoset RankedPoset::dense(std::vector<int> ranks,
                               std::vector<std::pair<int, int>> covers) {
    std::vector<int> ids(ranks.size());
    std::iota(ids.begin(), ids.end(), 0);
    return RankedPoset(std::move(ids), std::move(ranks), std::move(covers));
}

int RankedPoset::index_of(int id) const {
    auto it = id_to_index_.find(id);
    if (it == id_to_index_.end()) throw UnknownElement(id);
    return it->second;
}

void RankedPoset::build_closure() {
    const int n = size();
    down_.assign(n, Bitvec(n));
    up_.assign(n, Bitvec(n));
    // Elements are sorted by rank, so a single upward sweep closes down-sets.
    for (int i = 0; i < n; ++i) {
        down_[i].set(i);
        for (int j : down_adj_[i]) down_[i] |= down_[j];
    }
    for (int i = n - 1; i >= 0; --i) {
        up_[i].set(i);
        for (int j : up_adj_[i]) up_[i] |= up_[j];
    }
}

std::vector<long long> RankedPoset::f_vector() const {
    std::vector<long long> f(dim_ + 1, 0);
    for (int r : ranks_) f[r]++;
    return f;
}

long long RankedPoset::euler_characteristic() const {
    long long chi = 0;
    for (int r : ranks_) chi += (r % 2 == 0) ? 1 : -1;
    return chi;
}

std::vector<int> RankedPoset::order_ideal(int id) const {
    std::vector<int> out;
    down_[index_of(id)].for_each_set([&](int i) { out.push_back(ids_[i]); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> RankedPoset::order_filter(int id) const {
    std::vector<int> out;
    up_[index_of(id)].for_each_set([&](int i) { out.push_back(ids_[i]); });
    std::sort(out.begin(), out.end());
    return out;
}

RankedPoset RankedPoset::link_of(int id) const {
    int x = index_of(id);
    std::vector<int> ids, ranks;
    std::vector<std::pair<int, int>> covers;
    up_[x].for_each_set([&](int i) {
        if (i == x) return;
        ids.push_back(ids_[i]);
        ranks.push_back(ranks_[i] - ranks_[x] - 1);
    });
    // The filter is up-closed, so its Hasse diagram is the restriction of ours.
    for (auto [a, b] : covers_)
        if (a != x && up_[x].get(a) && up_[x].get(b))
            covers.emplace_back(ids_[a], ids_[b]);
    return RankedPoset(std::move(ids), std::move(ranks), std::move(covers));
}

RankedPoset RankedPoset::dual() const {
    const int n = size();
    // Height from below in the reversed order = longest descending chain here.
    std::vector<int> h(n, 0);
    for (int i = n - 1; i >= 0; --i)
        for (int j : up_adj_[i]) h[i] = std::max(h[i], h[j] + 1);
    std::vector<std::pair<int, int>> covers;
    covers.reserve(covers_.size());
    for (auto [a, b] : covers_) covers.emplace_back(ids_[b], ids_[a]);
    return RankedPoset(ids_, std::move(h), std::move(covers));
}

RankedPoset RankedPoset::induced(const std::vector<int>& indices, bool rerank) const {
    const int n = size();
    std::vector<int> keep(n, -1);
    for (std::size_t k = 0; k < indices.size(); ++k) keep[indices[k]] = static_cast<int>(k);

    std::vector<int> ids, ranks;
    for (int i : indices) {
        ids.push_back(ids_[i]);
        ranks.push_back(ranks_[i]);
    }
    // Hasse reduction of the induced order.
    std::vector<std::pair<int, int>> covers;
    for (int bi : indices) {
        for (int ai : indices) {
            if (ai == bi || !less_idx(ai, bi)) continue;
            bool has_mid = false;
            for (int mi : indices) {
                if (mi != ai && mi != bi && less_idx(ai, mi) && less_idx(mi, bi)) {
                    has_mid = true;
                    break;
                }
            }
            if (!has_mid) covers.emplace_back(ids_[ai], ids_[bi]);
        }
    }
    if (rerank) {
        // Height from below within the subposet.
        std::map<int, int> idx_of_id;
        for (std::size_t k = 0; k < ids.size(); ++k) idx_of_id[ids[k]] = static_cast<int>(k);
        std::vector<int> order(ids.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return ranks[a] < ranks[b]; });
        std::vector<int> h(ids.size(), 0);
        for (int k : order)
            for (auto& [a, b] : covers)
                if (idx_of_id[b] == k) h[k] = std::max(h[k], h[idx_of_id[a]] + 1);
        ranks = h;
    }
    return RankedPoset(std::move(ids), std::move(ranks), std::move(covers));
}

RankedPoset RankedPoset::rank_selected(const std::set<int>& ranks_wanted) const {
    std::vector<int> indices;
    for (int i = 0; i < size(); ++i)
        if (ranks_wanted.count(ranks_[i])) indices.push_back(i);

    // Dense re-ranking by position of the original rank among the selected ones.
    std::vector<int> sorted_ranks(ranks_wanted.begin(), ranks_wanted.end());
    std::map<int, int> dense;
    for (std::size_t k = 0; k < sorted_ranks.size(); ++k) dense[sorted_ranks[k]] = static_cast<int>(k);

    RankedPoset sub = induced(indices, false);
    std::vector<int> new_ranks(sub.size());
    for (int i = 0; i < sub.size(); ++i) new_ranks[i] = dense[sub.rank_at(i)];
    std::vector<std::pair<int, int>> covers;
    for (auto [a, b] : sub.cover_pairs()) covers.emplace_back(sub.id_of(a), sub.id_of(b));
    return RankedPoset(sub.ids(), std::move(new_ranks), std::move(covers));
}

std::vector<Flag> RankedPoset::flags_of_size(int length) const {
    std::vector<Flag> out;
    if (length < 1) return out;
    std::vector<int> stack;
    // Depth-first extension by strictly larger elements.
    auto extend = [&](auto&& self, int last) -> void {
        if (static_cast<int>(stack.size()) == length) {
            Flag f;
            f.ids.reserve(stack.size());
            for (int i : stack) f.ids.push_back(ids_[i]);
            out.push_back(std::move(f));
            return;
        }
        up_[last].for_each_set([&](int j) {
            if (j == last) return;
            stack.push_back(j);
            self(self, j);
            stack.pop_back();
        });
    };
    for (int i = 0; i < size(); ++i) {
        stack = {i};
        extend(extend, i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Flag> RankedPoset::all_flags() const {
    std::vector<Flag> out;
    std::vector<int> stack;
    auto extend = [&](auto&& self, int last) -> void {
        Flag f;
        f.ids.reserve(stack.size());
        for (int i : stack) f.ids.push_back(ids_[i]);
        out.push_back(std::move(f));
        up_[last].for_each_set([&](int j) {
            if (j == last) return;
            stack.push_back(j);
            self(self, j);
            stack.pop_back();
        });
    };
    for (int i = 0; i < size(); ++i) {
        stack = {i};
        extend(extend, i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

RankedPoset::GradedReport RankedPoset::check_graded() const {
    for (int i = 0; i < size(); ++i) {
        if (ranks_[i] > 0 && down_adj_[i].empty()) {
            GradedReport r;
            r.ok = false;
            r.witness = ids_[i];
            r.detail = "element " + std::to_string(ids_[i]) + " has rank " +
                       std::to_string(ranks_[i]) + " but no lower cover";
            return r;
        }
    }
    return {};
}

bool RankedPoset::same_presentation(const RankedPoset& o) const {
    if (ids_ != o.ids_ || ranks_ != o.ranks_) return false;
    std::vector<std::pair<int, int>> a, b;
    for (auto [x, y] : covers_) a.emplace_back(ids_[x], ids_[y]);
    for (auto [x, y] : o.covers_) b.emplace_back(o.ids_[x], o.ids_[y]);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

RankedPoset poset_product(const RankedPoset& a, const RankedPoset& b) {
    const int nb = b.size();
    auto pid = [&](int i, int j) { return i * nb + j; };
    std::vector<int> ranks(static_cast<std::size_t>(a.size()) * nb);
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < nb; ++j)
            ranks[pid(i, j)] = a.rank_at(i) + b.rank_at(j);
    for (auto [x, y] : a.cover_pairs())
        for (int j = 0; j < nb; ++j) covers.emplace_back(pid(x, j), pid(y, j));
    for (auto [x, y] : b.cover_pairs())
        for (int i = 0; i < a.size(); ++i) covers.emplace_back(pid(i, x), pid(i, y));
    return RankedPoset::dense(std::move(ranks), std::move(covers));
}

RankedPoset poset_disjoint_union(const RankedPoset& a, const RankedPoset& b) {
    std::vector<int> ranks(a.ranks());
    ranks.insert(ranks.end(), b.ranks().begin(), b.ranks().end());
    std::vector<std::pair<int, int>> covers(a.cover_pairs());
    for (auto [x, y] : b.cover_pairs()) covers.emplace_back(x + a.size(), y + a.size());
    return RankedPoset::dense(std::move(ranks), std::move(covers));
}

std::vector<int> comparability_components(const RankedPoset& p, int* count) {
    std::vector<int> comp(p.size(), -1);
    int c = 0;
    for (int i = 0; i < p.size(); ++i) {
        if (comp[i] != -1) continue;
        std::vector<int> stack{i};
        comp[i] = c;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : p.upper_covers(x))
                if (comp[y] == -1) { comp[y] = c; stack.push_back(y); }
            for (int y : p.lower_covers(x))
                if (comp[y] == -1) { comp[y] = c; stack.push_back(y); }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

} // namespace cubical
