#include "cubical/complex.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

namespace cubical {

std::string ValidationIssue::kind_name() const {
    switch (kind) {
        case ValidationErrorKind::None: return "None";
        case ValidationErrorKind::NotGraded: return "NotGraded";
        case ValidationErrorKind::IdealNotCube: return "IdealNotCube";
        case ValidationErrorKind::NotLattice: return "NotLattice";
    }
    return "?";
}

const CubicalComplex& ValidationResult::value() const {
    if (!complex) throw std::runtime_error("validation failed: " + issue.detail);
    return *complex;
}

namespace {

long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Certifies that the order ideal of x is isomorphic to the face poset of an
// r-cube by reconstructing cube coordinates from opposite-facet pairs and
// checking that order coincides with vertex-set inclusion throughout.
bool ideal_is_cube(const RankedPoset& p, int x, std::string* why) {
    const int r = p.rank_at(x);
    const Bitvec& ideal = p.down_set(x);
    const long long isz = static_cast<long long>(ideal.count());
    if (isz != pow_ll(3, r)) {
        if (why) *why = "ideal has " + std::to_string(isz) + " elements, expected 3^" + std::to_string(r);
        return false;
    }
    if (r == 0) return true;

    std::vector<int> members;
    members.reserve(isz);
    ideal.for_each_set([&](int i) { members.push_back(i); });

    std::vector<int> verts;
    for (int i : members)
        if (p.rank_at(i) == 0) verts.push_back(i);
    if (static_cast<long long>(verts.size()) != pow_ll(2, r)) {
        if (why) *why = "ideal has " + std::to_string(verts.size()) + " vertices, expected 2^" + std::to_string(r);
        return false;
    }
    if (r > 20) {
        if (why) *why = "rank too large for cube certification";
        return false;
    }
    std::map<int, int> vpos;
    for (std::size_t k = 0; k < verts.size(); ++k) vpos[verts[k]] = static_cast<int>(k);

    // Vertex sets as bitmasks over the ideal's own vertices.
    auto vset = [&](int i) {
        std::uint64_t m = 0;
        for (auto [v, k] : vpos)
            if (p.leq_idx(v, i)) m |= (std::uint64_t{1} << k);
        return m;
    };
    std::map<int, std::uint64_t> vs;
    std::unordered_set<std::uint64_t> seen;
    for (int i : members) {
        std::uint64_t m = vset(i);
        if (__builtin_popcountll(m) != (1LL << p.rank_at(i))) {
            if (why) *why = "face " + std::to_string(p.id_of(i)) + " has wrong vertex count";
            return false;
        }
        if (!seen.insert(m).second) {
            if (why) *why = "two faces share a vertex set";
            return false;
        }
        vs[i] = m;
    }

    // Facets of x must come in complementary pairs: one pair per cube axis.
    std::vector<int> facets;
    for (int i : members)
        if (p.rank_at(i) == r - 1 && p.leq_idx(i, x)) facets.push_back(i);
    if (static_cast<int>(facets.size()) != 2 * r) {
        if (why) *why = "top face has " + std::to_string(facets.size()) + " facets, expected " + std::to_string(2 * r);
        return false;
    }
    const std::uint64_t full = (verts.size() == 64) ? ~std::uint64_t{0}
                                                    : ((std::uint64_t{1} << verts.size()) - 1);
    std::vector<std::pair<int, int>> axes;
    std::vector<bool> used(facets.size(), false);
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (used[i]) continue;
        bool paired = false;
        for (std::size_t j = i + 1; j < facets.size(); ++j) {
            if (used[j]) continue;
            if ((vs[facets[i]] ^ vs[facets[j]]) == full) {
                axes.emplace_back(facets[i], facets[j]);
                used[i] = used[j] = true;
                paired = true;
                break;
            }
        }
        if (!paired) {
            if (why) *why = "facet " + std::to_string(p.id_of(facets[i])) + " has no opposite facet";
            return false;
        }
    }

    // Coordinates per vertex; must separate vertices.
    std::unordered_set<std::uint64_t> coords;
    for (auto [v, k] : vpos) {
        std::uint64_t c = 0;
        for (std::size_t ax = 0; ax < axes.size(); ++ax)
            if (vs[axes[ax].second] & (std::uint64_t{1} << k)) c |= (std::uint64_t{1} << ax);
        if (!coords.insert(c).second) {
            if (why) *why = "cube coordinates do not separate vertices";
            return false;
        }
    }

    // Every face's vertex set must be a full subcube of the right dimension.
    for (int i : members) {
        int stars = 0;
        long long expect = 1;
        for (auto [fp, fm] : axes) {
            bool on_plus = vs[i] & vs[fp] & full ? (vs[i] & vs[fp]) != 0 : false;
            bool on_minus = (vs[i] & vs[fm]) != 0;
            on_plus = (vs[i] & vs[fp]) != 0;
            if (on_plus && on_minus) { ++stars; expect *= 2; }
            else if (!on_plus && !on_minus) {
                if (why) *why = "face misses both sides of an axis";
                return false;
            }
        }
        if (stars != p.rank_at(i) || expect != (1LL << p.rank_at(i))) {
            if (why) *why = "face " + std::to_string(p.id_of(i)) + " is not a subcube";
            return false;
        }
    }

    // Order must coincide with vertex-set inclusion inside the ideal.
    for (int a : members) {
        for (int b : members) {
            bool incl = (vs[a] & ~vs[b]) == 0;
            if (incl != p.leq_idx(a, b)) {
                if (why) *why = "order disagrees with vertex-set inclusion at (" +
                                std::to_string(p.id_of(a)) + "," + std::to_string(p.id_of(b)) + ")";
                return false;
            }
        }
    }
    return true;
}

} // namespace

std::optional<std::pair<int, int>> find_lattice_failure(const RankedPoset& p) {
    const int n = p.size();
    // With a top adjoined, it is enough that every pair with a common lower
    // bound has a unique maximal one (then all meets exist, so K-hat is a
    // lattice).
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (p.leq_idx(a, b) || p.leq_idx(b, a)) continue;
            Bitvec common = p.down_set(a) & p.down_set(b);
            if (common.none()) continue;
            int maximal = -1, second = -1;
            common.for_each_set([&](int z) {
                // z maximal in the (down-closed) common set iff no upper cover
                // of z stays in the set.
                for (int w : p.upper_covers(z))
                    if (common.get(w)) return;
                if (maximal == -1) maximal = z;
                else if (second == -1) second = z;
            });
            if (second != -1) return std::make_pair(p.id_of(a), p.id_of(b));
        }
    }
    return std::nullopt;
}

ValidationResult validate_cubical(const RankedPoset& p, bool require_lattice) {
    ValidationResult res;
    auto graded = p.check_graded();
    if (!graded.ok) {
        res.issue = {ValidationErrorKind::NotGraded, graded.witness, -1, graded.detail};
        return res;
    }
    for (int i = 0; i < p.size(); ++i) {
        std::string why;
        if (!ideal_is_cube(p, i, &why)) {
            res.issue = {ValidationErrorKind::IdealNotCube, p.id_of(i), -1,
                         "ideal of " + std::to_string(p.id_of(i)) + " is not a cube: " + why};
            return res;
        }
    }
    auto failure = find_lattice_failure(p);
    if (failure && require_lattice) {
        res.issue = {ValidationErrorKind::NotLattice, failure->first, failure->second,
                     "elements " + std::to_string(failure->first) + " and " +
                         std::to_string(failure->second) + " have no unique meet"};
        return res;
    }
    res.complex = CubicalComplex(p, !failure.has_value());
    return res;
}

CubicalComplex require_cubical(const RankedPoset& p, bool require_lattice) {
    auto r = validate_cubical(p, require_lattice);
    return r.value();
}

CubicalComplex product(const CubicalComplex& a, const CubicalComplex& b) {
    return require_cubical(poset_product(a.poset(), b.poset()), false);
}

CubicalComplex disjoint_union(const CubicalComplex& a, const CubicalComplex& b) {
    return require_cubical(poset_disjoint_union(a.poset(), b.poset()), false);
}

} // namespace cubical
