#pragma once

#include <optional>
#include <string>

#include "cubical/poset.hpp"

namespace cubical {

enum class ValidationErrorKind { None, NotGraded, IdealNotCube, NotLattice };

struct ValidationIssue {
    ValidationErrorKind kind = ValidationErrorKind::None;
    int witness_a = -1;
    int witness_b = -1;
    std::string detail;
    bool ok() const { return kind == ValidationErrorKind::None; }
    std::string kind_name() const;
};

// A validated cubical complex: every order ideal is a cube face poset.
// `is_lattice` records whether the bounded extension is a lattice; the strict
// validator requires it, while quotient constructions (projective planes from
// small zonotopes) may legitimately produce non-lattice cubical posets.
class CubicalComplex {
public:
    const RankedPoset& poset() const { return poset_; }
    int dim() const { return poset_.dim(); }
    bool is_lattice() const { return lattice_; }

    std::vector<long long> f_vector() const { return poset_.f_vector(); }
    long long euler_characteristic() const { return poset_.euler_characteristic(); }

private:
    friend struct ValidationResult;
    friend ValidationResult validate_cubical(const RankedPoset&, bool);
    CubicalComplex(RankedPoset p, bool lattice) : poset_(std::move(p)), lattice_(lattice) {}

    RankedPoset poset_;
    bool lattice_ = true;
};

struct ValidationResult {
    std::optional<CubicalComplex> complex;
    ValidationIssue issue;
    bool ok() const { return complex.has_value(); }
    const CubicalComplex& value() const;
};

// Checks, in order: gradedness, every ideal a cube, and (if require_lattice)
// unique meets in the bounded extension.  With require_lattice == false the
// lattice property is still computed and recorded on the complex.
ValidationResult validate_cubical(const RankedPoset& p, bool require_lattice = true);

// Convenience: validate-or-throw.
CubicalComplex require_cubical(const RankedPoset& p, bool require_lattice = true);

// First witness of a meet failure in the bounded extension, if any.
std::optional<std::pair<int, int>> find_lattice_failure(const RankedPoset& p);

// --- spec operations on complexes ---------------------------------------
CubicalComplex product(const CubicalComplex& a, const CubicalComplex& b);
CubicalComplex disjoint_union(const CubicalComplex& a, const CubicalComplex& b);

} // namespace cubical
