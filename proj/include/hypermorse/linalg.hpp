#pragma once

#include "hypermorse/matrix.hpp"

#include <optional>
#include <stop_token>
#include <string>
#include <vector>

namespace hypermorse {

/// Column echelon form `reduced = input * transform`.
///
/// The first `pivot_rows.size()` columns of `reduced` are the canonical basis
/// of the column module: Hermite normal form over Z (positive pivots, entries
/// left of a pivot reduced into [0, pivot)), reduced column echelon form over a
/// field. The remaining columns of `reduced` are zero and the matching columns
/// of `transform` span the kernel. `transform` is unimodular over Z.
struct ColumnEchelon {
    ExactMatrix reduced;
    ExactMatrix transform;
    std::vector<std::size_t> pivot_rows;

    std::size_t rank() const noexcept { return pivot_rows.size(); }
};

ColumnEchelon column_echelon(const ExactMatrix& m, std::stop_token stop = {});

std::size_t rank(const ExactMatrix& m);

/// A submodule of R^ambient_dim given by a canonical basis (columns of
/// `basis()`). Over Z this is the Hermite normal form of the lattice, so two
/// ChainSpaces are equal iff their bases are equal.
class ChainSpace {
public:
    /// Canonical span of the columns of `generators`.
    static ChainSpace span(const ExactMatrix& generators, std::stop_token stop = {});
    static ChainSpace zero(Ring ring, std::size_t ambient_dim);
    static ChainSpace full(Ring ring, std::size_t ambient_dim);
    /// Span of the unit vectors at `indices` (e.g. the chains R(H)_n).
    static ChainSpace coordinate(Ring ring, std::size_t ambient_dim, const std::vector<std::size_t>& indices);

    const Ring& ring() const noexcept { return basis_.ring(); }
    std::size_t ambient_dim() const noexcept { return basis_.rows(); }
    std::size_t rank() const noexcept { return basis_.cols(); }
    const ExactMatrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivot_rows() const noexcept { return pivots_; }

    /// Coefficients of `v` in the canonical basis, or nullopt when v lies
    /// outside the module.
    std::optional<std::vector<Scalar>> coordinates(const std::vector<Scalar>& v) const;
    bool contains(const std::vector<Scalar>& v) const { return coordinates(v).has_value(); }
    bool contains(const ChainSpace& other) const;

    friend bool operator==(const ChainSpace& a, const ChainSpace& b) { return a.basis_ == b.basis_; }

private:
    ChainSpace(ExactMatrix basis, std::vector<std::size_t> pivots)
        : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    ExactMatrix basis_;
    std::vector<std::size_t> pivots_;
};

ChainSpace sum(const ChainSpace& a, const ChainSpace& b);
ChainSpace intersection(const ChainSpace& a, const ChainSpace& b);
/// ker(m) as a submodule of the domain of m.
ChainSpace kernel_of(const ExactMatrix& m);
/// m(a) as a submodule of the codomain of m.
ChainSpace image_of(const ExactMatrix& m, const ChainSpace& a);
/// { x : m x in b } as a submodule of the domain of m.
ChainSpace preimage_under(const ExactMatrix& m, const ChainSpace& b);

/// Smith normal form over Z: left * m * right = diag(factors..., 0...), each
/// factor dividing the next, with unimodular left/right.
struct SmithForm {
    std::vector<mpz_class> factors;
    ExactMatrix left{Ring::integers(), 0, 0};
    ExactMatrix right{Ring::integers(), 0, 0};
};

/// Throws ValidationError when m is not over Z and Cancelled when `stop` fires.
SmithForm smith_normal_form(const ExactMatrix& m, bool with_transforms = true, std::stop_token stop = {});

struct DegreeHomology {
    int degree = 0;
    std::size_t betti = 0;
    std::vector<mpz_class> torsion;  // invariant factors >= 2, Z only

    friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

struct HomologyResult {
    Ring ring = Ring::integers();
    std::vector<DegreeHomology> degrees;

    std::vector<std::size_t> betti() const;
    std::size_t betti(int n) const;
    /// Alternating sum of Betti numbers.
    long euler_characteristic() const;
};

/// Equal Betti numbers and torsion in every degree, treating missing
/// trailing degrees as zero.
bool same_homology(const HomologyResult& a, const HomologyResult& b);
std::string describe(const HomologyResult& h);

/// A chain of `spaces[degree]` whose boundary leaves `spaces[degree - 1]`.
struct ClosureViolation {
    int degree = 0;
    std::vector<Scalar> chain;
};

/// `boundaries[n]` maps ambient degree-n coordinates to degree n-1
/// (`boundaries[0]` has zero rows). Returns the first basis chain whose
/// boundary escapes the next lower space.
std::optional<ClosureViolation> find_closure_violation(const std::vector<ChainSpace>& spaces,
                                                       const std::vector<ExactMatrix>& boundaries);

/// Homology of a sub-chain complex. Throws ValidationError (with the
/// offending degree and a witness chain) if the spaces are not closed under
/// the boundary.
HomologyResult homology_of_subcomplex(const std::vector<ChainSpace>& spaces,
                                      const std::vector<ExactMatrix>& boundaries,
                                      std::stop_token stop = {});

/// Boundary of the subcomplex in its own canonical bases:
/// rank(spaces[n-1]) x rank(spaces[n]). Throws if not closed.
ExactMatrix restricted_boundary(const ChainSpace& source, const ChainSpace& target, const ExactMatrix& boundary);

}  // namespace hypermorse
