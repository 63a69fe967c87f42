/**
 * Finitely generated free chain complexes over the integers, with sparse
 * boundary maps, and their homology via Smith normal form.
 */
#ifndef PRISMHOM_CHAINS_HPP
#define PRISMHOM_CHAINS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "prismhom/algebra.hpp"
#include "prismhom/snf.hpp"

namespace prismhom {

struct GeneratorId
{
    std::size_t degree = 0;
    std::size_t index = 0;
    auto operator<=>(const GeneratorId&) const = default;
};

/// Sparse integer combination of generators of one degree. Zero
/// coefficients are never stored.
class Chain
{
public:
    using Terms = std::map<std::size_t, std::int64_t>;

    Chain() = default;
    explicit Chain(std::size_t degree) : degree_(degree) {}
    static Chain generator(std::size_t degree, std::size_t index, std::int64_t coeff = 1);

    std::size_t degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t coefficient(std::size_t index) const;

    void add(std::size_t index, std::int64_t coeff);
    Chain& operator+=(const Chain& other);
    Chain& operator-=(const Chain& other);
    Chain& operator*=(std::int64_t k);
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(std::int64_t k, Chain a) { return a *= k; }

    bool operator==(const Chain&) const = default;

private:
    std::size_t degree_ = 0;
    Terms terms_;
};

/// Graded free module with a boundary chain stored for every generator.
class ChainComplex
{
public:
    using Column = std::vector<std::pair<std::size_t, std::int64_t>>;

    ChainComplex() = default;
    explicit ChainComplex(std::vector<std::size_t> counts);

    std::size_t max_degree() const { return counts_.empty() ? 0 : counts_.size() - 1; }
    std::size_t count(std::size_t degree) const { return degree < counts_.size() ? counts_[degree] : 0; }

    void set_boundary(std::size_t degree, std::size_t index, const Chain& boundary);
    /// Stored boundary of a single generator as a chain of degree-1.
    Chain boundary_of(std::size_t degree, std::size_t index) const;
    const Column& column(std::size_t degree, std::size_t index) const { return columns_[degree][index]; }

private:
    std::vector<std::size_t> counts_;
    std::vector<std::vector<Column>> columns_;
};

/// Linear extension of the generator boundaries. Throws InputError for
/// degree 0 or unknown generators.
Chain boundary(const Chain& c, const ChainComplex& k);

struct SquareViolation
{
    GeneratorId generator;
    Chain residue; // nonzero boundary(boundary(g))
};

std::vector<SquareViolation> verify_d_squared(const ChainComplex& k, std::size_t lo, std::size_t hi);

/// Dense matrix of the boundary map C_n -> C_{n-1} (rows index C_{n-1}).
IntMatrix boundary_matrix(const ChainComplex& k, std::size_t n);

struct HomologyGroup
{
    std::size_t free_rank = 0;
    /// Invariant factors >= 2, each dividing the next.
    std::vector<BigInt> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;
};

std::string to_string(const HomologyGroup& h);

/**
 * Homology in degree n. Degree max_degree() needs allow_truncation, in
 * which case the missing boundary from degree n+1 is taken to be zero.
 */
HomologyGroup homology(const ChainComplex& k, std::size_t n, bool allow_truncation = false);

/// Canonical coordinates of a homology class: free part as integers,
/// torsion part as residues modulo the invariant factors.
struct HomologyClass
{
    std::vector<BigInt> free;
    std::vector<BigInt> torsion;

    bool is_zero() const;
    auto operator<=>(const HomologyClass&) const = default;
};

std::string to_string(const HomologyClass& c);

/**
 * Basis data for H_n retained from the Smith normal forms of the two
 * boundary maps around degree n, so that cycles can be mapped to class
 * coordinates.
 */
class HomologyDecomposition
{
public:
    HomologyDecomposition(const ChainComplex& k, std::size_t n, bool allow_truncation = false);

    std::size_t degree() const { return degree_; }
    const HomologyGroup& group() const { return group_; }

    /// Throws InputError when z is not a cycle of the right degree.
    HomologyClass class_of(const Chain& z) const;

private:
    std::vector<ChainComplex::Column> outgoing_; // boundary columns of degree n
    std::size_t target_count_ = 0;
    std::size_t degree_;
    HomologyGroup group_;
    std::vector<BigInt> image_factors_;   // all invariant factors of the incoming boundary
    Matrix<BigInt> u_;                    // left transform of the incoming boundary
    std::size_t tail_rank_ = 0;           // rank of the outgoing boundary on the complement
    Matrix<BigInt> tail_v_inv_;           // right inverse transform on the complement
};

/// Plain-text `degree row col value` triplets for every boundary entry.
void write_sparse_triplets(std::ostream& out, const ChainComplex& k);

} // namespace prismhom

#endif
