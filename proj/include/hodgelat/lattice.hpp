#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodgelat/linalg.hpp"
#include "hodgelat/matrix.hpp"

namespace hodgelat {

// An even non-degenerate integral lattice, carried by the Gram matrix of a
// fixed basis. Validated on construction; immutable afterwards.
class Lattice {
  public:
    static Lattice from_gram(IntMatrix gram, std::optional<std::string> label = std::nullopt);

    const IntMatrix& gram() const { return gram_; }
    const std::optional<std::string>& label() const { return label_; }
    int rank() const { return gram_.rows(); }

    Int det() const;         // det of the Gram matrix, signed
    Int disc() const;        // |det|, the order of the discriminant group
    Inertia signature() const;
    bool is_unimodular() const { return disc() == 1; }

    bool operator==(const Lattice& other) const { return gram_ == other.gram_; }

  private:
    Lattice(IntMatrix gram, std::optional<std::string> label)
        : gram_(std::move(gram)), label_(std::move(label)) {}

    IntMatrix gram_;
    std::optional<std::string> label_;
};

Lattice make_lattice(const IntMatrix& gram, std::optional<std::string> label = std::nullopt);

enum class CatalogName { U, E8, E8Minus, LambdaK3 };

Lattice catalog(CatalogName name);
Lattice catalog(const std::string& name);  // "U" | "E8" | "E8_minus" | "LambdaK3"

Lattice rescale(const Lattice& l, const Int& n);
Lattice direct_sum(const Lattice& l1, const Lattice& l2);

// gcd over w in L of v.w  =  gcd of the entries of gram * v
Int divisibility(const std::vector<Int>& v, const Lattice& l);

// A sublattice presented by generator rows in the ambient basis; rows are
// required to be linearly independent.
struct Sublattice {
    Lattice ambient;
    IntMatrix basis;  // rows = generators, in ambient coordinates

    int rank() const { return basis.rows(); }
    IntMatrix induced_gram() const;  // basis * gram * basis^T
};

Sublattice make_sublattice(const Lattice& ambient, const IntMatrix& basis);

// primitive closure (Q-span intersected with the ambient); idempotent
Sublattice saturation(const Sublattice& s);

bool is_primitive(const Sublattice& s);

// { v in ambient : v.s = 0 for all s in S }, as a sublattice; always primitive
Sublattice orthogonal_complement_sublattice(const Sublattice& s);

// induced lattice on the complement
Lattice orthogonal_complement(const Sublattice& s);

}  // namespace hodgelat
