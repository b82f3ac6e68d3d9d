#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cts/linalg.hpp"

namespace cts {

// Z-grading given as a degree per basis element.
using ZGrading = std::vector<int>;

// Finite-dimensional Lie superalgebra over GF(2)(a) with a squaring map on
// the odd part. The bracket is symmetric ([x,y] = [y,x] in char 2) and the
// bracket of odd elements is the polarization of the squaring.
class LieSuperAlgebra {
  public:
    LieSuperAlgebra() = default;

    int dim() const { return static_cast<int>(labels_.size()); }
    std::pair<int, int> sdim() const;  // (even, odd)

    int add_basis(const std::string& label, bool odd);
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool odd(int i) const { return parity_[static_cast<std::size_t>(i)] != 0; }

    void set_bracket(int i, int j, const SparseVec& v);
    void add_bracket(int i, int j, int k, const Scalar& c);
    const SparseVec& bracket(int i, int j) const;
    void set_square(int i, const SparseVec& v);
    const SparseVec& square_of_basis(int i) const;

    SparseVec bracket_vec(const SparseVec& x, const SparseVec& y) const;
    // Quadratic extension: (sum c_i b_i)^2 = sum c_i^2 b_i^2 + sum_{i<j} c_i c_j [b_i, b_j].
    SparseVec square_vec(const SparseVec& x) const;

    // Parity of a homogeneous vector; nullopt for 0 or mixed support.
    std::optional<bool> parity_of(const SparseVec& v) const;

    // Structure checks; empty report means all identities hold.
    std::vector<std::string> verify(int max_violations = 16) const;

    // Derived algebra g' = [g,g] + span{x^2 : x odd}; returns the subalgebra
    // and its embedding (rows express the new basis in the old one).
    struct Sub {
        LieSuperAlgebra algebra;
        ExactMatrix embedding;
    };
    Sub derived(int iterations = 1) const;

    // Center {x : [x, g] = 0} and the quotient by it.
    ExactMatrix center() const;
    struct Quot {
        LieSuperAlgebra algebra;
        std::vector<int> representative;  // old basis index per new basis element
    };
    Quot quotient_by_ideal(const ExactMatrix& ideal_rows) const;

    // Subalgebra on an explicit spanning set (must be bracket/squaring closed).
    Sub subalgebra(const ExactMatrix& span_rows) const;

    LieSuperAlgebra desuperized() const;  // forgets parity; squaring kept as inert annotation
    const std::map<int, SparseVec>& inert_squaring() const { return annotation_squaring_; }

    std::string to_json() const;
    static LieSuperAlgebra from_json(const std::string& text);

  private:
    std::vector<std::string> labels_;
    std::vector<std::uint8_t> parity_;
    std::map<std::pair<int, int>, SparseVec> bracket_;  // keys with i <= j
    std::map<int, SparseVec> squaring_;
    std::map<int, SparseVec> annotation_squaring_;  // desuperization keepsake, not structure
};

// Degree-d derivations of a graded algebra with the inner/outer split.
struct DerivationReport {
    int dim_derivations = 0;
    int dim_inner = 0;
    int outer() const { return dim_derivations - dim_inner; }
};
DerivationReport graded_derivations(const LieSuperAlgebra& g, const ZGrading& grading, int d);

// Weisfeiler filtration from a subalgebra L0 and an L0-invariant L-1.
struct Filtration {
    std::vector<ExactMatrix> negative;  // L_{-1}, L_{-2}, ..., L_{-depth}
    std::vector<ExactMatrix> positive;  // L_1, L_2, ... until stable
    int depth = 0;
};
Filtration weisfeiler_filtration(const LieSuperAlgebra& g, const ExactMatrix& l0, const ExactMatrix& lm1);

enum class Simplicity { SIMPLE, NOT_SIMPLE, INCONCLUSIVE };
struct SimplicityReport {
    Simplicity verdict;
    ExactMatrix witness_ideal;  // nonempty iff NOT_SIMPLE
};
// test_vectors: deterministic spinning seeds (weight-space basis vectors when
// available); when empty, all basis vectors plus 64 seeded pseudo-random
// vectors are used and the verdict degrades to INCONCLUSIVE if spinning
// passes but the set is not known exhaustive.
SimplicityReport is_simple(const LieSuperAlgebra& g, const std::vector<SparseVec>& test_vectors = {},
                           bool exhaustive_hint = false);

}  // namespace cts
