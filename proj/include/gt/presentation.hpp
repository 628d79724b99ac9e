#pragma once

#include "gt/cocycles.hpp"
#include "gt/lie.hpp"
#include "gt/linalg.hpp"

#include <memory>
#include <mutex>

namespace gt {

struct InhomogeneousInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSurjective : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using LieCoords = std::map<Word, Rational>;

struct Relation {
    LieCoords coords;  // Lyndon coordinates in the free Lie algebra
    int degree = 0;
    std::string label;
};

// One weighted degree of a presented Lie algebra.
struct DegreeComponent {
    int degree = 0;
    std::vector<Word> lyndon;        // basis of the free Lie component
    std::map<Word, int> index;       // lyndon word -> column
    Echelon ideal;                   // span of the relation ideal in this degree
    std::vector<int> quotient_basis; // free columns of the echelon form

    std::size_t free_dim() const { return lyndon.size(); }
    std::size_t quotient_dim() const { return quotient_basis.size(); }
};

// Graded Lie algebra given by generators with positive degrees and homogeneous relations.
// Components are built on demand and cached; the cache is internally synchronized.
class GradedPresentation {
public:
    GradedPresentation(std::string name, AlphabetPtr alphabet, int max_degree);

    const std::string& name() const { return name_; }
    const AlphabetPtr& alphabet() const { return alpha_; }
    int max_degree() const { return N_; }
    const LyndonExpander& expander() const { return expander_; }

    TensorElement gen(const std::string& symbol) const;

    // lie must be a homogeneous Lie element over this alphabet
    void add_relation(const TensorElement& lie, const std::string& label);
    void add_relation(const LieCoords& coords, int degree, const std::string& label);
    // expands to [g, h] = 0 for every generator h
    void add_central(const std::string& symbol);

    const std::vector<Relation>& relations() const { return relations_; }

    const DegreeComponent& component(int d) const;
    std::vector<long long> dims(int dmax) const;  // index 0..dmax, entry 0 unused

    // coordinates of a homogeneous Lie element as a row over component(d)
    RatRow to_row(const LieCoords& coords, int d) const;
    RatRow to_row(const TensorElement& lie, int d) const;
    LieCoords from_row(const RatRow& row, int d) const;
    // projection along the ideal; empty iff lie lies in the ideal
    RatRow normal_form(const TensorElement& lie, int d) const;
    bool is_zero(const TensorElement& lie) const;

    // Lie elements spanning the ideal in degree d (echelon rows)
    std::vector<LieCoords> ideal_span(int d) const;

private:
    const IntRow& bracket_row(Letter g, int col, int d) const;

    std::string name_;
    AlphabetPtr alpha_;
    int N_;
    LyndonExpander expander_;
    std::vector<Relation> relations_;
    mutable std::recursive_mutex mu_;
    mutable std::map<int, std::unique_ptr<DegreeComponent>> components_;
    mutable std::map<std::tuple<Letter, int, int>, IntRow> bracket_cache_;
};

using PresentationPtr = std::shared_ptr<GradedPresentation>;

// Degree-preserving map of presentations fixed by generator images in the target's tensor algebra.
class LieHomomorphism {
public:
    LieHomomorphism(PresentationPtr source, PresentationPtr target, std::vector<TensorElement> images,
                    std::string name = "");

    const PresentationPtr& source() const { return src_; }
    const PresentationPtr& target() const { return dst_; }
    const std::string& name() const { return name_; }
    const std::vector<TensorElement>& images() const { return images_; }
    const TensorElement& image(const std::string& symbol) const;

    TensorElement apply_lyndon(const Word& w) const;
    TensorElement apply(const LieCoords& coords) const;
    // images as an algebra map on the source tensor algebra
    TensorElement apply_tensor(const TensorElement& a) const;

    // this after first: first.source -> this.target
    LieHomomorphism after(const LieHomomorphism& first) const;

private:
    PresentationPtr src_, dst_;
    std::vector<TensorElement> images_;
    std::string name_;
    mutable std::mutex mu_;
    mutable std::map<Word, TensorElement> memo_;
};

// every source relation of degree <= dmax maps into the target ideal
CheckResult check_homomorphism(const LieHomomorphism& h, int dmax);

struct KernelDims {
    std::vector<long long> nullity;     // computed by rank, index 0..dmax
    std::vector<long long> difference;  // dim source - dim target
};

// throws NotSurjective when the map is not onto in some degree
KernelDims kernel_dims(const LieHomomorphism& s, int dmax);

// Adjoin [J, J] to the relations, J the ideal generated by the given generator; degrees <= dmax.
PresentationPtr quotient_by_derived_ideal(const GradedPresentation& base, const std::string& generator, int dmax,
                                          const std::string& name);

}  // namespace gt
