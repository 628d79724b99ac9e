#pragma once

#include "gt/presentation.hpp"

#include <set>

namespace gt {

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Relations are kept symbolically so that sub-presentations can filter or kill generators.
struct RelTerm {
    Rational coeff;
    std::string a, b;  // b empty: the linear term coeff * a, otherwise coeff * [a, b]
};
struct SymbolicRelation {
    std::vector<RelTerm> terms;
    std::string label;
};
struct GeneratorSpec {
    std::string name;
    int degree = 1;
};

struct PresentationSpec {
    std::string name;
    std::vector<GeneratorSpec> generators;
    std::vector<SymbolicRelation> relations;
    std::vector<std::string> central;
};

// Relations touching a generator outside the spec are dropped unless that generator is listed
// in `killed`, in which case only the terms containing it are dropped (it is set to zero).
PresentationPtr realize(const PresentationSpec& spec, int max_degree, const std::set<std::string>& killed = {});

// Generator names: t{i}_{j} with i <= j, x{a}_{i}, y{a}_{i}.
std::string t_name(int i, int j);
std::string x_name(int a, int i);
std::string y_name(int a, int i);

enum class DKKind { Unframed, Framed, Genus };

// Coefficient c in the FT_g relation sum_a [x_i^a, y_i^a] + sum_{j != i} t_ij + c t_ii = 0.
// The default makes string splitting a homomorphism; the literal sign is 2(g-1).
Rational ft_diagonal_coefficient(int genus);

struct DKAlgebra {
    DKKind kind = DKKind::Framed;
    int genus = 0;
    int strands = 0;
    PresentationSpec spec;
    PresentationPtr pres;
};

// t_n (i < j only), t_n^f, or t_{g,n}^f; all t_ij have degree 2, x and y degree 1
DKAlgebra dk_algebra(DKKind kind, int genus, int strands, int max_degree);

// Source strand i maps to target strands: i < k -> i, i > k -> i + m - 1, and strand k is
// replaced by the block J = {k, .., k + m - 1}.  m = 0 deletes strand k.
LieHomomorphism dk_compose(const DKAlgebra& src, int k, int m, const DKAlgebra& target);
// inclusion of the inserted algebra t_m^f: t_pq -> t_{k+p-1, k+q-1}
LieHomomorphism dk_insert(const DKAlgebra& inserted, int k, const DKAlgebra& target);

// d_k for 1 <= k <= n doubles strand k; d_0 prepends a strand, d_{n+1} appends one
LieHomomorphism string_split(const DKAlgebra& src, int k, const DKAlgebra& target);
LieHomomorphism string_delete(const DKAlgebra& src, int k, const DKAlgebra& target);

// Kernel presentations: k_{g,n} = ker s_n, h_{g,n} = ker(s_{n-1} s_n)
PresentationSpec kernel_k_spec(int genus, int n);
PresentationSpec kernel_h_spec(int genus, int n, DKKind kind = DKKind::Genus);

// The source of phi: g >= 1 uses h_{g,n+3} with the two diagonals killed, modulo [J, J] for
// J = <t_{(n+2)(n+3)}>; g = 0 uses the analogous subalgebra of t_{n+2}^f.
struct PhiSetup {
    PresentationPtr source;
    AlphabetPtr target_alphabet;  // surface alphabet (g, n)
    std::vector<ExtensionElement> images;
    std::string central_name;
};
PhiSetup phi_setup(int genus, int n, int max_degree);

struct PhiReport {
    bool pass = false;
    std::vector<long long> source_dims, target_dims, ranks;  // index 1..D
    std::string witness;
};
// relations -> 0 and bijection degreewise; corrupt doubles the image of the first t-generator
PhiReport verify_phi(int genus, int n, int max_degree, bool corrupt = false);

// 2 dim L_d + #words of degree d - 2
std::vector<long long> extension_dimensions(const Alphabet& alpha, int dmax);

}  // namespace gt
