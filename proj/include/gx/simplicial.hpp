#pragma once

#include "gx/matrix.hpp"

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace gx {

// A simplex is a strictly increasing tuple of vertex indices.
using Simplex = std::vector<int>;

// Finite simplicial complex with a total vertex order (the listing order).
// Closed under faces by construction; simplex lists per dimension are sorted
// lexicographically so that indices are reproducible.
class OrderedComplex {
public:
    // Builds the closure of the given simplices.  Vertex tuples must be
    // strictly increasing with respect to the listing order of `vertices`.
    static std::shared_ptr<const OrderedComplex> build(std::string name, std::vector<std::string> vertices,
                                                       const std::vector<Simplex>& simplices);

    const std::string& name() const { return name_; }
    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    const std::string& vertex_name(int i) const { return vertex_names_[i]; }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    // -1 when the name is unknown.
    int vertex_index(const std::string& name) const;

    int top_dim() const { return static_cast<int>(simplices_.size()) - 1; }
    int simplex_count(int dim) const {
        return (dim < 0 || dim > top_dim()) ? 0 : static_cast<int>(simplices_[dim].size());
    }
    const std::vector<Simplex>& simplices(int dim) const;
    const Simplex& simplex(int dim, int idx) const { return simplices_[dim][idx]; }
    // -1 when absent.
    int index_of(const Simplex& s) const;
    bool has_simplex(const Simplex& s) const { return index_of(s) >= 0; }

    std::string simplex_to_string(const Simplex& s) const;

    // Cycles attached by `cycle` lines of the input, one term per tuple.
    using RawChain = std::vector<std::pair<int, Simplex>>;
    const std::vector<RawChain>& attached_cycles() const { return attached_cycles_; }

private:
    friend std::shared_ptr<const OrderedComplex> parse_complex(const std::string&);
    OrderedComplex() = default;

    std::string name_;
    std::vector<std::string> vertex_names_;
    std::unordered_map<std::string, int> vertex_index_;
    std::vector<std::vector<Simplex>> simplices_;
    std::vector<std::map<Simplex, int>> index_;
    std::vector<RawChain> attached_cycles_;
};

using ComplexPtr = std::shared_ptr<const OrderedComplex>;

// Integer chain with unbounded coefficients.
class SignedChain {
public:
    SignedChain(ComplexPtr cx, int degree) : cx_(std::move(cx)), degree_(degree) {}

    const ComplexPtr& complex() const { return cx_; }
    int degree() const { return degree_; }
    const std::map<int, Int>& terms() const { return terms_; }

    Int coefficient(int idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? Int(0) : it->second;
    }
    void add(int idx, const Int& c);
    void set(int idx, const Int& c);

    // Simplicial boundary; zero chain in degree 0.
    SignedChain boundary() const;
    bool is_zero() const { return terms_.empty(); }

private:
    ComplexPtr cx_;
    int degree_;
    std::map<int, Int> terms_;
};

// Ordered simplicial map: vertex images are non-decreasing on every simplex
// and the distinct images of a simplex span a simplex of the target.
class SimplicialMap {
public:
    SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<int> vertex_map);

    const ComplexPtr& source() const { return source_; }
    const ComplexPtr& target() const { return target_; }
    int vertex_image(int v) const { return vertex_map_[v]; }

    // Image tuple (non-decreasing, possibly with repeats).
    Simplex image_tuple(const Simplex& s) const;
    // True when all vertex images are distinct.
    bool nondegenerate_on(const Simplex& s) const;

private:
    ComplexPtr source_, target_;
    std::vector<int> vertex_map_;
};

// Parses the line-based complex format:
//   complex <name> / vertex <id> / simplex <id> <id> ... / cycle <sign><id,...> ...
// '#' starts a comment.  Errors carry 1-based line numbers.
std::shared_ptr<const OrderedComplex> parse_complex(const std::string& text);
std::string emit_complex(const OrderedComplex& x);

// Matrix of the coboundary C^k -> C^{k+1}: entry (sigma, tau) is (-1)^i when
// tau is the i-th face of sigma (omit vertex i), else 0.  Rows are indexed by
// (k+1)-simplices, columns by k-simplices.
IntMat coboundary_matrix(const OrderedComplex& x, int k);

// Fundamental cycle of a closed oriented pseudo-manifold: +-1 coefficients
// propagated across shared codimension-1 faces.  A cycle attached to the
// input overrides the computation and is validated instead.  Throws when the
// complex is not a closed pseudo-manifold or not orientable.
SignedChain fundamental_cycle(const ComplexPtr& x);

struct Subdivision {
    ComplexPtr complex;       // barycentric subdivision X'
    std::vector<int> vertex_to_simplex_dim;   // X' vertex -> dim of underlying simplex
    std::vector<int> vertex_to_simplex_idx;   // X' vertex -> index of underlying simplex
    std::shared_ptr<SimplicialMap> projection;  // canonical X' -> X
};

// Vertices of X' are the simplices of X ordered by (dimension, vertex tuple);
// simplices of X' are flags of faces.  The canonical projection sends the
// barycenter of a simplex to its greatest vertex.
Subdivision barycentric_subdivision(const ComplexPtr& x);

}  // namespace gx
