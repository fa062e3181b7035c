#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cobordism/ring.hpp"

namespace cobordism {

/// Integer combination of a model's codimension-1 generators.
using LinearForm = std::vector<long>;

/// A variety in the catalog. MultiProj with no factors is a point.
struct VarietySpec {
    enum class Kind { MultiProj, ProjBundle, Product, Disjoint };

    Kind kind = Kind::MultiProj;
    std::vector<int> dims;                       // MultiProj factor dimensions
    std::shared_ptr<const VarietySpec> base;     // ProjBundle base
    std::vector<LinearForm> lines;               // ProjBundle: c1 of the summands, over the base generators
    int minus_trivial = 0;                       // ProjBundle: V = sum of lines minus this many trivial bundles
    std::vector<VarietySpec> parts;              // Product factors / Disjoint components

    static VarietySpec point() { return {}; }
    static VarietySpec multiproj(std::vector<int> dims);
    static VarietySpec projective_space(int n) { return multiproj({n}); }
    static VarietySpec projbundle(VarietySpec base, std::vector<LinearForm> lines, int minus_trivial = 0);
    static VarietySpec product(std::vector<VarietySpec> factors);
    static VarietySpec disjoint(std::vector<VarietySpec> components);

    /// Connected pieces (products distribute over disjoint unions).
    [[nodiscard]] std::vector<VarietySpec> components() const;
    [[nodiscard]] bool is_connected() const;
    /// Dimension of a connected spec; for disjoint unions, throws unless all pieces agree.
    [[nodiscard]] int dimension() const;
    /// Number of codimension-1 generators of the model of a connected spec.
    [[nodiscard]] int generator_count() const;
    /// Canonical text form, e.g. "P(2)", "P(1,1)", "PB[P(1);0|1]".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const VarietySpec& a, const VarietySpec& b) { return a.to_string() == b.to_string(); }
};

/// Chow ring of a connected catalog variety: generators g_1..g_k of codimension 1,
/// one relation g_j^{e_j} = (polynomial with lower g_j-degree) per generator, and
/// the finite basis of reduced monomials. Immutable; copies share data.
class ChowModel {
public:
    using Exps = std::vector<int>;

    [[nodiscard]] int dimension() const;
    [[nodiscard]] int generator_count() const;
    [[nodiscard]] const std::vector<std::string>& generator_names() const;
    [[nodiscard]] std::size_t rank() const;
    [[nodiscard]] const Exps& basis_monomial(std::size_t i) const;
    [[nodiscard]] int codim(std::size_t i) const;
    /// Basis indices in codimension c.
    [[nodiscard]] std::vector<std::size_t> basis_in_codim(int c) const;
    /// deg of the unique top-codimension basis monomial (+-1).
    [[nodiscard]] int top_sign() const;
    [[nodiscard]] std::size_t top_index() const;
    /// Sparse product table: basis_i * basis_j = sum c_k basis_k.
    [[nodiscard]] const std::vector<std::pair<std::size_t, mpz_class>>& product(std::size_t i, std::size_t j) const;
    /// Index of a reduced monomial, or rank() if it is not a basis monomial.
    [[nodiscard]] std::size_t index_of(const Exps& e) const;
    /// Basis expansion of an arbitrary monomial in the generators.
    [[nodiscard]] std::vector<std::pair<std::size_t, mpz_class>> reduce(const Exps& e) const;
    /// Relation g^cap = rhs for generator g (rhs is a polynomial in the generators).
    [[nodiscard]] int relation_cap(std::size_t g) const;
    [[nodiscard]] const std::map<Exps, mpz_class>& relation_rhs(std::size_t g) const;

    [[nodiscard]] const VarietySpec& spec() const;
    /// For projective bundles: the base model, the bundle rank and the index of zeta = c1(O(-1)).
    [[nodiscard]] bool is_projective_bundle() const;
    [[nodiscard]] const ChowModel& bundle_base() const;
    [[nodiscard]] int bundle_rank() const;
    [[nodiscard]] int zeta_index() const;

    friend bool operator==(const ChowModel& a, const ChowModel& b) { return a.data_ == b.data_; }

    struct Data;

private:
    friend ChowModel build_model(const VarietySpec& spec);
    std::shared_ptr<const Data> data_;
};

/// Builds (and caches) the Chow model of a connected spec. Throws std::invalid_argument
/// for malformed specs (negative rank, disconnected input, non-vanishing Chern classes
/// above the rank of a virtual bundle, ...).
ChowModel build_model(const VarietySpec& spec);

/// A Chow class with coefficients in a Domain, dense over the model's basis.
class ChowElement {
public:
    ChowElement(ChowModel m, Domain d);
    static ChowElement one(const ChowModel& m, const Domain& d);
    static ChowElement generator(const ChowModel& m, const Domain& d, int g);
    static ChowElement from_linear_form(const ChowModel& m, const Domain& d, const LinearForm& f);
    static ChowElement from_monomial(const ChowModel& m, const Domain& d, const ChowModel::Exps& e);

    [[nodiscard]] const ChowModel& model() const { return model_; }
    [[nodiscard]] const Domain& domain() const { return domain_; }
    [[nodiscard]] const std::vector<RingElement>& coeffs() const { return c_; }
    [[nodiscard]] const RingElement& operator[](std::size_t i) const { return c_[i]; }
    void add_to(std::size_t i, const RingElement& v);
    [[nodiscard]] bool is_zero() const;

    /// Part of codimension exactly c.
    [[nodiscard]] ChowElement codim_part(int c) const;
    /// True if every nonzero basis coefficient sits in codimension c.
    [[nodiscard]] bool is_homogeneous(int c) const;

    ChowElement& operator+=(const ChowElement& o);
    ChowElement& operator-=(const ChowElement& o);
    friend ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
    friend ChowElement operator-(ChowElement a, const ChowElement& b) { return a -= b; }
    friend ChowElement operator-(const ChowElement& a);
    friend ChowElement operator*(const ChowElement& a, const ChowElement& b);
    friend bool operator==(const ChowElement& a, const ChowElement& b);
    [[nodiscard]] ChowElement scaled(const RingElement& c) const;
    [[nodiscard]] ChowElement map_coefficients(const std::function<RingElement(const RingElement&)>& fn,
                                               const Domain& target) const;
    /// Integer element viewed in another domain (coefficient c -> c * 1).
    [[nodiscard]] ChowElement to_domain(const Domain& target) const;

    [[nodiscard]] std::string to_string() const;

private:
    void check_same(const ChowElement& o) const;
    ChowModel model_;
    Domain domain_;
    std::vector<RingElement> c_;
};

ChowElement pow(const ChowElement& a, unsigned e);

/// Pushforward to the point: coefficient of the top basis monomial times its degree;
/// classes of lower codimension push forward to 0.
RingElement degree(const ChowElement& u);

/// p_* for p: P(V) -> S, where u lives on the bundle model. Uses p_*(xi^j) = c_{j+1-r}(-V)
/// after reduction to the basis {base monomial * zeta^e, e < r}.
ChowElement pushforward_projbundle(const ChowElement& u);

/// Pullback of a base class along P(V) -> S.
ChowElement pullback_projbundle(const ChowModel& bundle, const ChowElement& base_class);

/// A split virtual bundle: sum of plus lines + plus_trivial - minus lines - minus_trivial.
struct VirtualSplitBundle {
    ChowModel model;
    std::vector<LinearForm> plus_lines;
    std::vector<LinearForm> minus_lines;
    int plus_trivial = 0;
    int minus_trivial = 0;

    explicit VirtualSplitBundle(ChowModel m) : model(std::move(m)) {}
    static VirtualSplitBundle trivial(const ChowModel& m, int rank);
    static VirtualSplitBundle lines(const ChowModel& m, std::vector<LinearForm> ls);

    [[nodiscard]] int rank() const;
    [[nodiscard]] VirtualSplitBundle negated() const;
    VirtualSplitBundle& operator+=(const VirtualSplitBundle& o);
    friend VirtualSplitBundle operator+(VirtualSplitBundle a, const VirtualSplitBundle& b) { return a += b; }
    /// Tensor product with a line bundle of first Chern class l.
    [[nodiscard]] VirtualSplitBundle twisted(const LinearForm& l) const;
    /// Ordinary total Chern class over Z.
    [[nodiscard]] ChowElement chern_total() const;
    /// c_i over Z.
    [[nodiscard]] ChowElement chern(int i) const;
};

/// Linear form of xi = c1(O(1)) = -zeta on a projective bundle model.
LinearForm xi_form(const ChowModel& bundle);

/// Pads a linear form over a sub-model's generators into a model with more generators,
/// placing it at the given offset.
LinearForm embed_form(const LinearForm& f, int offset, int total);

/// Split virtual tangent bundle of a connected spec on its model.
VirtualSplitBundle tangent_bundle(const VarietySpec& spec);

}  // namespace cobordism
