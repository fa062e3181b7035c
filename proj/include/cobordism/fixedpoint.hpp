#pragma once

#include <map>
#include <string>
#include <vector>

#include "cobordism/chow.hpp"
#include "cobordism/partition.hpp"
#include "cobordism/ring.hpp"

namespace cobordism {

/// A fixed component with its normal bundle, a split bundle on build_model(spec).
/// Minus lines are not allowed; a trivial minus part is (the normal bundle of a
/// diagonal is the virtual tangent bundle).
struct FixedComponent {
    VarietySpec spec;
    int codim = 0;
    VirtualSplitBundle normal;
};

/// Ambient variety with the fixed locus of an involution, given as data.
struct MuTwoActionModel {
    std::string name;
    VarietySpec ambient;
    std::vector<FixedComponent> components;

    [[nodiscard]] int dimension() const { return ambient.dimension(); }
    /// Largest component dimension, or -1 for an empty fixed locus.
    [[nodiscard]] int fixed_dimension() const;
    /// Throws std::invalid_argument when the invariants fail.
    void validate() const;
};

/// Component with a split normal bundle given by line classes and a trivial rank.
FixedComponent make_component(const VarietySpec& spec, int codim, std::vector<LinearForm> normal_lines,
                              int normal_trivial_rank);

MuTwoActionModel linear_pn(int n, int a);
MuTwoActionModel factorwise_p1n(int n);
MuTwoActionModel swap_square(const VarietySpec& spec);

/// P(N + 1) over a component, as a catalog spec, and N + 1 as a bundle.
VarietySpec completion_spec(const FixedComponent& c);
VirtualSplitBundle completion_bundle(const FixedComponent& c);

enum class Status { Pass, Fail, HypothesisNotMet };

std::string status_name(Status s);

struct CheckRecord {
    std::string id;
    std::string reference;
    std::string relation;  // e.g. "equal in F2[b]", "congruent mod 4"
    Status status = Status::Pass;
    RingElement lhs;
    RingElement rhs;
    std::string note;

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Report {
    std::string command;
    std::vector<CheckRecord> records;

    [[nodiscard]] bool ok() const;
    void add(CheckRecord r) { records.push_back(std::move(r)); }
    void append(const Report& other);

    friend bool operator==(const Report&, const Report&) = default;
};

/// Polynomial in y_1, y_2, ... (weight of y_i is i): key mu stands for y_{mu_1} y_{mu_2} ...
using ChernPolynomial = std::map<Partition, mpz_class>;

/// max_m < 0 checks every m from 0 to dim X.
Report verify_l2_relations(const MuTwoActionModel& action, int max_m = -1);
Report verify_trivial_normal(const MuTwoActionModel& action);
/// Both forms of the Kosniowski-Stong congruence for one partition (|alpha| <= n).
Report verify_ks(const MuTwoActionModel& action, const Partition& alpha);
/// The polynomial form for an arbitrary f of weighted degree <= n.
Report verify_ks_polynomial(const MuTwoActionModel& action, const ChernPolynomial& f);
/// All partitions with |alpha| <= n.
Report verify_ks_all(const MuTwoActionModel& action);
/// order 0 picks dim + 3; max_dim bounds the ambient dimension.
Report verify_lmod2(const MuTwoActionModel& action, int order = 0, int max_dim = 4);
Report verify_euler(const MuTwoActionModel& action);
Report verify_additive(const MuTwoActionModel& action);
Report verify_decomposable(const MuTwoActionModel& action);

}  // namespace cobordism
