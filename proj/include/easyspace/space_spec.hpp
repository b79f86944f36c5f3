#pragma once

#include "easyspace/partitions.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace easyspace {

/// An easy quantum group G_N ⊂ U_N^+ given by its category and matrix size.
struct GroupSpec {
    CategoryId category{};
    unsigned N = 1;

    /// "O+:4"
    std::string to_string() const;
    static GroupSpec parse(std::string_view text);

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Nonempty set of 1-based indices, kept sorted.
class IndexSet {
public:
    explicit IndexSet(std::vector<int> members);
    /// {1, ..., size}
    static IndexSet range(int size);
    /// "1,2,5"
    static IndexSet parse(std::string_view text);

    const std::vector<int>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(int i) const;
    int max() const { return members_.back(); }
    std::string to_string() const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<int> members_;
};

enum class IndexMode { Subset, DiagonalJ };

/// A coordinate of a product space: one 1-based index per factor.
using Coordinate = std::vector<int>;

/// Affine homogeneous space X_{G,I} over a product of easy quantum groups.
///
/// Subset mode: one factor, arbitrary I ⊂ {1..N}.
/// DiagonalJ mode: any number of factors, I = {(c,...,c) | c ∈ J}, J ⊂ {1..min N_r}.
/// For one factor both modes describe the same space.
class SpaceSpec {
public:
    static SpaceSpec subset(GroupSpec group, IndexSet indices);
    static SpaceSpec diagonal(std::vector<GroupSpec> factors, IndexSet j);

    /// "O+:5/I=1,2", "O:4xO:2/J=1,2", or a preset such as "free-real-sphere:5".
    static SpaceSpec parse(std::string_view text);

    const std::vector<GroupSpec>& factors() const { return factors_; }
    std::size_t factor_count() const { return factors_.size(); }
    IndexMode mode() const { return mode_; }
    const IndexSet& index_set() const { return indices_; }
    /// |I| (equal to |J| in diagonal mode).
    unsigned M() const { return static_cast<unsigned>(indices_.size()); }
    /// Π_r N_r
    unsigned long long ambient_dimension() const;
    unsigned min_factor_dimension() const;
    bool uses_colors() const;

    /// Checks that a coordinate has one in-range index per factor.
    void check_coordinate(const Coordinate& c) const;
    /// All coordinates, lexicographic.
    std::vector<Coordinate> coordinates() const;

    /// Canonical text form, accepted by parse().
    std::string to_string() const;

    friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;

private:
    SpaceSpec(std::vector<GroupSpec> factors, IndexMode mode, IndexSet indices);

    std::vector<GroupSpec> factors_;
    IndexMode mode_ = IndexMode::Subset;
    IndexSet indices_{std::vector<int>{1}};
};

std::string to_string(const Coordinate& c);

} // namespace easyspace
