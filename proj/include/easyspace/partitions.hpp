#pragma once

// Colored set partitions and the six easy categories S, O, U, S+, O+, U+.
//
// Only partitions with all legs on one row are modelled (the sets D(k) that
// index fixed vectors of u^{⊗k}). A partition is stored as its restricted
// growth string: label[i] is the block of leg i, blocks numbered in order of
// first appearance. Canonical ordering is lexicographic on that string.

#include "easyspace/rational.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace easyspace {

enum class Color : std::uint8_t { White, Black };

/// A sequence of colors; text form over {o, b} ("o" white, "b" black).
class ColoredWord {
public:
    ColoredWord() = default;
    explicit ColoredWord(std::vector<Color> colors) : colors_(std::move(colors)) {}

    static ColoredWord parse(std::string_view text);
    static ColoredWord all_white(std::size_t length);
    /// o b o b ...
    static ColoredWord alternating(std::size_t length);
    /// Every word of the given length, in lexicographic order with o < b.
    static std::vector<ColoredWord> all_of_length(std::size_t length);

    std::size_t size() const { return colors_.size(); }
    bool empty() const { return colors_.empty(); }
    Color operator[](std::size_t i) const { return colors_[i]; }
    const std::vector<Color>& colors() const { return colors_; }

    std::string to_string() const;

    friend ColoredWord operator+(const ColoredWord& a, const ColoredWord& b);
    friend bool operator==(const ColoredWord&, const ColoredWord&) = default;
    friend auto operator<=>(const ColoredWord&, const ColoredWord&) = default;

private:
    std::vector<Color> colors_;
};

class SetPartition {
public:
    /// The empty partition of zero legs.
    SetPartition() = default;

    /// Any labelling works; it is relabelled to restricted-growth form.
    static SetPartition from_labels(std::span<const int> labels);
    /// Blocks with 0-based legs; must be disjoint and cover 0..size-1.
    static SetPartition from_blocks(std::size_t size, const std::vector<std::vector<int>>& blocks);
    /// "12|34" (1-based legs). Above nine legs, elements are comma separated: "1,10|2,3,...".
    static SetPartition parse(std::string_view text);

    static SetPartition discrete(std::size_t size);
    static SetPartition one_block(std::size_t size);

    std::size_t size() const { return labels_.size(); }
    std::size_t block_count() const { return blocks_; }
    const std::vector<std::uint8_t>& labels() const { return labels_; }
    /// Blocks sorted by their minimum, legs 0-based and ascending.
    std::vector<std::vector<int>> blocks() const;

    std::string to_string() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.labels_ == b.labels_; }
    friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b)
    {
        return a.labels_ <=> b.labels_;
    }

private:
    std::vector<std::uint8_t> labels_;
    std::size_t blocks_ = 0;
};

enum class CategoryId : std::uint8_t { S, O, U, SPlus, OPlus, UPlus };

inline constexpr CategoryId all_categories[] = {CategoryId::S, CategoryId::O, CategoryId::U,
                                                CategoryId::SPlus, CategoryId::OPlus, CategoryId::UPlus};

std::string to_string(CategoryId category);
/// "S", "O", "U", "S+", "O+", "U+".
CategoryId parse_category(std::string_view text);

bool is_free(CategoryId category);
/// Only the unitary-type categories look at leg colors.
bool uses_colors(CategoryId category);
CategoryId free_version(CategoryId category);

bool is_noncrossing(const SetPartition& p);
bool is_pairing(const SetPartition& p);
/// A pairing whose every pair joins one white and one black leg.
bool is_matching_pairing(const SetPartition& p, const ColoredWord& word);

bool is_member(CategoryId category, const ColoredWord& word, const SetPartition& p);

/// D(word) for the category, in canonical order.
std::vector<SetPartition> enumerate_partitions(CategoryId category, const ColoredWord& word);

/// Intersection of D_r(word) over all listed categories, canonical order.
std::vector<SetPartition> enumerate_intersection(std::span<const CategoryId> categories,
                                                 const ColoredWord& word);

/// 1 iff the indices are constant on every block.
bool delta(const SetPartition& p, std::span<const int> indices);

/// Finest partition coarser than both (connected components of the union of blocks).
SetPartition join(const SetPartition& a, const SetPartition& b);

/// Side-by-side placement: legs of `b` are appended after those of `a`.
SetPartition concatenate(const SetPartition& a, const SetPartition& b);

inline std::size_t block_count(const SetPartition& p) { return p.block_count(); }

} // namespace easyspace
