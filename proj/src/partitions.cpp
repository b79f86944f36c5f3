#include "easyspace/partitions.hpp"

#include <algorithm>
#include <numeric>

namespace easyspace {

namespace {

constexpr std::size_t max_legs = 255;

void check_legs(std::size_t size)
{
    if (size > max_legs)
        throw PreconditionError("partitions are limited to " + std::to_string(max_legs) + " legs");
}

// Restricted growth strings of a given length, lexicographic order.
template <typename Visit>
void for_each_rgs(std::size_t size, Visit&& visit)
{
    std::vector<std::uint8_t> labels(size, 0);
    std::vector<std::uint8_t> prefix_max(size, 0); // max label over labels[0..i]
    if (size == 0) {
        visit(labels);
        return;
    }
    while (true) {
        visit(labels);
        // Increment the rightmost position that may still grow.
        std::size_t i = size - 1;
        while (i > 0 && labels[i] > prefix_max[i - 1])
            --i;
        if (i == 0)
            return;
        ++labels[i];
        prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
        for (std::size_t j = i + 1; j < size; ++j) {
            labels[j] = 0;
            prefix_max[j] = prefix_max[j - 1];
        }
    }
}

// Pairings, generated by pairing the first free leg with each later free leg.
void pairings_rec(std::vector<int>& labels, int next_label, std::vector<std::vector<int>>& out)
{
    auto first_free = std::find(labels.begin(), labels.end(), -1);
    if (first_free == labels.end()) {
        out.push_back(labels);
        return;
    }
    *first_free = next_label;
    for (auto it = first_free + 1; it != labels.end(); ++it) {
        if (*it != -1)
            continue;
        *it = next_label;
        pairings_rec(labels, next_label + 1, out);
        *it = -1;
    }
    *first_free = -1;
}

SetPartition from_rgs(const std::vector<std::uint8_t>& rgs)
{
    std::vector<int> labels(rgs.begin(), rgs.end());
    return SetPartition::from_labels(labels);
}

} // namespace

// ---------------------------------------------------------------------------
// ColoredWord

ColoredWord ColoredWord::parse(std::string_view text)
{
    std::vector<Color> colors;
    colors.reserve(text.size());
    for (char c : text) {
        if (c == 'o')
            colors.push_back(Color::White);
        else if (c == 'b')
            colors.push_back(Color::Black);
        else
            throw PreconditionError("colored words use 'o' (white) and 'b' (black), got '" + std::string(text) + "'");
    }
    return ColoredWord(std::move(colors));
}

ColoredWord ColoredWord::all_white(std::size_t length)
{
    return ColoredWord(std::vector<Color>(length, Color::White));
}

ColoredWord ColoredWord::alternating(std::size_t length)
{
    std::vector<Color> colors(length);
    for (std::size_t i = 0; i < length; ++i)
        colors[i] = i % 2 == 0 ? Color::White : Color::Black;
    return ColoredWord(std::move(colors));
}

std::vector<ColoredWord> ColoredWord::all_of_length(std::size_t length)
{
    if (length >= 31)
        throw PreconditionError("word length too large to enumerate");
    std::vector<ColoredWord> words;
    const std::size_t count = std::size_t{1} << length;
    words.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<Color> colors(length);
        for (std::size_t i = 0; i < length; ++i)
            colors[i] = (mask >> (length - 1 - i)) & 1 ? Color::Black : Color::White;
        words.emplace_back(std::move(colors));
    }
    return words;
}

std::string ColoredWord::to_string() const
{
    std::string s;
    s.reserve(colors_.size());
    for (Color c : colors_)
        s.push_back(c == Color::White ? 'o' : 'b');
    return s;
}

ColoredWord operator+(const ColoredWord& a, const ColoredWord& b)
{
    std::vector<Color> colors = a.colors_;
    colors.insert(colors.end(), b.colors_.begin(), b.colors_.end());
    return ColoredWord(std::move(colors));
}

// ---------------------------------------------------------------------------
// SetPartition

SetPartition SetPartition::from_labels(std::span<const int> labels)
{
    check_legs(labels.size());
    SetPartition p;
    p.labels_.resize(labels.size());
    std::vector<std::pair<int, std::uint8_t>> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& e) { return e.first == labels[i]; });
        if (it == seen.end()) {
            seen.emplace_back(labels[i], static_cast<std::uint8_t>(seen.size()));
            p.labels_[i] = seen.back().second;
        } else {
            p.labels_[i] = it->second;
        }
    }
    p.blocks_ = seen.size();
    return p;
}

SetPartition SetPartition::from_blocks(std::size_t size, const std::vector<std::vector<int>>& blocks)
{
    check_legs(size);
    std::vector<int> labels(size, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw PreconditionError("partition blocks must be nonempty");
        for (int leg : blocks[b]) {
            if (leg < 0 || static_cast<std::size_t>(leg) >= size)
                throw PreconditionError("partition leg out of range");
            if (labels[leg] != -1)
                throw PreconditionError("partition blocks must be disjoint");
            labels[leg] = static_cast<int>(b);
        }
    }
    if (std::find(labels.begin(), labels.end(), -1) != labels.end())
        throw PreconditionError("partition blocks must cover every leg");
    return from_labels(labels);
}

SetPartition SetPartition::parse(std::string_view text)
{
    std::vector<std::vector<int>> blocks;
    const bool comma_form = text.find(',') != std::string_view::npos;
    std::size_t max_leg = 0;
    std::size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
        auto bar = text.find('|', pos);
        std::string_view part = text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
        std::vector<int> block;
        if (comma_form) {
            std::size_t q = 0;
            while (q <= part.size()) {
                auto comma = part.find(',', q);
                std::string_view num = part.substr(q, comma == std::string_view::npos ? std::string_view::npos : comma - q);
                if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return c >= '0' && c <= '9'; }))
                    throw PreconditionError("malformed partition '" + std::string(text) + "'");
                block.push_back(std::stoi(std::string(num)));
                if (comma == std::string_view::npos)
                    break;
                q = comma + 1;
            }
        } else {
            for (char c : part) {
                if (c < '1' || c > '9')
                    throw PreconditionError("malformed partition '" + std::string(text) + "'");
                block.push_back(c - '0');
            }
        }
        if (block.empty())
            throw PreconditionError("empty block in partition '" + std::string(text) + "'");
        for (int& leg : block) {
            if (leg < 1)
                throw PreconditionError("partition legs are 1-based");
            max_leg = std::max<std::size_t>(max_leg, static_cast<std::size_t>(leg));
            --leg;
        }
        blocks.push_back(std::move(block));
        if (bar == std::string_view::npos)
            break;
        pos = bar + 1;
    }
    return from_blocks(max_leg, blocks);
}

SetPartition SetPartition::discrete(std::size_t size)
{
    std::vector<int> labels(size);
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(labels);
}

SetPartition SetPartition::one_block(std::size_t size)
{
    std::vector<int> labels(size, 0);
    return from_labels(labels);
}

std::vector<std::vector<int>> SetPartition::blocks() const
{
    std::vector<std::vector<int>> out(blocks_);
    for (std::size_t i = 0; i < labels_.size(); ++i)
        out[labels_[i]].push_back(static_cast<int>(i));
    return out;
}

std::string SetPartition::to_string() const
{
    const bool comma_form = labels_.size() > 9;
    std::string s;
    bool first_block = true;
    for (const auto& block : blocks()) {
        if (!first_block)
            s.push_back('|');
        first_block = false;
        bool first_leg = true;
        for (int leg : block) {
            if (comma_form && !first_leg)
                s.push_back(',');
            first_leg = false;
            s += std::to_string(leg + 1);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Categories

std::string to_string(CategoryId category)
{
    switch (category) {
    case CategoryId::S: return "S";
    case CategoryId::O: return "O";
    case CategoryId::U: return "U";
    case CategoryId::SPlus: return "S+";
    case CategoryId::OPlus: return "O+";
    case CategoryId::UPlus: return "U+";
    }
    return "?";
}

CategoryId parse_category(std::string_view text)
{
    for (CategoryId c : all_categories)
        if (text == to_string(c))
            return c;
    throw PreconditionError("unknown category '" + std::string(text) + "' (expected S, O, U, S+, O+, U+)");
}

bool is_free(CategoryId category)
{
    return category == CategoryId::SPlus || category == CategoryId::OPlus || category == CategoryId::UPlus;
}

bool uses_colors(CategoryId category)
{
    return category == CategoryId::U || category == CategoryId::UPlus;
}

CategoryId free_version(CategoryId category)
{
    switch (category) {
    case CategoryId::S: return CategoryId::SPlus;
    case CategoryId::O: return CategoryId::OPlus;
    case CategoryId::U: return CategoryId::UPlus;
    default: return category;
    }
}

bool is_noncrossing(const SetPartition& p)
{
    const auto& labels = p.labels();
    std::vector<std::size_t> last(p.block_count(), 0);
    for (std::size_t i = 0; i < labels.size(); ++i)
        last[labels[i]] = i;
    std::vector<bool> open(p.block_count(), false);
    std::vector<std::uint8_t> stack;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto b = labels[i];
        if (open[b]) {
            if (stack.back() != b)
                return false;
        } else {
            open[b] = true;
            stack.push_back(b);
        }
        if (last[b] == i)
            stack.pop_back();
    }
    return true;
}

bool is_pairing(const SetPartition& p)
{
    std::vector<int> sizes(p.block_count(), 0);
    for (auto l : p.labels())
        ++sizes[l];
    return std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 2; });
}

bool is_matching_pairing(const SetPartition& p, const ColoredWord& word)
{
    if (p.size() != word.size())
        throw PreconditionError("partition size does not match word length");
    if (!is_pairing(p))
        return false;
    for (const auto& block : p.blocks())
        if (word[block[0]] == word[block[1]])
            return false;
    return true;
}

bool is_member(CategoryId category, const ColoredWord& word, const SetPartition& p)
{
    if (p.size() != word.size())
        throw PreconditionError("partition size does not match word length");
    switch (category) {
    case CategoryId::S: return true;
    case CategoryId::SPlus: return is_noncrossing(p);
    case CategoryId::O: return is_pairing(p);
    case CategoryId::OPlus: return is_pairing(p) && is_noncrossing(p);
    case CategoryId::U: return is_matching_pairing(p, word);
    case CategoryId::UPlus: return is_matching_pairing(p, word) && is_noncrossing(p);
    }
    return false;
}

std::vector<SetPartition> enumerate_partitions(CategoryId category, const ColoredWord& word)
{
    check_legs(word.size());
    std::vector<SetPartition> out;
    if (category == CategoryId::S || category == CategoryId::SPlus) {
        for_each_rgs(word.size(), [&](const std::vector<std::uint8_t>& rgs) {
            SetPartition p = from_rgs(rgs);
            if (category == CategoryId::S || is_noncrossing(p))
                out.push_back(std::move(p));
        });
        return out;
    }
    if (word.size() % 2 != 0)
        return out;
    std::vector<int> labels(word.size(), -1);
    std::vector<std::vector<int>> raw;
    pairings_rec(labels, 0, raw);
    for (const auto& l : raw) {
        SetPartition p = SetPartition::from_labels(l);
        if (is_member(category, word, p))
            out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SetPartition> enumerate_intersection(std::span<const CategoryId> categories, const ColoredWord& word)
{
    if (categories.empty())
        throw PreconditionError("at least one category is required");
    // Start from the smallest-looking candidate set and filter.
    std::vector<SetPartition> out = enumerate_partitions(categories[0], word);
    std::erase_if(out, [&](const SetPartition& p) {
        return !std::all_of(categories.begin(), categories.end(),
                            [&](CategoryId c) { return is_member(c, word, p); });
    });
    return out;
}

bool delta(const SetPartition& p, std::span<const int> indices)
{
    if (indices.size() != p.size())
        throw PreconditionError("delta: index tuple length " + std::to_string(indices.size()) +
                                " does not match partition size " + std::to_string(p.size()));
    const auto& labels = p.labels();
    std::vector<int> value(p.block_count());
    std::vector<bool> set(p.block_count(), false);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto b = labels[i];
        if (!set[b]) {
            set[b] = true;
            value[b] = indices[i];
        } else if (value[b] != indices[i]) {
            return false;
        }
    }
    return true;
}

SetPartition join(const SetPartition& a, const SetPartition& b)
{
    if (a.size() != b.size())
        throw PreconditionError("join: partitions have different ground sizes");
    const std::size_t n = a.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite_blocks = [&](const SetPartition& p) {
        std::vector<int> first(p.block_count(), -1);
        for (std::size_t i = 0; i < n; ++i) {
            const auto l = p.labels()[i];
            if (first[l] == -1) {
                first[l] = static_cast<int>(i);
            } else {
                int r1 = find(first[l]);
                int r2 = find(static_cast<int>(i));
                if (r1 != r2)
                    parent[std::max(r1, r2)] = std::min(r1, r2);
            }
        }
    };
    unite_blocks(a);
    unite_blocks(b);
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[i] = find(static_cast<int>(i));
    return SetPartition::from_labels(labels);
}

SetPartition concatenate(const SetPartition& a, const SetPartition& b)
{
    std::vector<int> labels;
    labels.reserve(a.size() + b.size());
    for (auto l : a.labels())
        labels.push_back(l);
    const int offset = static_cast<int>(a.block_count());
    for (auto l : b.labels())
        labels.push_back(offset + l);
    return SetPartition::from_labels(labels);
}

} // namespace easyspace
