#pragma once

// Exact rational matrices, Gram matrices of partition vectors and their
// (generalized) inverses, the Weingarten matrices.

#include "easyspace/partitions.hpp"
#include "easyspace/rational.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace easyspace {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalMatrix transpose() const;
    RationalMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(std::size_t dependent_row);
    /// First row (0-based) that lies in the span of the rows before it.
    std::size_t dependent_row() const { return dependent_row_; }

private:
    std::size_t dependent_row_;
};

/// Exact inverse by fraction-free Gauss-Jordan elimination (Bareiss).
/// Throws SingularMatrixError for singular input, PreconditionError for non-square input.
RationalMatrix solve_inverse(const RationalMatrix& matrix);

/// Greedy scan in row order: row r is kept iff it is independent of the rows
/// kept before it. Decided by fraction-free elimination on integer-scaled rows.
std::vector<std::size_t> independent_rows(const RationalMatrix& matrix);

struct GramMatrix {
    CategoryId category{};
    ColoredWord word;
    unsigned N = 0;
    /// enumerate_partitions(category, word), in that order.
    std::vector<SetPartition> index;
    /// entries(p, q) = N^{|index[p] v index[q]|}
    RationalMatrix entries;
};

GramMatrix gram_matrix(CategoryId category, const ColoredWord& word, unsigned N);

struct WeingartenMatrix {
    GramMatrix source;
    /// Positions into source.index, ascending. Full index when the Gram matrix is invertible.
    std::vector<std::size_t> basis;
    /// Full index x index; zero outside basis x basis, where it inverts the Gram restriction.
    RationalMatrix entries;

    bool invertible() const { return basis.size() == source.index.size(); }
};

WeingartenMatrix weingarten_matrix(const GramMatrix& gram);

/// Memoized Weingarten matrices keyed by (category, word, N). Colors are
/// dropped from the key for categories that ignore them. Readers share a lock;
/// a missing entry is computed outside the lock and inserted if still absent,
/// so concurrent misses may duplicate work but always agree on the value.
///
/// With a directory set, entries are also persisted as JSON records with
/// "p/q" fraction strings. Loaded records are only trusted after G W G = G and
/// W G W = W are re-checked against a freshly built Gram matrix.
class WeingartenCache {
public:
    using Handle = std::shared_ptr<const WeingartenMatrix>;

    Handle get(CategoryId category, const ColoredWord& word, unsigned N);

    void set_directory(std::optional<std::filesystem::path> directory);
    const std::optional<std::filesystem::path>& directory() const { return directory_; }

    std::size_t size() const;
    void clear();

    /// Number of records rejected on load since construction.
    std::size_t rejected_records() const;

    /// The process-wide cache used by the integrator.
    static WeingartenCache& global();

    static std::string record_file_name(CategoryId category, const ColoredWord& word, unsigned N);

private:
    using Key = std::tuple<CategoryId, std::string, unsigned>;

    Handle load_record(CategoryId category, const ColoredWord& word, unsigned N);
    void store_record(const WeingartenMatrix& w) const;

    mutable std::shared_mutex mutex_;
    std::map<Key, Handle> entries_;
    std::optional<std::filesystem::path> directory_;
    std::size_t rejected_ = 0;
};

/// Key word for a category: all-white when the category ignores colors.
ColoredWord cache_word(CategoryId category, const ColoredWord& word);

} // namespace easyspace
