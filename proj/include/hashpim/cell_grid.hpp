#pragma once

#include <cstdint>
#include <vector>

namespace hashpim {

/// Binary state of every cell of one crossbar plus a written-since-reset flag.
///
/// Values and flags are held twice: row-major (one bit per column in each row
/// word) for in-column gates and column-major for in-row gates. Writes go to
/// one layout and mark the touched 64x64 tiles stale in the other; stale tiles
/// are transposed across lazily before the other layout is read.
class CellGrid {
 public:
  CellGrid() = default;
  CellGrid(std::uint32_t rows, std::uint32_t cols);

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }

  bool get(std::uint32_t row, std::uint32_t col) const;
  bool initialized(std::uint32_t row, std::uint32_t col) const;
  void set(std::uint32_t row, std::uint32_t col, bool value);

  /// Clears all values and initialization flags.
  void reset();

  // Word views for the simulator. Callers must call the matching sync first and
  // report every write through mark_*_written.
  std::uint32_t row_words() const { return row_words_; }  // words per row (over columns)
  std::uint32_t col_words() const { return col_words_; }  // words per column (over rows)

  std::uint64_t* row_values(std::uint32_t row) { return &rv_[std::size_t{row} * row_words_]; }
  std::uint64_t* row_init(std::uint32_t row) { return &ri_[std::size_t{row} * row_words_]; }
  std::uint64_t* col_values(std::uint32_t col) { return &cv_[std::size_t{col} * col_words_]; }
  std::uint64_t* col_init(std::uint32_t col) { return &ci_[std::size_t{col} * col_words_]; }

  /// Brings the row-major (resp. column-major) layout up to date.
  void sync_row_major() const;
  void sync_col_major() const;

  /// `row` was written in row-major words [first_word, first_word + n) with the given mask.
  void mark_row_written(std::uint32_t row, std::uint32_t first_word, std::uint32_t n,
                        const std::uint64_t* mask);
  void mark_col_written(std::uint32_t col, std::uint32_t first_word, std::uint32_t n,
                        const std::uint64_t* mask);

  friend bool operator==(const CellGrid& a, const CellGrid& b);

 private:
  std::uint32_t tile_index(std::uint32_t tr, std::uint32_t tc) const { return tr * tile_cols_ + tc; }
  void transpose_tile_to_cols(std::uint32_t tile) const;
  void transpose_tile_to_rows(std::uint32_t tile) const;

  std::uint32_t rows_ = 0;
  std::uint32_t cols_ = 0;
  std::uint32_t row_words_ = 0;
  std::uint32_t col_words_ = 0;
  std::uint32_t tile_rows_ = 0;
  std::uint32_t tile_cols_ = 0;

  // Padded to whole tiles so every tile transpose is a full 64x64.
  mutable std::vector<std::uint64_t> rv_, ri_, cv_, ci_;
  // col_stale_: tile holds newer data in the row-major layout.
  mutable std::vector<std::uint8_t> col_stale_, row_stale_;
  mutable std::vector<std::uint32_t> col_stale_list_, row_stale_list_;
};

}  // namespace hashpim
