#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace hashpim {

/// Immutable set of line indices (rows or columns) stored as a word span.
/// Copies share storage, so one set can back thousands of gate ops.
class LineSet {
 public:
  LineSet() = default;

  static LineSet single(std::uint32_t line);
  /// Lines [first, last).
  static LineSet range(std::uint32_t first, std::uint32_t last);
  static LineSet of(std::span<const std::uint32_t> lines);
  static LineSet of(std::initializer_list<std::uint32_t> lines);

  bool empty() const { return !data_; }
  std::size_t count() const { return data_ ? data_->count : 0; }
  std::uint32_t min_line() const { return data_ ? data_->min_line : 0; }
  std::uint32_t max_line() const { return data_ ? data_->max_line : 0; }

  std::uint32_t first_word() const { return data_ ? data_->first_word : 0; }
  std::uint32_t word_count() const {
    return data_ ? static_cast<std::uint32_t>(data_->words.size()) : 0;
  }
  const std::uint64_t* words() const { return data_ ? data_->words.data() : nullptr; }

  bool contains(std::uint32_t line) const;
  /// True if some line lies in [lo, hi).
  bool any_in(std::uint32_t lo, std::uint32_t hi) const;
  bool intersects(const LineSet& other) const;
  LineSet unite(const LineSet& other) const;
  /// Lines of this set that fall in [lo, hi).
  LineSet restrict(std::uint32_t lo, std::uint32_t hi) const;
  /// Every line shifted by delta (may be negative; result must stay >= 0).
  LineSet shifted(std::int64_t delta) const;

  std::vector<std::uint32_t> lines() const;

  template <class F>
  void for_each(F&& f) const {
    if (!data_) return;
    for (std::size_t w = 0; w < data_->words.size(); ++w) {
      std::uint64_t bits = data_->words[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<std::uint32_t>((data_->first_word + w) * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const LineSet& a, const LineSet& b);

 private:
  struct Data {
    std::uint32_t first_word = 0;
    std::vector<std::uint64_t> words;
    std::size_t count = 0;
    std::uint32_t min_line = 0;
    std::uint32_t max_line = 0;
  };

  static LineSet from_words(std::uint32_t first_word, std::vector<std::uint64_t> words);

  std::shared_ptr<const Data> data_;
};

}  // namespace hashpim
