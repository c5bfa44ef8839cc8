#ifndef COVER_RAMSEY_EXACT_COVER_HPP
#define COVER_RAMSEY_EXACT_COVER_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cover_ramsey {

/// Dancing-links solver for exact cover with primary columns only.
///
/// Column choice is minimum remaining size, ties to the lowest column id;
/// rows of a column are tried in insertion order. The search is therefore
/// deterministic and callers control it through the order of add_row calls.
class ExactCover {
 public:
  enum class Status { kSolved, kNoSolution, kNodeLimit };

  struct Result {
    Status status = Status::kNoSolution;
    std::vector<std::size_t> rows;  // ids from add_row, ascending depth order
    std::uint64_t nodes = 0;
  };

  explicit ExactCover(std::size_t num_columns);

  /// Returns the row id. Column ids must be distinct and < num_columns.
  std::size_t add_row(const std::vector<std::size_t>& columns);

  Result solve(std::uint64_t node_limit);

 private:
  struct Node {
    std::size_t left, right, up, down, column, row;
  };

  void cover(std::size_t c);
  void uncover(std::size_t c);
  bool search(Result& result, std::uint64_t node_limit, std::vector<std::size_t>& stack);

  std::vector<Node> nodes_;  // nodes_[0] is the root, 1..num_columns are headers
  std::vector<std::size_t> size_;
  std::size_t num_columns_;
  std::size_t num_rows_ = 0;
};

}  // namespace cover_ramsey

#endif  // COVER_RAMSEY_EXACT_COVER_HPP
