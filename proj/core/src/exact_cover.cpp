#include "cover_ramsey/exact_cover.hpp"

#include "cover_ramsey/error.hpp"

namespace cover_ramsey {

ExactCover::ExactCover(std::size_t num_columns) : size_(num_columns + 1, 0), num_columns_(num_columns) {
  nodes_.resize(num_columns + 1);
  for (std::size_t i = 0; i <= num_columns; ++i) {
    nodes_[i] = {i == 0 ? num_columns : i - 1, i == num_columns ? 0 : i + 1, i, i, i, SIZE_MAX};
  }
}

std::size_t ExactCover::add_row(const std::vector<std::size_t>& columns) {
  const std::size_t first = nodes_.size();
  for (std::size_t k = 0; k < columns.size(); ++k) {
    const std::size_t c = columns[k] + 1;
    if (c > num_columns_) fail(ErrorCode::kInternal, "exact cover column out of range");
    const std::size_t id = nodes_.size();
    const std::size_t up = nodes_[c].up;
    nodes_.push_back({k == 0 ? id : id - 1, first, up, c, c, num_rows_});
    nodes_[up].down = id;
    nodes_[c].up = id;
    if (k > 0) nodes_[id - 1].right = id;
    nodes_[first].left = id;
    ++size_[c];
  }
  return num_rows_++;
}

void ExactCover::cover(std::size_t c) {
  nodes_[nodes_[c].right].left = nodes_[c].left;
  nodes_[nodes_[c].left].right = nodes_[c].right;
  for (std::size_t i = nodes_[c].down; i != c; i = nodes_[i].down) {
    for (std::size_t j = nodes_[i].right; j != i; j = nodes_[j].right) {
      nodes_[nodes_[j].down].up = nodes_[j].up;
      nodes_[nodes_[j].up].down = nodes_[j].down;
      --size_[nodes_[j].column];
    }
  }
}

void ExactCover::uncover(std::size_t c) {
  for (std::size_t i = nodes_[c].up; i != c; i = nodes_[i].up) {
    for (std::size_t j = nodes_[i].left; j != i; j = nodes_[j].left) {
      ++size_[nodes_[j].column];
      nodes_[nodes_[j].down].up = j;
      nodes_[nodes_[j].up].down = j;
    }
  }
  nodes_[nodes_[c].right].left = c;
  nodes_[nodes_[c].left].right = c;
}

bool ExactCover::search(Result& result, std::uint64_t node_limit, std::vector<std::size_t>& stack) {
  if (++result.nodes > node_limit) {
    result.status = Status::kNodeLimit;
    return true;
  }
  if (nodes_[0].right == 0) {
    result.status = Status::kSolved;
    result.rows = stack;
    return true;
  }
  std::size_t best = nodes_[0].right;
  for (std::size_t c = nodes_[best].right; c != 0; c = nodes_[c].right) {
    if (size_[c] < size_[best]) best = c;
  }
  if (size_[best] == 0) return false;
  cover(best);
  for (std::size_t r = nodes_[best].down; r != best; r = nodes_[r].down) {
    stack.push_back(nodes_[r].row);
    for (std::size_t j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].column);
    const bool done = search(result, node_limit, stack);
    for (std::size_t j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].column);
    stack.pop_back();
    if (done) {
      uncover(best);
      return true;
    }
  }
  uncover(best);
  return false;
}

ExactCover::Result ExactCover::solve(std::uint64_t node_limit) {
  Result result;
  std::vector<std::size_t> stack;
  if (!search(result, node_limit, stack)) result.status = Status::kNoSolution;
  return result;
}

}  // namespace cover_ramsey
