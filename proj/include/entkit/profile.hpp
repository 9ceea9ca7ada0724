#pragma once

#include <string>
#include <vector>

namespace entkit {

// Local-dimension profile of a multipartite system, m1 x m2 x ... x mN.
//
// Index convention: a flat basis index encodes subsystem digits in
// big-endian mixed radix over dims() -- the leftmost subsystem is the most
// significant digit, matching ket notation |i1 i2 ... iN> read left to
// right. All indexing in the library goes through this class.
class DimProfile {
 public:
  explicit DimProfile(std::vector<int> dims);

  int parties() const { return static_cast<int>(dims_.size()); }
  int dim(int party) const { return dims_.at(static_cast<std::size_t>(party)); }
  const std::vector<int>& dims() const { return dims_; }
  long total() const { return total_; }
  long stride(int party) const { return strides_.at(static_cast<std::size_t>(party)); }

  std::vector<int> digits(long index) const;
  long index_of(const std::vector<int>& digits) const;

  // Profile restricted to the given (strictly increasing) party indices.
  DimProfile restricted(const std::vector<int>& keep) const;

  // Product of local dimensions over a party subset.
  long dim_of(const std::vector<int>& parties) const;

  bool operator==(const DimProfile& other) const { return dims_ == other.dims_; }
  bool operator!=(const DimProfile& other) const { return !(*this == other); }

  std::string to_string() const;  // e.g. "2x2x3"

 private:
  std::vector<int> dims_;
  std::vector<long> strides_;
  long total_ = 1;
};

// An ordered bipartite cut of subsystem indices: side_a | side_b.
// Sides are sorted, disjoint, nonempty, and drawn from {0,...,N-1}.
class Partition {
 public:
  Partition(std::vector<int> side_a, std::vector<int> side_b);

  // Parses "0,2|1,3" (comma-separated zero-based indices, '|' between sides).
  static Partition parse(const std::string& text);

  const std::vector<int>& side_a() const { return a_; }
  const std::vector<int>& side_b() const { return b_; }

  Partition swapped() const { return Partition(b_, a_); }
  bool covers(int parties) const;  // union == {0,...,parties-1}
  void require_covers(int parties) const;

  std::string to_string() const;

 private:
  std::vector<int> a_, b_;
};

}  // namespace entkit
