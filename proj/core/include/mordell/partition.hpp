#pragma once

#include <string>
#include <vector>

namespace mordell {

// Set partition of {0, .., n-1}, canonical form: every block ascending,
// blocks ordered by smallest member. Printable 1-based to match the usual
// index convention of the domain.
class Partition {
public:
    Partition(int n, std::vector<std::vector<int>> blocks);
    static Partition finest(int n);   // singletons
    static Partition coarsest(int n); // one block
    // labels[i] == labels[j] iff i, j share a block
    static Partition from_labels(const std::vector<int>& labels);

    int n() const { return n_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int b) const { return blocks_[static_cast<size_t>(b)]; }

    int block_of(int i) const;
    bool same_block(int i, int j) const { return block_of(i) == block_of(j); }
    // every block of *this is contained in a block of o
    bool refines(const Partition& o) const;
    bool operator==(const Partition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const; // deterministic total order

    std::string str() const; // {{1,2},{3,4}}

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

// All partitions of {0..n-1} in a deterministic order (restricted growth
// strings, lexicographic). Guarded: n <= 12.
std::vector<Partition> all_partitions(int n);

} // namespace mordell
