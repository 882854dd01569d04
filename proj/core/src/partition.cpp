#include "mordell/partition.hpp"

#include <algorithm>
#include <sstream>

#include "mordell/errors.hpp"

namespace mordell {

Partition::Partition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n < 0) throw InvalidInputError("partition of a negative set");
    std::vector<int> seen(static_cast<size_t>(n), 0);
    for (auto& b : blocks_) {
        if (b.empty()) throw InvalidInputError("partition with an empty block");
        std::sort(b.begin(), b.end());
        for (int i : b) {
            if (i < 0 || i >= n) throw InvalidInputError("partition element out of range");
            if (seen[static_cast<size_t>(i)]++) throw InvalidInputError("partition element repeated");
        }
    }
    for (int i = 0; i < n; ++i)
        if (!seen[static_cast<size_t>(i)]) throw InvalidInputError("partition does not cover the set");
    std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
    block_of_.assign(static_cast<size_t>(n), -1);
    for (size_t b = 0; b < blocks_.size(); ++b)
        for (int i : blocks_[b]) block_of_[static_cast<size_t>(i)] = static_cast<int>(b);
}

Partition Partition::finest(int n) {
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < n; ++i) blocks.push_back({i});
    return Partition(n, std::move(blocks));
}

Partition Partition::coarsest(int n) {
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
    return Partition(n, {all});
}

Partition Partition::from_labels(const std::vector<int>& labels) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> label_of_block;
    for (size_t i = 0; i < labels.size(); ++i) {
        size_t b = 0;
        while (b < label_of_block.size() && label_of_block[b] != labels[i]) ++b;
        if (b == label_of_block.size()) {
            label_of_block.push_back(labels[i]);
            blocks.emplace_back();
        }
        blocks[b].push_back(static_cast<int>(i));
    }
    return Partition(static_cast<int>(labels.size()), std::move(blocks));
}

int Partition::block_of(int i) const {
    if (i < 0 || i >= n_) throw DomainError("partition index out of range");
    return block_of_[static_cast<size_t>(i)];
}

bool Partition::refines(const Partition& o) const {
    if (n_ != o.n_) throw DomainError("partitions of different sets");
    for (const auto& b : blocks_) {
        for (int i : b)
            if (!o.same_block(b[0], i)) return false;
    }
    return true;
}

bool Partition::operator<(const Partition& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return block_of_ < o.block_of_; // restricted growth string order
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t b = 0; b < blocks_.size(); ++b) {
        if (b) os << ",";
        os << "{";
        for (size_t k = 0; k < blocks_[b].size(); ++k) {
            if (k) os << ",";
            os << blocks_[b][k] + 1;
        }
        os << "}";
    }
    os << "}";
    return os.str();
}

std::vector<Partition> all_partitions(int n) {
    if (n < 0 || n > 12) throw UnsupportedError("partition enumeration limited to n <= 12");
    std::vector<Partition> out;
    if (n == 0) {
        out.push_back(Partition(0, {}));
        return out;
    }
    // restricted growth strings: a[0] = 0, a[i] <= max(a[0..i-1]) + 1
    std::vector<int> a(static_cast<size_t>(n), 0);
    for (;;) {
        out.push_back(Partition::from_labels(a));
        int i = n - 1;
        for (; i > 0; --i) {
            int mx = 0;
            for (int j = 0; j < i; ++j) mx = std::max(mx, a[static_cast<size_t>(j)]);
            if (a[static_cast<size_t>(i)] <= mx) break;
        }
        if (i == 0) break;
        ++a[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) a[static_cast<size_t>(j)] = 0;
    }
    return out;
}

} // namespace mordell
