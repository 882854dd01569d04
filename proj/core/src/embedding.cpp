#include "mordell/embedding.hpp"

#include "mordell/errors.hpp"

namespace mordell {

SubalgebraEmbedding::SubalgebraEmbedding(AlgebraPtr source, AlgebraPtr target, QMatrix map) : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (!source_ || !target_) throw InvalidInputError("embedding needs source and target algebras");
    const size_t m = static_cast<size_t>(source_->dim());
    const size_t n = static_cast<size_t>(target_->dim());
    if (map_.size() != m) throw InvalidInputError("embedding matrix has wrong row count");
    for (const auto& row : map_)
        if (row.size() != n) throw InvalidInputError("embedding matrix has wrong column count");
    if (rank(map_) != m) throw InvalidInputError("embedding matrix is not injective");

    // phi(1) = 1
    if (apply(source_->one()) != target_->one()) throw InvalidInputError("embedding does not preserve the unit");
    // multiplicative on all basis pair products
    std::vector<AlgebraElement> src_basis, img;
    for (int i = 0; i < source_->dim(); ++i) {
        src_basis.push_back(source_->basis_element(i));
        img.push_back(apply(src_basis.back()));
    }
    for (size_t i = 0; i < src_basis.size(); ++i) {
        for (size_t j = i; j < src_basis.size(); ++j) {
            if (apply(src_basis[i] * src_basis[j]) != img[i] * img[j])
                throw InvalidInputError("embedding is not multiplicative");
        }
    }
}

AlgebraElement SubalgebraEmbedding::apply(const AlgebraElement& x) const {
    if (x.algebra().get() != source_.get()) throw DomainError("element is not in the source algebra");
    QVector xc = x.coords();
    QVector yc(static_cast<size_t>(target_->dim()), Rational(0));
    for (size_t i = 0; i < xc.size(); ++i) {
        if (xc[i] == 0) continue;
        for (size_t j = 0; j < yc.size(); ++j) yc[j] += xc[i] * map_[i][j];
    }
    return target_->from_coords(yc);
}

Partition algebra_partition(const SubalgebraEmbedding& emb) {
    const int n = emb.target()->dim();
    const int m = emb.source()->dim();
    // exact hom values of every image basis element
    std::vector<std::vector<RealAlgebraic>> vals(static_cast<size_t>(m));
    for (int s = 0; s < m; ++s) vals[static_cast<size_t>(s)] = hom_values(emb.apply(emb.source()->basis_element(s)));

    std::vector<int> labels(static_cast<size_t>(n), -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        if (labels[static_cast<size_t>(i)] >= 0) continue;
        labels[static_cast<size_t>(i)] = next;
        for (int j = i + 1; j < n; ++j) {
            if (labels[static_cast<size_t>(j)] >= 0) continue;
            bool equal = true;
            for (int s = 0; s < m && equal; ++s)
                equal = vals[static_cast<size_t>(s)][static_cast<size_t>(i)] == vals[static_cast<size_t>(s)][static_cast<size_t>(j)];
            if (equal) labels[static_cast<size_t>(j)] = next;
        }
        ++next;
    }
    return Partition::from_labels(labels);
}

bool is_essential(const SubalgebraEmbedding& emb) {
    // image of each target-component projection must span that component
    const auto& target = emb.target();
    std::vector<QVector> img_coords;
    for (int s = 0; s < emb.source()->dim(); ++s)
        img_coords.push_back(emb.apply(emb.source()->basis_element(s)).coords());
    size_t offset = 0;
    for (int j = 0; j < target->num_components(); ++j) {
        const size_t d = static_cast<size_t>(target->component(j)->degree());
        QMatrix proj;
        for (const auto& row : img_coords) proj.push_back(QVector(row.begin() + static_cast<long>(offset), row.begin() + static_cast<long>(offset + d)));
        if (rank(proj) != d) return false;
        offset += d;
    }
    return true;
}

bool is_aligned(const SubalgebraEmbedding& emb) {
    return emb.source()->num_components() == emb.target()->num_components();
}

} // namespace mordell
