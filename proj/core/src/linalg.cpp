#include "dequant/linalg.hpp"

namespace dequant {

namespace {

template <class M>
void axpy(M& target, const M& src, const Gaussian& f) {
    for (const auto& [k, c] : src) {
        auto [it, fresh] = target.try_emplace(k, c * f);
        if (!fresh) {
            it->second += c * f;
            if (it->second.is_zero()) target.erase(it);
        }
    }
}

}  // namespace

void SparseKernel::reduce(Vec& v, Combination* comb) const {
    auto it = v.begin();
    while (it != v.end()) {
        auto p = pivot_.find(it->first);
        if (p == pivot_.end()) {
            ++it;
            continue;
        }
        Key key = it->first;
        Gaussian f = -it->second;
        const Row& row = basis_[p->second];
        axpy(v, row.v, f);
        if (comb) axpy(*comb, row.comb, f);
        it = v.upper_bound(key);
    }
}

std::optional<SparseKernel::Combination> SparseKernel::add_column(std::size_t column, Vec image) {
    Combination comb{{column, Gaussian(1)}};
    reduce(image, &comb);
    if (image.empty()) return comb;
    Gaussian inv = image.begin()->second.inverse();
    for (auto& [k, c] : image) c *= inv;
    for (auto& [k, c] : comb) c *= inv;
    pivot_.emplace(image.begin()->first, basis_.size());
    basis_.push_back(Row{std::move(image), std::move(comb)});
    return std::nullopt;
}

bool SparseKernel::in_span(Vec image) const {
    reduce(image, nullptr);
    return image.empty();
}

}  // namespace dequant
