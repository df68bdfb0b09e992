#include "aperiodica/morphism.hpp"

#include <map>
#include <stdexcept>

namespace aperiodica {

std::vector<int> Morphism::apply(const std::vector<int>& word) const {
    std::vector<int> out;
    for (int a : word) {
        const auto& img = images.at(static_cast<size_t>(a));
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

Morphism Morphism::power(int k) const {
    if (k < 1) throw std::invalid_argument("Morphism::power: exponent must be >= 1");
    Morphism r = *this;
    for (int i = 1; i < k; ++i) {
        Morphism next = r;
        for (size_t a = 0; a < size(); ++a) next.images[a] = apply(r.images[a]);
        r = std::move(next);
    }
    return r;
}

std::string Morphism::render(const std::vector<int>& word) const {
    std::string s;
    for (int a : word) s += names.at(static_cast<size_t>(a));
    return s;
}

Morphism Morphism::from_strings(std::vector<std::string> names,
                                const std::vector<std::string>& image_words) {
    std::map<std::string, int> index;
    for (size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);
    Morphism m;
    m.names = std::move(names);
    for (const std::string& w : image_words) {
        std::vector<int> img;
        for (char c : w) {
            auto it = index.find(std::string(1, c));
            if (it == index.end()) throw std::invalid_argument("Morphism: unknown letter in image");
            img.push_back(it->second);
        }
        m.images.push_back(std::move(img));
    }
    return m;
}

SubstitutionMatrix substitution_matrix(const Morphism& m) {
    const size_t k = m.size();
    SubstitutionMatrix sm;
    sm.counts.assign(k, std::vector<long long>(k, 0));
    for (size_t i = 0; i < k; ++i)
        for (int a : m.images[i]) sm.counts[i][static_cast<size_t>(a)]++;

    if (k == 1) {
        sm.primitive = sm.counts[0][0] >= 2;
        return sm;
    }
    // primitive iff some power of the adjacency pattern is strictly positive
    std::vector<std::vector<bool>> reach(k, std::vector<bool>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) reach[i][j] = sm.counts[i][j] > 0;
    auto all_positive = [&](const std::vector<std::vector<bool>>& b) {
        for (const auto& row : b)
            for (bool v : row)
                if (!v) return false;
        return true;
    };
    sm.primitive = false;
    std::vector<std::vector<bool>> cur = reach;
    for (size_t e = 1; e <= k * k; ++e) {
        if (all_positive(cur)) {
            sm.primitive = true;
            break;
        }
        std::vector<std::vector<bool>> next(k, std::vector<bool>(k, false));
        for (size_t i = 0; i < k; ++i)
            for (size_t l = 0; l < k; ++l)
                if (cur[i][l])
                    for (size_t j = 0; j < k; ++j)
                        if (reach[l][j]) next[i][j] = true;
        cur = std::move(next);
    }
    return sm;
}

std::vector<int> fixed_point_prefix(const Morphism& m, int seed, size_t length) {
    const auto& img = m.images.at(static_cast<size_t>(seed));
    if (img.empty() || img[0] != seed || img.size() < 2)
        throw std::domain_error("fixed_point_prefix: phi(seed) must start with seed and grow");
    std::vector<int> w{seed};
    for (int round = 0; round < 256 && w.size() < length; ++round) {
        w = m.apply(w);
        if (w.size() > 4 * length + 16) w.resize(4 * length + 16);
    }
    if (w.size() < length) throw std::runtime_error("fixed_point_prefix: did not reach length");
    w.resize(length);
    return w;
}

}  // namespace aperiodica
