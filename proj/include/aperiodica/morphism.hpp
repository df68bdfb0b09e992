#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace aperiodica {

// Letter-to-word map on a free monoid; letters are 0..size()-1 with display
// names (single characters or digit strings).
struct Morphism {
    std::vector<std::string> names;
    std::vector<std::vector<int>> images;

    size_t size() const { return images.size(); }

    std::vector<int> apply(const std::vector<int>& word) const;
    Morphism power(int k) const;

    std::string render(const std::vector<int>& word) const;
    std::string image_string(int letter) const { return render(images[letter]); }

    static Morphism from_strings(std::vector<std::string> names,
                                 const std::vector<std::string>& image_words);
};

struct SubstitutionMatrix {
    std::vector<std::vector<long long>> counts;  // counts[i][j] = #a_j in phi(a_i)
    bool primitive;
};

SubstitutionMatrix substitution_matrix(const Morphism& m);

// Prefix of the one-sided fixed point starting from a letter a with
// phi(a) = a..., grown by repeated application.
std::vector<int> fixed_point_prefix(const Morphism& m, int seed, size_t length);

}  // namespace aperiodica
