#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spcp/matrix.hpp"

namespace spcp {

struct LabeledSet {
    Matrix features;          // n x d
    std::vector<int> labels;  // n entries, each in [0, K)

    std::size_t size() const { return labels.size(); }
    std::size_t dim() const { return features.cols(); }
    int num_classes() const;  // max label + 1
};

struct UnlabeledSet {
    Matrix features;  // n x d
    std::string name;

    std::size_t size() const { return features.rows(); }
    std::size_t dim() const { return features.cols(); }
};

// Isotropic Gaussian mixture: K clusters of n_per_class samples each.
struct BlobSpec {
    int num_classes = 0;
    int dim = 0;
    Matrix means;  // K x d
    double sigma = 1.0;
    int n_per_class = 0;
    std::uint64_t seed = 0;
};

// Samples are emitted class-major (all of class 0 first), labels by cluster.
// Bit-identical for identical specs.
LabeledSet gen_blobs(const BlobSpec& spec);

// Gaussian samples centered on the pairwise midpoints of the spec means,
// same sigma; sample t uses pair t mod #pairs. Requires K >= 2.
UnlabeledSet gen_near_ood(const BlobSpec& spec, int n, std::uint64_t seed);

// Uniform on [-w, w]^d excluding the ball of radius id_radius (rejection
// sampling). Fails loudly when the ball nearly fills the box.
UnlabeledSet gen_far_ood(int dim, int n, double box_halfwidth, double id_radius,
                         std::uint64_t seed);

// i.i.d. standard normal entries; the stand-in validation OOD set.
UnlabeledSet gen_gaussian_noise(int dim, int n, std::uint64_t seed);

// Per-class stratified split: floor(test_fraction * n_c) rows of each class
// go to test, the remainder to train. Within-class assignment is a seeded
// shuffle; output rows keep the input's relative order.
std::pair<LabeledSet, LabeledSet> split_stratified(const LabeledSet& set, double test_fraction,
                                                   std::uint64_t seed);

// CSV interchange. Labeled header: label,f0,...,f{d-1}; unlabeled header:
// f0,...,f{d-1}. Floats are written with 17 significant digits so a
// save/load roundtrip is bit-exact; LF line endings. Malformed input errors
// carry the offending line number.
void save_csv(const LabeledSet& set, const std::string& path);
void save_csv(const UnlabeledSet& set, const std::string& path);
LabeledSet load_labeled_csv(const std::string& path);
UnlabeledSet load_unlabeled_csv(const std::string& path);

}  // namespace spcp
