#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilbfrob/errors.hpp"

namespace hilbfrob {

/// Permutation of {0..n-1}, stored as the dense image array.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<uint8_t> images);
    static Permutation identity(int n);
    /// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; "()" is the
    /// identity. Points not mentioned are fixed; n must cover all points.
    static Permutation from_cycles(const std::string& text, int n);

    int size() const { return static_cast<int>(images_.size()); }
    uint8_t operator()(int i) const { return images_[i]; }
    const std::vector<uint8_t>& images() const { return images_; }

    /// (a*b)(x) = a(b(x)).
    Permutation compose(const Permutation& b) const;
    Permutation inverse() const;
    Permutation conjugate_by(const Permutation& p) const; // p * this * p^-1

    bool is_identity() const;
    bool operator==(const Permutation& o) const = default;
    auto operator<=>(const Permutation& o) const = default;

    std::string cycle_str() const;

private:
    std::vector<uint8_t> images_;
};

/// Partition of {0..n-1} into blocks, each sorted, blocks ordered by minimal
/// element.
struct OrbitPartition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of; // point -> block index

    int size() const { return static_cast<int>(block_of.size()); }
    bool operator==(const OrbitPartition& o) const { return blocks == o.blocks; }
};

OrbitPartition orbits(const Permutation& sigma);
OrbitPartition joint_orbits(const Permutation& sigma, const Permutation& tau);
/// fine-block index -> containing coarse-block index. Throws NOT_A_REFINEMENT.
std::vector<int> orbit_surjection(const OrbitPartition& fine, const OrbitPartition& coarse);

/// Graph defect gamma(sigma,tau): per joint orbit B,
/// (|B| + 2 - |B/sigma| - |B/tau| - |B/(sigma tau)|) / 2.
std::vector<int> graph_defect(const Permutation& sigma, const Permutation& tau);

inline constexpr int kDefaultSnBound = 6;

/// All of S_n in lexicographic order of image arrays. Throws BOUND_EXCEEDED
/// for n > bound.
std::vector<Permutation> enumerate_sn(int n, int bound = kDefaultSnBound);
/// Cycle type as a weakly decreasing integer partition of n.
std::vector<int> cycle_type(const Permutation& sigma);
/// Some pi with pi sigma pi^-1 = tau, if one exists.
std::optional<Permutation> conjugators(const Permutation& sigma, const Permutation& tau);

/// Koszul sign of rearranging graded factors f_0..f_{k-1} into the order
/// f_{perm[0]}, f_{perm[1]}, ...: each transposed pair of odd factors
/// contributes -1.
int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees);

} // namespace hilbfrob
