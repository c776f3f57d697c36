#include "hilbfrob/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hilbfrob/errors.hpp"

namespace hilbfrob {

Permutation::Permutation(std::vector<uint8_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (uint8_t v : images_) {
        if (v >= images_.size() || seen[v])
            throw Error(ErrorCode::BAD_INPUT, "permutation images are not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<uint8_t> im(n);
    std::iota(im.begin(), im.end(), uint8_t(0));
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(const std::string& text, int n) {
    std::vector<uint8_t> im(n);
    std::iota(im.begin(), im.end(), uint8_t(0));
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw Error(ErrorCode::BAD_INPUT, "expected '(' in cycle notation");
        ++pos;
        std::vector<int> cyc;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            size_t end = pos;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
            if (end == pos) throw Error(ErrorCode::BAD_INPUT, "expected point in cycle notation");
            int v = std::stoi(text.substr(pos, end - pos));
            if (v < 1 || v > n)
                throw Error(ErrorCode::BAD_INPUT, "cycle point out of range 1.." + std::to_string(n));
            cyc.push_back(v - 1);
            pos = end;
            skip_ws();
            if (pos < text.size() && (text[pos] == ',')) {
                ++pos;
                skip_ws();
            }
        }
        if (pos >= text.size()) throw Error(ErrorCode::BAD_INPUT, "unterminated cycle");
        ++pos; // ')'
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            im[from] = static_cast<uint8_t>(to);
        }
        skip_ws();
    }
    return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& b) const {
    if (size() != b.size()) throw Error(ErrorCode::SIZE_MISMATCH, "permutation sizes differ");
    std::vector<uint8_t> im(images_.size());
    for (int i = 0; i < size(); ++i) im[i] = images_[b.images_[i]];
    Permutation r;
    r.images_ = std::move(im);
    return r;
}

Permutation Permutation::inverse() const {
    std::vector<uint8_t> im(images_.size());
    for (int i = 0; i < size(); ++i) im[images_[i]] = static_cast<uint8_t>(i);
    Permutation r;
    r.images_ = std::move(im);
    return r;
}

Permutation Permutation::conjugate_by(const Permutation& p) const {
    return p.compose(*this).compose(p.inverse());
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

std::string Permutation::cycle_str() const {
    if (is_identity()) return "()";
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < size(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        out += "(";
        int j = i;
        bool first = true;
        do {
            if (!first) out += " ";
            out += std::to_string(j + 1);
            seen[j] = true;
            first = false;
            j = images_[j];
        } while (j != i);
        out += ")";
    }
    return out;
}

OrbitPartition orbits(const Permutation& sigma) {
    int n = sigma.size();
    OrbitPartition p;
    p.block_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (p.block_of[i] != -1) continue;
        std::vector<int> blk;
        int j = i;
        do {
            p.block_of[j] = static_cast<int>(p.blocks.size());
            blk.push_back(j);
            j = sigma(j);
        } while (j != i);
        std::sort(blk.begin(), blk.end());
        p.blocks.push_back(std::move(blk));
    }
    return p;
}

namespace {
int uf_find(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}
} // namespace

OrbitPartition joint_orbits(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size()) throw Error(ErrorCode::SIZE_MISMATCH, "permutation sizes differ");
    int n = sigma.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto unite = [&](int a, int b) {
        a = uf_find(parent, a);
        b = uf_find(parent, b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (int i = 0; i < n; ++i) {
        unite(i, sigma(i));
        unite(i, tau(i));
    }
    OrbitPartition p;
    p.block_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = uf_find(parent, i);
        if (p.block_of[r] == -1) {
            p.block_of[r] = static_cast<int>(p.blocks.size());
            p.blocks.emplace_back();
        }
        p.block_of[i] = p.block_of[r];
        p.blocks[p.block_of[i]].push_back(i);
    }
    return p;
}

std::vector<int> orbit_surjection(const OrbitPartition& fine, const OrbitPartition& coarse) {
    if (fine.size() != coarse.size())
        throw Error(ErrorCode::SIZE_MISMATCH, "partitions of different ground sets");
    std::vector<int> map(fine.blocks.size(), -1);
    for (size_t b = 0; b < fine.blocks.size(); ++b) {
        int target = coarse.block_of[fine.blocks[b][0]];
        for (int x : fine.blocks[b])
            if (coarse.block_of[x] != target)
                throw Error(ErrorCode::NOT_A_REFINEMENT, "fine block straddles coarse blocks");
        map[b] = target;
    }
    return map;
}

std::vector<int> graph_defect(const Permutation& sigma, const Permutation& tau) {
    OrbitPartition joint = joint_orbits(sigma, tau);
    OrbitPartition os = orbits(sigma);
    OrbitPartition ot = orbits(tau);
    OrbitPartition ost = orbits(sigma.compose(tau));
    auto count_within = [&](const OrbitPartition& fine, int jb) {
        // fine refines joint, so counting distinct fine blocks meeting jb works.
        std::vector<bool> seen(fine.blocks.size(), false);
        int c = 0;
        for (int x : joint.blocks[jb])
            if (!seen[fine.block_of[x]]) {
                seen[fine.block_of[x]] = true;
                ++c;
            }
        return c;
    };
    std::vector<int> gamma(joint.blocks.size());
    for (size_t b = 0; b < joint.blocks.size(); ++b) {
        int num = static_cast<int>(joint.blocks[b].size()) + 2 -
                  count_within(os, static_cast<int>(b)) - count_within(ot, static_cast<int>(b)) -
                  count_within(ost, static_cast<int>(b));
        gamma[b] = num / 2;
    }
    return gamma;
}

std::vector<Permutation> enumerate_sn(int n, int bound) {
    if (n > bound)
        throw Error(ErrorCode::BOUND_EXCEEDED,
                    "n = " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
    std::vector<uint8_t> im(n);
    std::iota(im.begin(), im.end(), uint8_t(0));
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<int> cycle_type(const Permutation& sigma) {
    std::vector<int> type;
    for (const auto& b : orbits(sigma).blocks) type.push_back(static_cast<int>(b.size()));
    std::sort(type.rbegin(), type.rend());
    return type;
}

std::optional<Permutation> conjugators(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size()) throw Error(ErrorCode::SIZE_MISMATCH, "permutation sizes differ");
    if (cycle_type(sigma) != cycle_type(tau)) return std::nullopt;
    // Align cycles of equal length: map the i-th cycle of sigma (in canonical
    // order, grouped by length) onto a tau cycle of the same length.
    auto cycles_by_length = [](const Permutation& p) {
        std::vector<std::vector<int>> cycs;
        std::vector<bool> seen(p.size(), false);
        for (int i = 0; i < p.size(); ++i) {
            if (seen[i]) continue;
            std::vector<int> c;
            int j = i;
            do {
                seen[j] = true;
                c.push_back(j);
                j = p(j);
            } while (j != i);
            cycs.push_back(std::move(c));
        }
        std::stable_sort(cycs.begin(), cycs.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
        return cycs;
    };
    auto cs = cycles_by_length(sigma);
    auto ct = cycles_by_length(tau);
    std::vector<uint8_t> im(sigma.size());
    for (size_t c = 0; c < cs.size(); ++c)
        for (size_t i = 0; i < cs[c].size(); ++i)
            im[cs[c][i]] = static_cast<uint8_t>(ct[c][i]);
    Permutation pi{std::vector<uint8_t>(im)};
    return pi;
}

int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees) {
    if (perm.size() != degrees.size())
        throw Error(ErrorCode::SIZE_MISMATCH, "koszul_sign: permutation/degree length mismatch");
    int sign = 1;
    for (size_t a = 0; a < perm.size(); ++a)
        for (size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b] && (degrees[perm[a]] & 1) && (degrees[perm[b]] & 1)) sign = -sign;
    return sign;
}

} // namespace hilbfrob
