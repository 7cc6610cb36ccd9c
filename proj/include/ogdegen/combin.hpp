#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ogdegen/errors.hpp"

namespace ogdegen {

/// Subsets of [1, 32) as bitmasks; bit q-1 encodes membership of q.
using SubsetMask = std::uint32_t;

SubsetMask mask_from(const std::vector<int>& elems);
std::vector<int> mask_elements(SubsetMask m);
inline bool mask_contains(SubsetMask m, int q) { return (m >> (q - 1)) & 1u; }
inline SubsetMask full_mask(int count) {
    return count <= 0 ? 0u : ((count >= 32 ? 0u : (1u << count)) - 1u);
}
int mask_size(SubsetMask m);

/// Sum of the elements of I; the codimension of the Schubert variety it indexes.
int codim_w(SubsetMask I);

/// A pair (I, I') of disjoint subsets of [n-1] satisfying one of the five
/// structural clauses, together with its intrinsic integers j, k.  Saturated
/// pairs (I union I' = [n-1]) carry j = 0, k = 1.
struct AllowedPair {
    int n = 0;
    SubsetMask I = 0;
    SubsetMask Iprime = 0;
    int j = 0;
    int k = 0;
    bool saturated = false;

    friend bool operator==(const AllowedPair& a, const AllowedPair& b) {
        return a.n == b.n && a.I == b.I && a.Iprime == b.Iprime;
    }
    std::string str() const;
};

/// Classify (I, I'); throws NotAllowed naming the violated clause.
AllowedPair validate_pair(int n, SubsetMask I, SubsetMask Iprime);
AllowedPair validate_pair(int n, const std::vector<int>& I, const std::vector<int>& Iprime);

/// Children in the successor order: left increments min(I') (or adds 1),
/// right fills the gap [j+1, k-1] into I.  Throw SaturatedPair at leaves.
AllowedPair left_child(const AllowedPair& p);
AllowedPair right_child(const AllowedPair& p);

struct TreeNode {
    AllowedPair pair;
    std::unique_ptr<TreeNode> left, right;
    bool is_leaf() const { return !left && !right; }
};

/// The full rooted binary tree on allowed pairs for a given n (n >= 2).
std::unique_ptr<TreeNode> enumerate_tree(int n);

/// All pairs of the tree in preorder (root first).
std::vector<const TreeNode*> preorder(const TreeNode& root);

/// The decreasing sequences lambda (elements of I) and mu (complement
/// sequence mu_{s+1} > ... > mu_n, obtained by deleting n - lambda_i from
/// n-1, ..., 0).
struct PartitionData {
    std::vector<int> lambda;  // lambda_1 > ... > lambda_s
    std::vector<int> mu;      // mu_{s+1} > ... > mu_n
    int s() const { return static_cast<int>(lambda.size()); }
    int lambda_at(int h) const { return lambda.at(h - 1); }          // h in [1, s]
    int mu_at(int h) const { return mu.at(h - 1 - s()); }            // h in [s+1, n]
};

PartitionData partition_data(int n, SubsetMask I);

/// Admissible subset of [n] u [n-bar] encoded as a sign vector:
/// +1 keeps q, -1 keeps q-bar, 0 omits the index.
struct AdmissibleSet {
    int n = 0;
    std::vector<std::int8_t> eps;

    int sign(int q) const { return eps.at(q - 1); }  // q in [1, n]
    int size() const;
    int count_neg() const;
    bool is_maximal() const { return size() == n; }
    bool is_empty() const { return size() == 0; }
    std::string str() const;  // over {+,-,0}, index 1 leftmost

    static AdmissibleSet from_string(const std::string& s);
    static AdmissibleSet empty(int n) { return AdmissibleSet{n, std::vector<std::int8_t>(n, 0)}; }

    friend bool operator==(const AdmissibleSet& a, const AdmissibleSet& b) {
        return a.n == b.n && a.eps == b.eps;
    }
    friend bool operator<(const AdmissibleSet& a, const AdmissibleSet& b) {
        return a.eps < b.eps;
    }
};

/// Intersection: coordinates where the two sign vectors agree.
AdmissibleSet adm_intersect(const AdmissibleSet& a, const AdmissibleSet& b);
/// a sqcup b = {x in a u b : x-bar not in a u b}.
AdmissibleSet adm_sqcup(const AdmissibleSet& a, const AdmissibleSet& b);

/// All 3^n admissible sets (including the empty one), or the 2^n maximal
/// ones; deterministic enumeration order.
std::vector<AdmissibleSet> enumerate_admissible(int n, bool maximal_only);

}  // namespace ogdegen
