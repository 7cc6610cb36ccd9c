#include "ogdegen/combin.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace ogdegen {

SubsetMask mask_from(const std::vector<int>& elems) {
    SubsetMask m = 0;
    for (int q : elems) m |= (1u << (q - 1));
    return m;
}

std::vector<int> mask_elements(SubsetMask m) {
    std::vector<int> out;
    for (int q = 1; m; ++q, m >>= 1)
        if (m & 1u) out.push_back(q);
    return out;
}

int mask_size(SubsetMask m) { return std::popcount(m); }

int codim_w(SubsetMask I) {
    int w = 0;
    for (int q = 1; I; ++q, I >>= 1)
        if (I & 1u) w += q;
    return w;
}

std::string AllowedPair::str() const {
    auto set_str = [](SubsetMask m) {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (int q : mask_elements(m)) {
            if (!first) os << ",";
            os << q;
            first = false;
        }
        os << "}";
        return os.str();
    };
    return "(" + set_str(I) + "," + set_str(Iprime) + ")";
}

AllowedPair validate_pair(int n, SubsetMask I, SubsetMask Iprime) {
    if (n < 2) throw NotAllowed("n must be at least 2");
    SubsetMask ground = full_mask(n - 1);
    if ((I & ~ground) || (Iprime & ~ground))
        throw NotAllowed("I and I' must be subsets of [n-1]");
    if (I & Iprime) throw NotAllowed("I and I' intersect");

    AllowedPair p;
    p.n = n;
    p.I = I;
    p.Iprime = Iprime;
    SubsetMask u = I | Iprime;

    if (u == ground) {  // (i)
        p.saturated = true;
        p.j = 0;
        p.k = 1;
        return p;
    }
    if (u == 0) {  // (ii)
        p.j = 0;
        p.k = n;
        return p;
    }
    std::vector<int> elems = mask_elements(u);
    int lo = elems.front();
    // Is u = [k0, n-1] for some k0?
    auto is_suffix_from = [&](int k0) {
        return u == (ground & ~full_mask(k0 - 1));
    };
    if (elems.size() == 1 && I == 0 && lo <= n - 2) {  // (iii)
        p.j = lo;
        p.k = n;
        return p;
    }
    if (is_suffix_from(lo)) {  // (iv): k = lo must lie in I'
        if (!mask_contains(Iprime, lo)) throw NotAllowed("clause (iv): k must lie in I'");
        p.j = 0;
        p.k = lo;
        return p;
    }
    if (elems.size() >= 2) {  // (v): u = {j} u [k, n-1], 1 <= j <= k-2
        int j0 = lo, k0 = elems[1];
        if (j0 <= k0 - 2 && u == ((1u << (j0 - 1)) | (ground & ~full_mask(k0 - 1)))) {
            if (!mask_contains(Iprime, j0) || !mask_contains(Iprime, k0))
                throw NotAllowed("clause (v): j and k must lie in I'");
            p.j = j0;
            p.k = k0;
            return p;
        }
    }
    throw NotAllowed("no clause of the allowed-pair definition matches");
}

AllowedPair validate_pair(int n, const std::vector<int>& I, const std::vector<int>& Iprime) {
    return validate_pair(n, mask_from(I), mask_from(Iprime));
}

AllowedPair left_child(const AllowedPair& p) {
    if (p.saturated) throw SaturatedPair("left_child of a saturated pair " + p.str());
    SubsetMask ip = p.Iprime;
    if (p.j > 0) ip &= ~(1u << (p.j - 1));
    ip |= (1u << p.j);  // add j+1
    return validate_pair(p.n, p.I, ip);
}

AllowedPair right_child(const AllowedPair& p) {
    if (p.saturated) throw SaturatedPair("right_child of a saturated pair " + p.str());
    SubsetMask gap = full_mask(p.k - 1) & ~full_mask(p.j);  // [j+1, k-1]
    return validate_pair(p.n, p.I | gap, p.Iprime);
}

namespace {
std::unique_ptr<TreeNode> grow(const AllowedPair& p) {
    auto node = std::make_unique<TreeNode>();
    node->pair = p;
    if (!p.saturated) {
        node->left = grow(left_child(p));
        node->right = grow(right_child(p));
    }
    return node;
}
}  // namespace

std::unique_ptr<TreeNode> enumerate_tree(int n) {
    if (n < 2) throw NotAllowed("enumerate_tree: n must be at least 2");
    return grow(validate_pair(n, SubsetMask(0), SubsetMask(0)));
}

std::vector<const TreeNode*> preorder(const TreeNode& root) {
    std::vector<const TreeNode*> out;
    std::vector<const TreeNode*> stack{&root};
    while (!stack.empty()) {
        const TreeNode* t = stack.back();
        stack.pop_back();
        out.push_back(t);
        if (t->right) stack.push_back(t->right.get());
        if (t->left) stack.push_back(t->left.get());
    }
    return out;
}

PartitionData partition_data(int n, SubsetMask I) {
    PartitionData pd;
    pd.lambda = mask_elements(I);
    std::sort(pd.lambda.rbegin(), pd.lambda.rend());
    std::vector<bool> removed(n, false);
    for (int l : pd.lambda) removed[n - l] = true;  // values n - lambda_i in [1, n-1]
    for (int v = n - 1; v >= 0; --v)
        if (!removed[v]) pd.mu.push_back(v);
    return pd;
}

int AdmissibleSet::size() const {
    int c = 0;
    for (auto e : eps) c += (e != 0);
    return c;
}

int AdmissibleSet::count_neg() const {
    int c = 0;
    for (auto e : eps) c += (e < 0);
    return c;
}

std::string AdmissibleSet::str() const {
    std::string s;
    for (auto e : eps) s += (e > 0 ? '+' : (e < 0 ? '-' : '0'));
    return s;
}

AdmissibleSet AdmissibleSet::from_string(const std::string& s) {
    AdmissibleSet a;
    a.n = static_cast<int>(s.size());
    for (char c : s) {
        if (c == '+') a.eps.push_back(1);
        else if (c == '-') a.eps.push_back(-1);
        else if (c == '0') a.eps.push_back(0);
        else throw std::invalid_argument("AdmissibleSet: bad sign character");
    }
    return a;
}

AdmissibleSet adm_intersect(const AdmissibleSet& a, const AdmissibleSet& b) {
    AdmissibleSet out = AdmissibleSet::empty(a.n);
    for (int q = 0; q < a.n; ++q)
        if (a.eps[q] != 0 && a.eps[q] == b.eps[q]) out.eps[q] = a.eps[q];
    return out;
}

AdmissibleSet adm_sqcup(const AdmissibleSet& a, const AdmissibleSet& b) {
    AdmissibleSet out = AdmissibleSet::empty(a.n);
    for (int q = 0; q < a.n; ++q) {
        bool plus = a.eps[q] > 0 || b.eps[q] > 0;
        bool minus = a.eps[q] < 0 || b.eps[q] < 0;
        if (plus && !minus) out.eps[q] = 1;
        if (minus && !plus) out.eps[q] = -1;
    }
    return out;
}

std::vector<AdmissibleSet> enumerate_admissible(int n, bool maximal_only) {
    std::vector<AdmissibleSet> out;
    if (maximal_only) {
        out.reserve(1u << n);
        for (std::uint32_t c = 0; c < (1u << n); ++c) {
            AdmissibleSet a = AdmissibleSet::empty(n);
            for (int q = 0; q < n; ++q) a.eps[q] = ((c >> q) & 1u) ? -1 : 1;
            out.push_back(std::move(a));
        }
        return out;
    }
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    out.reserve(total);
    for (std::uint64_t c = 0; c < total; ++c) {
        AdmissibleSet a = AdmissibleSet::empty(n);
        std::uint64_t v = c;
        for (int q = 0; q < n; ++q, v /= 3) {
            int d = static_cast<int>(v % 3);
            a.eps[q] = (d == 0) ? 0 : (d == 1 ? 1 : -1);
        }
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace ogdegen
