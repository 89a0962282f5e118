#include "jsrlab/family.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace jsrlab {

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << ")";
    return os.str();
}

Word canonical_rotation(const Word& w) {
    Word best = w;
    Word rot = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

bool is_canonical_necklace(const Word& w) { return w == canonical_rotation(w); }

bool is_power_of_shorter_word(const Word& w) {
    const std::size_t k = w.size();
    for (std::size_t d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < k && repeats; ++i)
            repeats = (w[i] == w[i % d]);
        if (repeats) return true;
    }
    return false;
}

namespace {

std::uint64_t checked_word_count(int m, int k, std::uint64_t budget) {
    if (m < 1 || k < 1) throw DomainError("need m >= 1 and k >= 1");
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) {
        if (count > budget / static_cast<std::uint64_t>(m) + 1) {
            std::ostringstream os;
            os << "enumerating " << m << "^" << k << " words exceeds budget "
               << budget;
            throw BudgetExceededError(os.str(), 0, budget);
        }
        count *= static_cast<std::uint64_t>(m);
    }
    if (count > budget) {
        std::ostringstream os;
        os << "enumerating " << m << "^" << k << " = " << count
           << " words exceeds budget " << budget;
        throw BudgetExceededError(os.str(), count, budget);
    }
    return count;
}

}  // namespace

std::vector<Word> all_words(int m, int k, std::uint64_t budget) {
    const std::uint64_t count = checked_word_count(m, k, budget);
    std::vector<Word> out;
    out.reserve(count);
    Word w(k, 0);
    while (true) {
        out.push_back(w);
        int pos = k - 1;
        while (pos >= 0 && w[pos] == m - 1) w[pos--] = 0;
        if (pos < 0) break;
        ++w[pos];
    }
    return out;
}

std::vector<Word> necklaces(int m, int k, std::uint64_t budget) {
    checked_word_count(m, k, budget);
    std::vector<Word> out;
    Word w(k, 0);
    while (true) {
        if (is_canonical_necklace(w)) out.push_back(w);
        int pos = k - 1;
        while (pos >= 0 && w[pos] == m - 1) w[pos--] = 0;
        if (pos < 0) break;
        ++w[pos];
    }
    return out;
}

Family::Family(std::string name, std::vector<Matrix> members,
               std::vector<std::string> labels)
    : name_(std::move(name)),
      members_(std::move(members)),
      labels_(std::move(labels)) {
    if (members_.empty()) throw DomainError("family needs at least one member");
    const Eigen::Index n = members_.front().rows();
    for (const Matrix& a : members_) {
        validate_matrix(a);
        if (a.rows() != n)
            throw ShapeError("family members must share one dimension");
    }
    if (labels_.empty()) {
        for (std::size_t i = 0; i < members_.size(); ++i)
            labels_.push_back("A" + std::to_string(i));
    }
    if (labels_.size() != members_.size())
        throw DomainError("label count must match member count");
}

const Matrix* ProductCache::find(const Word& w) const {
    auto it = entries_.find(w);
    if (it == entries_.end()) {
        ++misses_;
        return nullptr;
    }
    ++hits_;
    return &it->second;
}

void ProductCache::store(const Word& w, const Matrix& value) {
    entries_.emplace(w, value);
}

Matrix evaluate_word(const Family& f, const Word& w, ProductCache* cache) {
    if (w.empty()) throw MalformedWordError("word must be nonempty");
    for (int idx : w)
        if (idx < 0 || idx >= f.size())
            throw MalformedWordError("word index " + std::to_string(idx) +
                                     " out of range for family of size " +
                                     std::to_string(f.size()));
    // Longest cached prefix, then extend one member at a time.
    std::size_t start = 0;
    Matrix product;
    if (cache) {
        Word prefix = w;
        while (prefix.size() > 1) {
            if (const Matrix* hit = cache->find(prefix)) {
                product = *hit;
                start = prefix.size();
                break;
            }
            prefix.pop_back();
        }
    }
    if (start == 0) {
        product = f.member(w[0]);
        start = 1;
        if (cache) cache->store(Word(w.begin(), w.begin() + 1), product);
    }
    for (std::size_t i = start; i < w.size(); ++i) {
        product = multiply(product, f.member(w[i]));
        if (cache) cache->store(Word(w.begin(), w.begin() + i + 1), product);
    }
    return product;
}

Family scale_family(const Family& f, Complex alpha) {
    std::vector<Matrix> members;
    members.reserve(f.size());
    for (const Matrix& a : f.members()) members.push_back(alpha * a);
    return Family(f.name() + " (scaled)", std::move(members), f.labels());
}

Family similarity_transform(const Family& f, const Matrix& m, double* cond_out) {
    validate_matrix(m);
    if (m.rows() != f.dim())
        throw ShapeError("transform dimension does not match family");
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(m.rows() - 1);
    if (smin <= 1e-300 || smax / smin > 1e15)
        throw SingularTransformError("transform matrix is numerically singular");
    if (cond_out) *cond_out = smax / smin;
    const Matrix minv = svd.solve(Matrix::Identity(m.rows(), m.cols()));
    std::vector<Matrix> members;
    members.reserve(f.size());
    for (const Matrix& a : f.members())
        members.push_back(multiply(multiply(m, a), minv));
    return Family(f.name() + " (similar)", std::move(members), f.labels());
}

Family transpose_family(const Family& f) {
    std::vector<Matrix> members;
    members.reserve(f.size());
    for (const Matrix& a : f.members()) members.push_back(a.transpose());
    return Family(f.name() + "^T", std::move(members), f.labels());
}

Family conjugate_family(const Family& f) {
    std::vector<Matrix> members;
    members.reserve(f.size());
    for (const Matrix& a : f.members()) members.push_back(a.adjoint());
    return Family(f.name() + "^*", std::move(members), f.labels());
}

Family abs_family(const Family& f) {
    std::vector<Matrix> members;
    members.reserve(f.size());
    for (const Matrix& a : f.members()) {
        Matrix b(a.rows(), a.cols());
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            for (Eigen::Index j = 0; j < a.cols(); ++j)
                b(i, j) = Complex(std::abs(a(i, j)), 0.0);
        members.push_back(std::move(b));
    }
    return Family("|" + f.name() + "|", std::move(members), f.labels());
}

Family normalized_family(const Family& f, double r) {
    if (!(r > 0.0)) throw DomainError("normalization constant must be > 0");
    return scale_family(f, Complex(1.0 / r, 0.0));
}

Family block_upper_assemble(const std::vector<Family>& diagonal,
                            const std::vector<BlockCoupler>& couplers) {
    if (diagonal.empty()) throw DomainError("need at least one diagonal family");
    const int m = diagonal.front().size();
    int n_total = 0;
    std::vector<int> offset;
    for (const Family& f : diagonal) {
        if (f.size() != m)
            throw ShapeError("diagonal families must be index-aligned (same m)");
        offset.push_back(n_total);
        n_total += f.dim();
    }
    const int blocks = static_cast<int>(diagonal.size());
    for (const BlockCoupler& c : couplers) {
        if (c.row_block < 0 || c.col_block >= blocks ||
            c.row_block >= c.col_block)
            throw ShapeError("coupler must sit strictly above the diagonal");
        if (static_cast<int>(c.blocks.size()) != m)
            throw ShapeError("coupler needs one block per member");
        for (const Matrix& b : c.blocks)
            if (b.rows() != diagonal[c.row_block].dim() ||
                b.cols() != diagonal[c.col_block].dim())
                throw ShapeError("coupler block dimensions do not match");
    }

    std::vector<Matrix> members;
    members.reserve(m);
    for (int i = 0; i < m; ++i) {
        Matrix a = Matrix::Zero(n_total, n_total);
        for (int b = 0; b < blocks; ++b) {
            const Matrix& d = diagonal[b].member(i);
            a.block(offset[b], offset[b], d.rows(), d.cols()) = d;
        }
        for (const BlockCoupler& c : couplers)
            a.block(offset[c.row_block], offset[c.col_block],
                    c.blocks[i].rows(), c.blocks[i].cols()) = c.blocks[i];
        members.push_back(std::move(a));
    }
    return Family("block-assembled", std::move(members));
}

}  // namespace jsrlab
