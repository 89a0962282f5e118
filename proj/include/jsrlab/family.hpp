#ifndef JSRLAB_FAMILY_HPP
#define JSRLAB_FAMILY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jsrlab/matrix.hpp"

namespace jsrlab {

/// Index sequence into a family; names the product A_{w0} A_{w1} ... A_{wk-1}
/// with strict left-to-right association.
using Word = std::vector<int>;

std::string word_to_string(const Word& w);

/// Lexicographically least rotation of w.
Word canonical_rotation(const Word& w);

/// True when w equals its own lexicographically least rotation.
bool is_canonical_necklace(const Word& w);

/// True when w is a repetition of a strictly shorter word.
bool is_power_of_shorter_word(const Word& w);

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// All m^k words of length k in lexicographic order.
std::vector<Word> all_words(int m, int k, std::uint64_t budget = kDefaultBudget);

/// One canonical representative per cyclic equivalence class, lex order.
/// Sufficient for spectral-radius bounds because rho(P) is invariant under
/// rotation of the defining word (checked as a property, not assumed).
std::vector<Word> necklaces(int m, int k, std::uint64_t budget = kDefaultBudget);

/// Finite ordered family of same-size complex square matrices.
/// Members are immutable after construction.
class Family {
public:
    Family(std::string name, std::vector<Matrix> members,
           std::vector<std::string> labels = {});

    const std::string& name() const { return name_; }
    int size() const { return static_cast<int>(members_.size()); }
    int dim() const { return static_cast<int>(members_.front().rows()); }
    const Matrix& member(int i) const { return members_.at(i); }
    const std::vector<Matrix>& members() const { return members_; }
    const std::string& label(int i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::string name_;
    std::vector<Matrix> members_;
    std::vector<std::string> labels_;
};

/// Memoizes word prefixes to their evaluated products.
class ProductCache {
public:
    const Matrix* find(const Word& w) const;
    void store(const Word& w, const Matrix& value);
    std::uint64_t hits() const { return hits_; }
    std::uint64_t misses() const { return misses_; }

private:
    std::map<Word, Matrix> entries_;
    mutable std::uint64_t hits_ = 0;
    mutable std::uint64_t misses_ = 0;
};

/// Product named by w, optionally memoized. Results are bit-identical with
/// and without the cache (fixed left-to-right evaluation order).
Matrix evaluate_word(const Family& f, const Word& w,
                     ProductCache* cache = nullptr);

Family scale_family(const Family& f, Complex alpha);

/// Members conjugated as M A_i M^{-1}. Throws SingularTransformError when M
/// is numerically singular; fills cond_out (sigma1/sigman) when provided.
Family similarity_transform(const Family& f, const Matrix& m,
                            double* cond_out = nullptr);

Family transpose_family(const Family& f);

/// Member-wise conjugate transpose.
Family conjugate_family(const Family& f);

/// Entry-wise modulus.
Family abs_family(const Family& f);

/// A_i / r for r > 0.
Family normalized_family(const Family& f, double r);

struct BlockCoupler {
    int row_block;
    int col_block;                // row_block < col_block
    std::vector<Matrix> blocks;   // one per member index
};

/// Assembles block upper triangular members from index-aligned diagonal
/// families plus optional off-diagonal couplers.
Family block_upper_assemble(const std::vector<Family>& diagonal,
                            const std::vector<BlockCoupler>& couplers = {});

}  // namespace jsrlab

#endif  // JSRLAB_FAMILY_HPP
