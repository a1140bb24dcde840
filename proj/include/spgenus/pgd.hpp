#ifndef SPGENUS_PGD_HPP
#define SPGENUS_PGD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace spgenus {

// Embedding counts grow as 2^(#trivalent vertices), so everything is exact
// arbitrary-precision arithmetic; counts never pass through floating point.
using BigInt = boost::multiprecision::cpp_int;

// Dense sequence of nonnegative big-integer counts indexed by genus, in
// canonical form (trailing zeros trimmed).  Doubles as one partial of a
// partitioned genus distribution.  Immutable value semantics.
class GenusDistribution {
public:
    GenusDistribution() = default;
    GenusDistribution(std::initializer_list<BigInt> counts)
        : GenusDistribution(std::vector<BigInt>(counts)) {}
    explicit GenusDistribution(std::vector<BigInt> counts);

    // counts_[i] for i < size, else 0
    const BigInt& at(int genus) const;
    int size() const { return static_cast<int>(counts_.size()); }
    bool empty() const { return counts_.empty(); }
    // largest genus with a nonzero count; -1 when empty
    int max_genus() const { return size() - 1; }
    // smallest genus with a nonzero count; -1 when empty
    int min_genus() const;

    BigInt total() const;
    // Interpolation principle: nonzero support is one consecutive interval.
    // Checked by callers, never assumed.
    bool support_is_consecutive() const;

    const std::vector<BigInt>& counts() const { return counts_; }
    std::vector<std::string> to_decimal_strings() const;

    bool operator==(const GenusDistribution&) const = default;

private:
    std::vector<BigInt> counts_;
};

// c_i = sum_{j+k=i} a_j * b_k
GenusDistribution gd_convolve(const GenusDistribution& a, const GenusDistribution& b);
GenusDistribution gd_add(const GenusDistribution& a, const GenusDistribution& b);
GenusDistribution gd_scale(const GenusDistribution& a, const BigInt& factor);
// index shift by k >= 0 (genus increment)
GenusDistribution gd_shift(const GenusDistribution& a, int k);

// pgd of a double-rooted graph whose two roots are univalent:
//   dot   = uu*_i  (roots on different fb-walks)
//   prime = uu'_i  (roots on the same fb-walk)
struct UUPartials {
    GenusDistribution dot;
    GenusDistribution prime;

    // g_i = uu*_i + uu'_i
    GenusDistribution gd() const { return gd_add(dot, prime); }
    BigInt total() const { return dot.total() + prime.total(); }
    bool operator==(const UUPartials&) const = default;
};

// pgd after the first unmodified parallel join; both roots bivalent.
struct ClosurePartials {
    GenusDistribution ss_dot;    // ss*_i: the walks twice incident at p and q differ
    GenusDistribution ss_prime;  // ss'_i: one walk twice incident at both
    GenusDistribution dd_dprime; // dd''_i: the same two walks twice incident at both

    BigInt total() const { return ss_dot.total() + ss_prime.total() + dd_dprime.total(); }
    bool operator==(const ClosurePartials&) const = default;
};

std::ostream& operator<<(std::ostream& os, const GenusDistribution& gd);
std::ostream& operator<<(std::ostream& os, const UUPartials& p);
std::ostream& operator<<(std::ostream& os, const ClosurePartials& c);

} // namespace spgenus

#endif
