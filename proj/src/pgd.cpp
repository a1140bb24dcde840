#include "spgenus/pgd.hpp"

#include <algorithm>

#include "spgenus/errors.hpp"

namespace spgenus {

namespace {
const BigInt kZero = 0;
}

GenusDistribution::GenusDistribution(std::vector<BigInt> counts) : counts_(std::move(counts)) {
    for (const BigInt& c : counts_)
        if (c < 0)
            throw InternalError("negative embedding count");
    while (!counts_.empty() && counts_.back() == 0)
        counts_.pop_back();
}

const BigInt& GenusDistribution::at(int genus) const {
    if (genus < 0 || genus >= size())
        return kZero;
    return counts_[static_cast<size_t>(genus)];
}

int GenusDistribution::min_genus() const {
    for (int i = 0; i < size(); ++i)
        if (counts_[static_cast<size_t>(i)] != 0)
            return i;
    return -1;
}

BigInt GenusDistribution::total() const {
    BigInt sum = 0;
    for (const BigInt& c : counts_)
        sum += c;
    return sum;
}

bool GenusDistribution::support_is_consecutive() const {
    // canonical form has a nonzero tail, so only interior gaps can occur
    for (int i = min_genus(); i >= 0 && i < size(); ++i)
        if (counts_[static_cast<size_t>(i)] == 0)
            return false;
    return true;
}

std::vector<std::string> GenusDistribution::to_decimal_strings() const {
    std::vector<std::string> out;
    out.reserve(counts_.size());
    for (const BigInt& c : counts_)
        out.push_back(c.str());
    return out;
}

GenusDistribution gd_convolve(const GenusDistribution& a, const GenusDistribution& b) {
    if (a.empty() || b.empty())
        return {};
    std::vector<BigInt> out(static_cast<size_t>(a.size() + b.size() - 1), 0);
    for (int i = 0; i < a.size(); ++i) {
        if (a.at(i) == 0)
            continue;
        for (int j = 0; j < b.size(); ++j)
            if (b.at(j) != 0)
                out[static_cast<size_t>(i + j)] += a.at(i) * b.at(j);
    }
    return GenusDistribution(std::move(out));
}

GenusDistribution gd_add(const GenusDistribution& a, const GenusDistribution& b) {
    std::vector<BigInt> out(static_cast<size_t>(std::max(a.size(), b.size())), 0);
    for (int i = 0; i < static_cast<int>(out.size()); ++i)
        out[static_cast<size_t>(i)] = a.at(i) + b.at(i);
    return GenusDistribution(std::move(out));
}

GenusDistribution gd_scale(const GenusDistribution& a, const BigInt& factor) {
    if (factor < 0)
        throw InternalError("negative scale factor");
    std::vector<BigInt> out(a.counts());
    for (BigInt& c : out)
        c *= factor;
    return GenusDistribution(std::move(out));
}

GenusDistribution gd_shift(const GenusDistribution& a, int k) {
    if (k < 0)
        throw InternalError("negative genus shift");
    if (a.empty())
        return {};
    std::vector<BigInt> out(static_cast<size_t>(a.size() + k), 0);
    for (int i = 0; i < a.size(); ++i)
        out[static_cast<size_t>(i + k)] = a.at(i);
    return GenusDistribution(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const GenusDistribution& gd) {
    os << '[';
    for (int i = 0; i < gd.size(); ++i) {
        if (i > 0)
            os << ", ";
        os << gd.at(i);
    }
    return os << ']';
}

std::ostream& operator<<(std::ostream& os, const UUPartials& p) {
    return os << "{uu_dot " << p.dot << ", uu_prime " << p.prime << '}';
}

std::ostream& operator<<(std::ostream& os, const ClosurePartials& c) {
    return os << "{ss_dot " << c.ss_dot << ", ss_prime " << c.ss_prime << ", dd_dprime "
              << c.dd_dprime << '}';
}

} // namespace spgenus
