#include "gbinom/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace gbinom {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
    mult_.assign(static_cast<std::size_t>(largest()) + 1, 0);
    for (int p : parts_)
        ++mult_[static_cast<std::size_t>(p)];
}

int Partition::multiplicity(int i) const noexcept
{
    if (i <= 0 || i >= static_cast<int>(mult_.size()))
        return 0;
    return mult_[static_cast<std::size_t>(i)];
}

namespace {

void descend(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        descend(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b)
{
    std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

} // namespace

std::vector<Partition> partitions_of(int n)
{
    if (n < 0)
        throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> prefix;
    descend(n, n, prefix, out);
    return out;
}

BigInt z_mu(const Partition& mu)
{
    BigInt acc(1);
    for (int i = 1; i <= mu.largest(); ++i) {
        int m = mu.multiplicity(i);
        if (m == 0)
            continue;
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m));
        acc *= power * factorial(m);
    }
    return acc;
}

BigInt ferrers_choose(const Partition& mu, int p)
{
    if (p < mu.length() || p > mu.size())
        return 0;
    std::vector<BigInt> gen{1};
    for (int row : mu.parts()) {
        // (1+x)^row - 1
        std::vector<BigInt> factor(static_cast<std::size_t>(row) + 1);
        for (int j = 0; j <= row; ++j)
            factor[static_cast<std::size_t>(j)] = binomial(row, j);
        factor[0] = 0;
        gen = poly_mul(gen, factor);
    }
    return gen[static_cast<std::size_t>(p)];
}

std::string to_string(const Partition& mu)
{
    std::string out;
    for (std::size_t i = 0; i < mu.parts().size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(mu.parts()[i]);
    }
    return out;
}

Partition parse_partition(std::string_view text)
{
    std::vector<int> parts;
    if (text.empty())
        return Partition{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        BigInt value = parse_int(field);
        if (!value.fits_sint_p())
            throw std::invalid_argument("partition part out of range");
        parts.push_back(static_cast<int>(value.get_si()));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

} // namespace gbinom
