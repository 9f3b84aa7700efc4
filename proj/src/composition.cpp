#include "gbinom/composition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gbinom/exactnum.hpp"

namespace gbinom {

Composition::Composition(std::vector<int> r) : r_(std::move(r))
{
    if (r_.empty())
        throw std::invalid_argument("composition must have at least one entry");
    for (int v : r_) {
        if (v < 0)
            throw std::invalid_argument("composition entries must be nonnegative");
        total_ += v;
    }
    if (total_ == 0)
        throw std::invalid_argument("composition must have a positive total");
}

bool Composition::has_zero() const noexcept
{
    return std::find(r_.begin(), r_.end(), 0) != r_.end();
}

Composition Composition::stripped() const
{
    std::vector<int> out;
    std::copy_if(r_.begin(), r_.end(), std::back_inserter(out), [](int v) { return v != 0; });
    return Composition(std::move(out));
}

Composition Composition::sorted() const
{
    std::vector<int> out = r_;
    std::sort(out.begin(), out.end(), std::greater<>());
    return Composition(std::move(out));
}

std::string to_string(const Composition& r)
{
    std::string out;
    for (std::size_t i = 0; i < r.parts().size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(r.parts()[i]);
    }
    return out;
}

Composition parse_composition(std::string_view text)
{
    std::vector<int> r;
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        auto field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        BigInt v = parse_int(field);
        if (!v.fits_sint_p())
            throw std::invalid_argument("composition entry out of range");
        r.push_back(static_cast<int>(v.get_si()));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Composition(std::move(r));
}

std::vector<Composition> compositions_up_to(int m_max, int r_max, int min_entry)
{
    std::vector<Composition> out;
    if (r_max < min_entry)
        return out;
    for (int m = 1; m <= m_max; ++m) {
        std::vector<int> r(static_cast<std::size_t>(m), min_entry);
        while (true) {
            int total = 0;
            for (int v : r)
                total += v;
            if (total > 0)
                out.emplace_back(r);
            // odometer, last entry fastest
            int i = m - 1;
            while (i >= 0 && r[static_cast<std::size_t>(i)] == r_max) {
                r[static_cast<std::size_t>(i)] = min_entry;
                --i;
            }
            if (i < 0)
                break;
            ++r[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

} // namespace gbinom
