#include "isgkit/partial_bijection.hpp"

#include <algorithm>
#include <charconv>

#include "isgkit/error.hpp"

namespace isgkit {

PartialBijection::PartialBijection(std::size_t degree) : images_(degree, undefined)
{
}

PartialBijection PartialBijection::from_images(std::vector<Point> images)
{
    const auto n = static_cast<Point>(images.size());
    std::vector<bool> hit(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        Point v = images[i];
        if (v == undefined)
            continue;
        if (v < 0 || v >= n)
            throw InputError("image " + std::to_string(v) + " of point " + std::to_string(i) +
                             " outside {0.." + std::to_string(n - 1) + "}");
        if (hit[static_cast<std::size_t>(v)])
            throw InputError("not injective: point " + std::to_string(v) + " is hit twice");
        hit[static_cast<std::size_t>(v)] = true;
    }
    PartialBijection p;
    p.images_ = std::move(images);
    return p;
}

PartialBijection PartialBijection::identity(std::size_t degree)
{
    PartialBijection p(degree);
    for (std::size_t i = 0; i < degree; ++i)
        p.images_[i] = static_cast<Point>(i);
    return p;
}

PartialBijection PartialBijection::partial_identity(std::size_t degree, std::span<const Point> domain)
{
    std::vector<Point> images(degree, undefined);
    for (Point i : domain) {
        if (i < 0 || static_cast<std::size_t>(i) >= degree)
            throw InputError("domain point " + std::to_string(i) + " outside degree " +
                             std::to_string(degree));
        images[static_cast<std::size_t>(i)] = i;
    }
    return from_images(std::move(images));
}

PartialBijection PartialBijection::parse(std::string_view text)
{
    auto fail = [&] { return InputError("malformed partial bijection '" + std::string(text) + "'"); };
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw fail();
    text = text.substr(1, text.size() - 2);
    std::vector<Point> images;
    if (text.empty())
        return from_images(std::move(images));
    while (true) {
        auto comma = text.find(',');
        auto token = text.substr(0, comma);
        if (token == "-") {
            images.push_back(undefined);
        } else {
            Point v = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
                throw fail();
            images.push_back(v);
        }
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return from_images(std::move(images));
}

std::size_t PartialBijection::rank() const noexcept
{
    return static_cast<std::size_t>(std::count_if(images_.begin(), images_.end(),
                                                  [](Point v) { return v != undefined; }));
}

std::vector<PartialBijection::Point> PartialBijection::domain() const
{
    std::vector<Point> out;
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != undefined)
            out.push_back(static_cast<Point>(i));
    return out;
}

std::vector<PartialBijection::Point> PartialBijection::range() const
{
    std::vector<Point> out;
    for (Point v : images_)
        if (v != undefined)
            out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::string PartialBijection::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i != 0)
            s += ',';
        s += images_[i] == undefined ? std::string("-") : std::to_string(images_[i]);
    }
    s += ']';
    return s;
}

PartialBijection compose(const PartialBijection& p, const PartialBijection& q)
{
    if (p.degree() != q.degree())
        throw InputError("cannot compose partial bijections of degree " + std::to_string(p.degree()) +
                         " and " + std::to_string(q.degree()));
    std::vector<PartialBijection::Point> images(q.degree(), PartialBijection::undefined);
    for (std::size_t i = 0; i < q.degree(); ++i)
        if (auto mid = q(i); mid != PartialBijection::undefined)
            images[i] = p(static_cast<std::size_t>(mid));
    return PartialBijection::from_images(std::move(images));
}

PartialBijection invert(const PartialBijection& p)
{
    std::vector<PartialBijection::Point> images(p.degree(), PartialBijection::undefined);
    for (std::size_t i = 0; i < p.degree(); ++i)
        if (auto v = p(i); v != PartialBijection::undefined)
            images[static_cast<std::size_t>(v)] = static_cast<PartialBijection::Point>(i);
    return PartialBijection::from_images(std::move(images));
}

std::vector<PartialBijection> all_partial_bijections(std::size_t degree)
{
    // Odometer over {undefined, 0..n-1}^n, keeping the injective sequences.
    // The odometer runs in lexicographic order, so the output is already canonical.
    std::vector<PartialBijection> out;
    const auto n = static_cast<PartialBijection::Point>(degree);
    std::vector<PartialBijection::Point> digits(degree, PartialBijection::undefined);
    while (true) {
        std::vector<bool> hit(degree, false);
        bool injective = true;
        for (auto v : digits) {
            if (v == PartialBijection::undefined)
                continue;
            if (hit[static_cast<std::size_t>(v)]) {
                injective = false;
                break;
            }
            hit[static_cast<std::size_t>(v)] = true;
        }
        if (injective)
            out.push_back(PartialBijection::from_images(digits));

        std::size_t k = degree;
        while (k > 0 && digits[k - 1] == n - 1) {
            digits[k - 1] = PartialBijection::undefined;
            --k;
        }
        if (k == 0)
            break;
        ++digits[k - 1];
    }
    return out;
}

}  // namespace isgkit
