#include "p322/regular.hpp"

#include <algorithm>
#include <stdexcept>

namespace p322 {

std::optional<RegularFactorization> regular_factorization(const Int& n) {
    if (n < 1) throw std::domain_error("regular_factorization: argument must be positive");
    Int m = n;
    RegularFactorization f;
    while (m % 2 == 0) { m /= 2; ++f.alpha; }
    while (m % 3 == 0) { m /= 3; ++f.beta; }
    while (m % 5 == 0) { m /= 5; ++f.gamma; }
    if (m != 1) return std::nullopt;
    return f;
}

std::optional<RegularFactorization> regular_factorization(const ExactRatio& r) {
    if (r <= 0) throw std::domain_error("regular_factorization: argument must be positive");
    auto top = regular_factorization(numerator(r));
    auto bottom = regular_factorization(denominator(r));
    if (!top || !bottom) return std::nullopt;
    return RegularFactorization{top->alpha - bottom->alpha, top->beta - bottom->beta,
                                top->gamma - bottom->gamma};
}

bool is_regular(const Int& n) { return n >= 1 && regular_factorization(n).has_value(); }
bool is_regular(const ExactRatio& r) { return r > 0 && regular_factorization(r).has_value(); }

Int regular_value(const RegularFactorization& f) {
    if (f.alpha < 0 || f.beta < 0 || f.gamma < 0)
        throw std::domain_error("regular_value: negative exponent");
    Int v = 1;
    for (long i = 0; i < f.alpha; ++i) v *= 2;
    for (long i = 0; i < f.beta; ++i) v *= 3;
    for (long i = 0; i < f.gamma; ++i) v *= 5;
    return v;
}

std::vector<Int> regular_numbers_upto(const Int& limit) {
    std::vector<Int> out;
    for (Int p2 = 1; p2 <= limit; p2 *= 2)
        for (Int p3 = p2; p3 <= limit; p3 *= 3)
            for (Int p5 = p3; p5 <= limit; p5 *= 5) out.push_back(p5);
    std::sort(out.begin(), out.end());
    return out;
}

Int regular_part(Int n) {
    if (n < 1) throw std::domain_error("regular_part: argument must be positive");
    Int r = 1;
    while (n % 2 == 0) { n /= 2; r *= 2; }
    while (n % 3 == 0) { n /= 3; r *= 3; }
    while (n % 5 == 0) { n /= 5; r *= 5; }
    return r;
}

std::optional<Int> integer_sqrt_exact(const Int& n) {
    if (n < 1) throw std::domain_error("integer_sqrt_exact: argument must be positive");
    Int root = boost::multiprecision::sqrt(n);
    if (root * root == n) return root;
    return std::nullopt;
}

int power_of_sixty_clearing(const Int& denom) {
    auto f = regular_factorization(denom);
    if (!f) throw std::domain_error("power_of_sixty_clearing: denominator not regular");
    // 60^k = 2^2k 3^k 5^k
    long k = std::max({(f->alpha + 1) / 2, f->beta, f->gamma, 0L});
    return static_cast<int>(k);
}

std::pair<Int, int> floating_mantissa(const ExactRatio& v) {
    if (v <= 0) throw std::domain_error("floating_mantissa: argument must be positive");
    const int k = power_of_sixty_clearing(denominator(v));
    Int scale = 1;
    for (int i = 0; i < k; ++i) scale *= 60;
    Int m = numerator(v) * scale / denominator(v);
    int exponent = -k;
    while (m % 60 == 0) {
        m /= 60;
        ++exponent;
    }
    return {m, exponent};
}

std::pair<Int, Int> common_scale_pair(const ExactRatio& a, const ExactRatio& b) {
    int k = std::max(power_of_sixty_clearing(denominator(a)),
                     power_of_sixty_clearing(denominator(b)));
    Int scale = 1;
    for (int i = 0; i < k; ++i) scale *= 60;
    Int first = numerator(a) * scale / denominator(a);
    Int second = numerator(b) * scale / denominator(b);
    while (first % 60 == 0 && second % 60 == 0) {
        first /= 60;
        second /= 60;
    }
    return {first, second};
}

}  // namespace p322
