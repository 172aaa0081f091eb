#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ea/errors.hpp"

namespace ea {

/// The three implemented commutative scale groups.
enum class ScaleVariant {
    positive_real,    // ((0,inf), *), absolute at 0
    integer_shift,    // (Z, +), absolute at -inf
    nonzero_complex,  // (C \ {0}, *), absolute at 0
};

std::string to_string(ScaleVariant v);

/// One element of a scale group. Variants never mix inside a group expression.
class ScaleElement {
public:
    static ScaleElement positive_real(double value);
    static ScaleElement integer_shift(long long n);
    static ScaleElement nonzero_complex(std::complex<double> z);

    ScaleVariant variant() const noexcept;

    double real() const;                        // positive_real payload
    long long integer() const;                  // integer_shift payload
    std::complex<double> complex_value() const; // nonzero_complex payload

    /// Payload as a complex multiplier (multiplicative variants only).
    std::complex<double> multiplier() const;

    /// |multiplier| (multiplicative variants only).
    double magnitude() const;

    /// A real coordinate that strictly decreases along any net toward the absolute:
    /// the value for positive reals, the modulus for complex, n itself for integers.
    double absolute_progress() const;

    bool is_neutral() const noexcept;

    bool operator==(const ScaleElement& other) const noexcept;

private:
    using Payload = std::variant<double, long long, std::complex<double>>;
    explicit ScaleElement(Payload p) : payload_(std::move(p)) {}
    Payload payload_;
};

std::string to_string(const ScaleElement& e);

/// The group operation (product of reals, sum of integers, product of complex numbers).
ScaleElement compose(const ScaleElement& a, const ScaleElement& b);

/// Group inverse: compose(a, invert(a)) == neutral(a.variant()).
ScaleElement invert(const ScaleElement& a);

/// Two-sided identity of the given scale group.
ScaleElement neutral(ScaleVariant v);

/// A finite net running toward the absolute: start, start*ratio, start*ratio^2, ...
/// (additively for integer_shift). The ratio must contract toward the absolute.
struct AbsoluteNet {
    ScaleElement start;
    ScaleElement ratio;
    int count = 0;
};

/// Throws DomainError unless the net contracts strictly toward the absolute and count >= 2.
void validate(const AbsoluteNet& net);

/// The generated sequence, each term strictly closer to the absolute than its predecessor.
std::vector<ScaleElement> net_toward_absolute(const AbsoluteNet& net);

/// Default experiment nets: 0.5 * 0.5^k for 20 steps (positive reals), -1, -2, ... for
/// 20 steps (integers), modulus-halving with a fixed pi/7 rotation per step (complex).
AbsoluteNet default_net(ScaleVariant v);

}  // namespace ea
