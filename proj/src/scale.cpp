#include "ea/scale.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace ea {

namespace {

const char* variant_name(ScaleVariant v) {
    switch (v) {
        case ScaleVariant::positive_real: return "positive-real";
        case ScaleVariant::integer_shift: return "integer-shift";
        case ScaleVariant::nonzero_complex: return "nonzero-complex";
    }
    return "?";
}

void require_same_variant(const ScaleElement& a, const ScaleElement& b) {
    if (a.variant() != b.variant())
        throw ScaleMismatchError(std::string("incompatible scale groups: ") +
                                 variant_name(a.variant()) + " vs " + variant_name(b.variant()));
}

}  // namespace

std::string to_string(ScaleVariant v) { return variant_name(v); }

ScaleElement ScaleElement::positive_real(double value) {
    if (!(value > 0.0) || !std::isfinite(value))
        throw DomainError("positive-real scale element must be finite and > 0");
    return ScaleElement(Payload(std::in_place_index<0>, value));
}

ScaleElement ScaleElement::integer_shift(long long n) {
    return ScaleElement(Payload(std::in_place_index<1>, n));
}

ScaleElement ScaleElement::nonzero_complex(std::complex<double> z) {
    if (!(std::norm(z) > 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("nonzero-complex scale element must be finite with nonzero modulus");
    return ScaleElement(Payload(std::in_place_index<2>, z));
}

ScaleVariant ScaleElement::variant() const noexcept {
    switch (payload_.index()) {
        case 0: return ScaleVariant::positive_real;
        case 1: return ScaleVariant::integer_shift;
        default: return ScaleVariant::nonzero_complex;
    }
}

double ScaleElement::real() const {
    if (variant() != ScaleVariant::positive_real)
        throw ScaleMismatchError("scale element is not positive-real");
    return std::get<0>(payload_);
}

long long ScaleElement::integer() const {
    if (variant() != ScaleVariant::integer_shift)
        throw ScaleMismatchError("scale element is not integer-shift");
    return std::get<1>(payload_);
}

std::complex<double> ScaleElement::complex_value() const {
    if (variant() != ScaleVariant::nonzero_complex)
        throw ScaleMismatchError("scale element is not nonzero-complex");
    return std::get<2>(payload_);
}

std::complex<double> ScaleElement::multiplier() const {
    switch (variant()) {
        case ScaleVariant::positive_real: return {std::get<0>(payload_), 0.0};
        case ScaleVariant::nonzero_complex: return std::get<2>(payload_);
        case ScaleVariant::integer_shift:
            throw ScaleMismatchError("integer-shift scale has no complex multiplier");
    }
    throw ScaleMismatchError("unreachable");
}

double ScaleElement::magnitude() const { return std::abs(multiplier()); }

double ScaleElement::absolute_progress() const {
    switch (variant()) {
        case ScaleVariant::positive_real: return std::get<0>(payload_);
        case ScaleVariant::integer_shift: return static_cast<double>(std::get<1>(payload_));
        case ScaleVariant::nonzero_complex: return std::abs(std::get<2>(payload_));
    }
    return 0.0;
}

bool ScaleElement::is_neutral() const noexcept {
    switch (payload_.index()) {
        case 0: return std::get<0>(payload_) == 1.0;
        case 1: return std::get<1>(payload_) == 0;
        default: return std::get<2>(payload_) == std::complex<double>(1.0, 0.0);
    }
}

bool ScaleElement::operator==(const ScaleElement& other) const noexcept {
    return payload_ == other.payload_;
}

std::string to_string(const ScaleElement& e) {
    std::ostringstream os;
    os.precision(17);
    switch (e.variant()) {
        case ScaleVariant::positive_real: os << e.real(); break;
        case ScaleVariant::integer_shift: os << e.integer(); break;
        case ScaleVariant::nonzero_complex: {
            auto z = e.complex_value();
            os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
            break;
        }
    }
    return os.str();
}

ScaleElement compose(const ScaleElement& a, const ScaleElement& b) {
    require_same_variant(a, b);
    switch (a.variant()) {
        case ScaleVariant::positive_real:
            return ScaleElement::positive_real(a.real() * b.real());
        case ScaleVariant::integer_shift:
            return ScaleElement::integer_shift(a.integer() + b.integer());
        case ScaleVariant::nonzero_complex:
            return ScaleElement::nonzero_complex(a.complex_value() * b.complex_value());
    }
    throw ScaleMismatchError("unreachable");
}

ScaleElement invert(const ScaleElement& a) {
    switch (a.variant()) {
        case ScaleVariant::positive_real:
            return ScaleElement::positive_real(1.0 / a.real());
        case ScaleVariant::integer_shift:
            return ScaleElement::integer_shift(-a.integer());
        case ScaleVariant::nonzero_complex:
            return ScaleElement::nonzero_complex(1.0 / a.complex_value());
    }
    throw ScaleMismatchError("unreachable");
}

ScaleElement neutral(ScaleVariant v) {
    switch (v) {
        case ScaleVariant::positive_real: return ScaleElement::positive_real(1.0);
        case ScaleVariant::integer_shift: return ScaleElement::integer_shift(0);
        case ScaleVariant::nonzero_complex:
            return ScaleElement::nonzero_complex({1.0, 0.0});
    }
    throw DomainError("unknown scale variant");
}

void validate(const AbsoluteNet& net) {
    if (net.count < 2) throw DomainError("net count must be >= 2");
    if (net.start.variant() != net.ratio.variant())
        throw ScaleMismatchError("net start and ratio belong to different scale groups");
    const ScaleElement next = compose(net.start, net.ratio);
    switch (net.start.variant()) {
        case ScaleVariant::positive_real:
        case ScaleVariant::nonzero_complex:
            if (!(next.absolute_progress() < net.start.absolute_progress()))
                throw DomainError("net ratio does not contract toward the absolute 0");
            break;
        case ScaleVariant::integer_shift:
            if (!(net.ratio.integer() < 0))
                throw DomainError("net ratio does not contract toward the absolute -inf");
            break;
    }
}

std::vector<ScaleElement> net_toward_absolute(const AbsoluteNet& net) {
    validate(net);
    std::vector<ScaleElement> out;
    out.reserve(static_cast<std::size_t>(net.count));
    ScaleElement current = net.start;
    out.push_back(current);
    for (int k = 1; k < net.count; ++k) {
        current = compose(current, net.ratio);
        if (!(current.absolute_progress() < out.back().absolute_progress()))
            throw DomainError("net is not strictly monotone toward the absolute");
        out.push_back(current);
    }
    return out;
}

AbsoluteNet default_net(ScaleVariant v) {
    switch (v) {
        case ScaleVariant::positive_real:
            return {ScaleElement::positive_real(0.5), ScaleElement::positive_real(0.5), 20};
        case ScaleVariant::integer_shift:
            return {ScaleElement::integer_shift(-1), ScaleElement::integer_shift(-1), 20};
        case ScaleVariant::nonzero_complex: {
            const double theta = std::numbers::pi / 7.0;
            return {ScaleElement::nonzero_complex({0.5, 0.0}),
                    ScaleElement::nonzero_complex(0.5 * std::polar(1.0, theta)), 20};
        }
    }
    throw DomainError("unknown scale variant");
}

}  // namespace ea
