#pragma once

#include <string>

#include "ramid/identity.hpp"

namespace ramid {

/// Single display equation, factors in stored order, scale 1 omitted:
///   \sqrt{2\left(1-\frac{1}{3^2}\right)...} = \left(1+\frac{1}{7}\right)...
/// Negative right-side values render as (1-\frac{1}{|w|}).
std::string render_latex(const IdentityTuple& id);
std::string render_latex(const VariationIdentity& v);

/// Plain ASCII: sqrt(2*(1-1/3^2)*...) = (1+1/7)*...
std::string render_text(const IdentityTuple& id);
std::string render_text(const VariationIdentity& v);

}  // namespace ramid
