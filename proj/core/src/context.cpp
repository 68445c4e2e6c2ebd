#include "arakelov/context.hpp"

#include <cmath>

namespace arakelov {

void EvalContext::validate() const {
    if (precision_bits < 24)
        throw ConfigurationError("precision_bits must be at least 24");
    if (!(tol > 0.0))
        throw ConfigurationError("tol must be positive");
    if (tol < std::ldexp(1.0, 1 - precision_bits))
        throw ConfigurationError("tol is below the resolution of precision_bits");
    if (max_terms < 1)
        throw ConfigurationError("max_terms must be at least 1");
    if (threads < 1)
        throw ConfigurationError("threads must be at least 1");
}

}  // namespace arakelov
