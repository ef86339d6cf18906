#pragma once

#include <stdexcept>
#include <string>

namespace gzlab {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define GZLAB_DEFINE_ERROR(Name)                                          \
    struct Name : Error {                                                 \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

GZLAB_DEFINE_ERROR(ParseError);
GZLAB_DEFINE_ERROR(ReferenceError);
GZLAB_DEFINE_ERROR(MissingEmbedding);
GZLAB_DEFINE_ERROR(NotMd2);
GZLAB_DEFINE_ERROR(CombinatorialBlowup);
GZLAB_DEFINE_ERROR(IncompleteClasses);
GZLAB_DEFINE_ERROR(ConvergenceFailure);
GZLAB_DEFINE_ERROR(QuadratureFailure);
GZLAB_DEFINE_ERROR(NoBracket);
GZLAB_DEFINE_ERROR(OdeFailure);
GZLAB_DEFINE_ERROR(OpenContour);
GZLAB_DEFINE_ERROR(DegenerateIntersection);
GZLAB_DEFINE_ERROR(GluingMismatch);
GZLAB_DEFINE_ERROR(NonTransverse);
GZLAB_DEFINE_ERROR(BasepointMismatch);
GZLAB_DEFINE_ERROR(NotClosed);
GZLAB_DEFINE_ERROR(NotTangent);
GZLAB_DEFINE_ERROR(ShapeMismatch);
GZLAB_DEFINE_ERROR(NotChainMap);
GZLAB_DEFINE_ERROR(NotCochainComplex);

#undef GZLAB_DEFINE_ERROR

} // namespace gzlab
