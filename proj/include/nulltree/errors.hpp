#pragma once

#include <stdexcept>
#include <string>

namespace nulltree {

/// Base class of every error raised by the library. Callers that only need
/// "input was bad" vs "something else" can catch this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define NULLTREE_DEFINE_ERROR(Name)                    \
    class Name : public Error {                        \
    public:                                            \
        explicit Name(const std::string& what)         \
            : Error(#Name ": " + what) {}              \
    }

// Input / tree construction.
NULLTREE_DEFINE_ERROR(ParseError);
NULLTREE_DEFINE_ERROR(NotATree);
NULLTREE_DEFINE_ERROR(InvalidVertex);
NULLTREE_DEFINE_ERROR(LabelClash);

// Tree surgery against a decomposition.
NULLTREE_DEFINE_ERROR(NotConnectionEdge);
NULLTREE_DEFINE_ERROR(EndpointOutsidePart);

// Linear algebra.
NULLTREE_DEFINE_ERROR(EmptyInput);
NULLTREE_DEFINE_ERROR(DimensionMismatch);

// Matchings and S-tree procedures.
NULLTREE_DEFINE_ERROR(InvalidMatching);
NULLTREE_DEFINE_ERROR(Truncated);
NULLTREE_DEFINE_ERROR(NotSTree);
NULLTREE_DEFINE_ERROR(NotMaximum);
NULLTREE_DEFINE_ERROR(VertexNotSupported);
NULLTREE_DEFINE_ERROR(VertexUnsaturated);
NULLTREE_DEFINE_ERROR(EdgeNotInMatching);
NULLTREE_DEFINE_ERROR(CoreTooLarge);
NULLTREE_DEFINE_ERROR(EmptyCore);
NULLTREE_DEFINE_ERROR(TooLarge);

#undef NULLTREE_DEFINE_ERROR

}  // namespace nulltree
