#include "zeno/errors.hpp"

namespace zeno {

QuadratureFailure::QuadratureFailure(const std::string& what, double previous, double last)
    : Error(what), previous_(previous), last_(last) {}

OutOfRegime::OutOfRegime(const std::string& what, double survival, double validity)
    : Error(what), survival_(survival), validity_(validity) {}

}  // namespace zeno
