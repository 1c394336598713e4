#ifndef RAMSEY_VERSION_HPP
#define RAMSEY_VERSION_HPP

namespace ramsey {

inline constexpr const char* kToolVersion = "0.1.0";

}

#endif
