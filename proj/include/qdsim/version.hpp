#ifndef QDSIM_VERSION_HPP
#define QDSIM_VERSION_HPP

namespace qdsim {

inline constexpr const char* version = "1.0.0";

}

#endif
