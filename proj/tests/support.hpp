#pragma once

#include <string_view>

#include "clusterax/io.hpp"

namespace support {

inline clusterax::TransitFunction transit(std::string_view text,
                                          clusterax::DefaultPair fill = clusterax::DefaultPair::universe) {
    return clusterax::parse_transit(text, fill);
}

inline clusterax::SetSystem sets(std::string_view text, bool add_singletons = true) {
    return clusterax::parse_set_system(text, add_singletons);
}

}  // namespace support
